//! Text formats accepted on the command line: function expressions in `x`
//! and `y`, polynomials in `x`, and divisors.
//!
//! Expressions are sums and products of rational constants, `x`, `y` and
//! parenthesized expressions, with `^` for nonnegative integer powers and
//! `/` for division by a nonzero constant. Positions in errors are byte
//! offsets into the input.

use num_traits::Zero;
use primpoints::exactalg::{parse_rational, RatPolynomial, Rational};
use primpoints::hypcurve::{places_over_x, CurveFunction, Divisor, HyperellipticCurve, Place, PlaceKind};

use crate::error::CliError;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                s.push(c);
                chars.next();
            }
            out.push((i, Tok::Num(s)));
        } else if ch.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !c.is_ascii_alphanumeric() && c != '_' {
                    break;
                }
                s.push(c);
                chars.next();
            }
            out.push((i, Tok::Ident(s)));
        } else if "+-*/^(),=".contains(ch) {
            out.push((i, Tok::Sym(ch)));
            chars.next();
        } else {
            return Err(CliError::parse(i, format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

/// `a + b y`, reduced with `y^2 = h` when a curve is present.
#[derive(Clone, Debug, PartialEq)]
struct Value {
    a: RatPolynomial,
    b: RatPolynomial,
}

impl Value {
    fn constant(c: Rational) -> Self {
        Value { a: RatPolynomial::constant(c), b: RatPolynomial::zero() }
    }

    fn as_constant(&self) -> Option<Rational> {
        (self.b.is_zero() && self.a.deg() == 0).then(|| self.a.coeff(0))
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    curve: Option<&'a HyperellipticCurve>,
    var: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &str, curve: Option<&'a HyperellipticCurve>, var: &'a str) -> Result<Self, CliError> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len(), curve, var })
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(CliError::parse(self.at(), format!("expected '{c}'")))
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<(), CliError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == name => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(CliError::parse(self.at(), format!("expected '{name}'"))),
        }
    }

    fn finish(&self) -> Result<(), CliError> {
        if self.pos < self.toks.len() {
            return Err(CliError::parse(self.at(), "unexpected trailing input"));
        }
        Ok(())
    }

    fn mul(&self, p: &Value, q: &Value) -> Value {
        let mut a = &p.a * &q.a;
        let b = &(&p.a * &q.b) + &(&p.b * &q.a);
        let yy = &p.b * &q.b;
        if !yy.is_zero() {
            let h = self.curve.expect("y only parses with a curve").h();
            a = &a + &(&yy * h);
        }
        Value { a, b }
    }

    fn expr(&mut self) -> Result<Value, CliError> {
        let mut acc = if self.eat('-') {
            let t = self.term()?;
            Value { a: -&t.a, b: -&t.b }
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = Value { a: &acc.a + &t.a, b: &acc.b + &t.b };
            } else if self.eat('-') {
                let t = self.term()?;
                acc = Value { a: &acc.a - &t.a, b: &acc.b - &t.b };
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value, CliError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let f = self.power()?;
                acc = self.mul(&acc, &f);
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let at = self.at();
                self.pos += 1;
                let f = self.power()?;
                let c = f
                    .as_constant()
                    .ok_or_else(|| CliError::parse(at, "division by a non-constant"))?;
                if c.is_zero() {
                    return Err(CliError::parse(at, "division by zero"));
                }
                let inv = c.recip();
                acc = Value { a: acc.a.scale(&inv), b: acc.b.scale(&inv) };
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Value, CliError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.at();
        let e = match self.peek() {
            Some(Tok::Num(s)) => s.parse::<u32>().ok().filter(|e| *e <= MAX_EXPONENT),
            _ => return Err(CliError::parse(at, "expected an exponent")),
        }
        .ok_or_else(|| CliError::parse(at, format!("exponent must be at most {MAX_EXPONENT}")))?;
        self.pos += 1;
        let mut acc = Value::constant(Rational::from_integer(1.into()));
        for _ in 0..e {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Value, CliError> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                let r = parse_rational(&s).map_err(|e| CliError::parse(at, e.to_string()))?;
                Ok(Value::constant(r))
            }
            Some(Tok::Ident(s)) if s == self.var => {
                self.pos += 1;
                Ok(Value { a: RatPolynomial::x(), b: RatPolynomial::zero() })
            }
            Some(Tok::Ident(s)) if s == "y" && self.curve.is_some() => {
                self.pos += 1;
                Ok(Value { a: RatPolynomial::zero(), b: RatPolynomial::one() })
            }
            Some(Tok::Ident(s)) => Err(CliError::parse(at, format!("unknown symbol '{s}'"))),
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Sym('-')) => {
                self.pos += 1;
                let v = self.power()?;
                Ok(Value { a: -&v.a, b: -&v.b })
            }
            Some(Tok::Sym(c)) => Err(CliError::parse(at, format!("unexpected '{c}'"))),
            None => Err(CliError::parse(at, "unexpected end of input")),
        }
    }

    fn polynomial(&mut self) -> Result<RatPolynomial, CliError> {
        let at = self.at();
        let v = self.expr()?;
        if !v.b.is_zero() {
            return Err(CliError::parse(at, "expected a polynomial in x"));
        }
        Ok(v.a)
    }

    fn integer(&mut self) -> Result<i64, CliError> {
        let at = self.at();
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                s.parse().map_err(|_| CliError::parse(at, "integer out of range"))
            }
            _ => Err(CliError::parse(at, "expected an integer")),
        }
    }

    fn divisor(&mut self) -> Result<Divisor, CliError> {
        let curve = self.curve.expect("divisors need a curve");
        let mut d = Divisor::zero();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let mult = if matches!(self.peek(), Some(Tok::Num(_))) {
                let m = self.integer()?;
                self.expect('*')?;
                m
            } else {
                1
            };
            let at = self.at();
            let place = match self.peek().cloned() {
                Some(Tok::Ident(s)) if s == "inf" => {
                    self.pos += 1;
                    Place::Infinity
                }
                Some(Tok::Ident(s)) if s == "place" => {
                    self.pos += 1;
                    self.place(curve, at)?
                }
                _ => return Err(CliError::parse(at, "expected 'inf' or 'place(...)'")),
            };
            d.add_place(place, sign * mult);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(d);
            }
        }
    }

    fn place(&mut self, curve: &HyperellipticCurve, at: usize) -> Result<Place, CliError> {
        self.expect('(')?;
        self.expect_ident("u")?;
        self.expect('=')?;
        let u = self.polynomial()?;
        let v = if self.eat(',') {
            self.expect_ident("v")?;
            self.expect('=')?;
            Some(self.polynomial()?)
        } else {
            None
        };
        self.expect(')')?;
        let bad = |e: primpoints::Error| CliError::parse(at, e.to_string());
        if u.deg() == 0 {
            return Err(CliError::parse(at, "u must have positive degree"));
        }
        let u = u.monic();
        match v {
            Some(v) => {
                let p = Place::Affine { u, kind: PlaceKind::Split { v } };
                p.validate(curve).map_err(bad)?;
                Ok(p)
            }
            None => {
                let mut over = places_over_x(curve, &u).map_err(bad)?;
                if over.len() == 1 {
                    Ok(over.remove(0))
                } else {
                    Err(CliError::parse(at, format!("u = {u} splits; give v to choose a place")))
                }
            }
        }
    }
}

/// Parses a function in `x` and `y`, reducing powers of `y` on the curve.
pub fn parse_function_expr(text: &str, curve: &HyperellipticCurve) -> Result<CurveFunction, CliError> {
    let mut p = Parser::new(text, Some(curve), "x")?;
    let v = p.expr()?;
    p.finish()?;
    Ok(CurveFunction::new(v.a, v.b))
}

/// Parses a polynomial in `x`.
pub fn parse_polynomial(text: &str) -> Result<RatPolynomial, CliError> {
    let mut p = Parser::new(text, None, "x")?;
    let v = p.polynomial()?;
    p.finish()?;
    Ok(v)
}

/// Parses a divisor such as `4*inf` or `place(u=x-2,v=3)+place(u=x+2)`.
/// Without `v`, `u` must carry a single place (ramified or inert).
pub fn parse_divisor(text: &str, curve: &HyperellipticCurve) -> Result<Divisor, CliError> {
    let mut p = Parser::new(text, Some(curve), "x")?;
    let d = p.divisor()?;
    p.finish()?;
    Ok(d)
}
