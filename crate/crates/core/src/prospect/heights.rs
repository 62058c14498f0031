//! Rationals in order of height `max(|p|, q)`.

use num_integer::Integer;
use num_rational::BigRational;
use num_bigint::BigInt;

use crate::exactalg::rational::Rational;

/// Every rational exactly once, by non-decreasing height.
///
/// Height 1 gives `0, 1, -1`. For larger `H` the positive values come first,
/// `H/1, H/2, ...` then `.../H` with decreasing numerator, followed by the
/// same values negated: `2, 1/2, -2, -1/2, 3, 3/2, 2/3, 1/3, -3, ...`.
#[derive(Clone, Debug, Default)]
pub struct HeightIterator {
    height: u64,
    pending: std::collections::VecDeque<Rational>,
}

impl HeightIterator {
    pub fn new() -> Self {
        Self::default()
    }

    fn refill(&mut self) {
        self.height += 1;
        let h = self.height;
        let r = |p: u64, q: u64| BigRational::new(BigInt::from(p), BigInt::from(q));
        if h == 1 {
            self.pending.extend([r(0, 1), r(1, 1), -r(1, 1)]);
            return;
        }
        let mut pos: Vec<Rational> = (1..h).filter(|q| q.gcd(&h) == 1).map(|q| r(h, q)).collect();
        pos.extend((1..h).rev().filter(|p| p.gcd(&h) == 1).map(|p| r(p, h)));
        let neg: Vec<Rational> = pos.iter().map(|x| -x).collect();
        self.pending.extend(pos);
        self.pending.extend(neg);
    }
}

impl Iterator for HeightIterator {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        while self.pending.is_empty() {
            self.refill();
        }
        self.pending.pop_front()
    }
}

/// The first `count` rationals of height at most `max_height` (if given).
pub fn height_ordered(count: usize, max_height: Option<u64>) -> Vec<Rational> {
    let bound = max_height.map(BigInt::from);
    HeightIterator::new()
        .take_while(|t| bound.as_ref().is_none_or(|b| &crate::exactalg::rational::height(t) <= b))
        .take(count)
        .collect()
}
