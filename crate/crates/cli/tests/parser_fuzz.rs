use primpoints::hypcurve::HyperellipticCurve;
use primpoints::exactalg::poly::RatPolynomial;
use primpoints_cli::parse::{parse_divisor, parse_function_expr, parse_polynomial};
use primpoints_cli::CliError;
use proptest::prelude::*;

fn e1() -> HyperellipticCurve {
    HyperellipticCurve::new(RatPolynomial::from_ints(&[1, 0, 0, 1])).unwrap()
}

fn token() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("x".to_string()),
        Just("y".to_string()),
        Just("inf".to_string()),
        Just("place".to_string()),
        Just("u".to_string()),
        Just("v".to_string()),
        "[0-9]{1,3}",
        "[-+*/^(),=]",
        Just(" ".to_string()),
        "[a-z$#.]",
    ]
}

fn position_in_range(e: &CliError, len: usize) -> bool {
    match e {
        CliError::Parse { pos, .. } => *pos <= len,
        _ => true,
    }
}

proptest! {
    #[test]
    fn random_token_soup_never_panics(parts in prop::collection::vec(token(), 0..12)) {
        let text = parts.concat();
        let c = e1();
        if let Err(e) = parse_function_expr(&text, &c) {
            prop_assert!(position_in_range(&e, text.len()), "{e}");
        }
        if let Err(e) = parse_polynomial(&text) {
            prop_assert!(position_in_range(&e, text.len()), "{e}");
        }
        if let Err(e) = parse_divisor(&text, &c) {
            prop_assert!(position_in_range(&e, text.len()), "{e}");
        }
    }

    #[test]
    fn polynomial_display_reparses(coeffs in prop::collection::vec(-20i64..20, 1..6)) {
        let p = RatPolynomial::from_ints(&coeffs);
        prop_assume!(!p.is_zero());
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn function_display_reparses(a in prop::collection::vec(-9i64..9, 1..4), b in prop::collection::vec(-9i64..9, 0..3)) {
        let c = e1();
        let f = primpoints::hypcurve::CurveFunction::new(RatPolynomial::from_ints(&a), RatPolynomial::from_ints(&b));
        prop_assert_eq!(parse_function_expr(&f.to_string(), &c).unwrap(), f);
    }
}
