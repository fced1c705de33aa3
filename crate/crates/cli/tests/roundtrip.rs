use mring_cli::expr::{eval, parse, Expr, IntPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn int_poly() -> impl Strategy<Value = IntPoly> {
    (
        prop::collection::vec(-20i64..=20, 0..5),
        1i64..=9,
        any::<bool>(),
    )
        .prop_map(|(low, lead, neg)| {
            let mut c: Vec<BigInt> = low.into_iter().map(BigInt::from).collect();
            c.push(BigInt::from(if neg { -lead } else { lead }));
            IntPoly::new(c).expect("leading coefficient is nonzero")
        })
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u32..50).prop_map(|n| Expr::Int(n.into())),
        (int_poly(), prop::option::of(int_poly())).prop_map(|(p, q)| Expr::Bracket(p, q)),
        (1u64..30).prop_map(Expr::Cyc),
        (1u64..30).prop_map(Expr::Xn1),
        (1u64..30).prop_map(Expr::Basis),
    ]
}

fn ast() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (0u32..20, inner.clone()).prop_map(|(n, e)| Expr::Scalar(n.into(), Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #[test]
    fn printing_then_parsing_is_the_identity(e in ast()) {
        let printed = e.to_string();
        let back = parse(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(&back, &e, "printed as {}", printed);
    }

    #[test]
    fn parse_print_parse_is_stable(e in ast()) {
        let once = parse(&e.to_string()).unwrap();
        let twice = parse(&once.to_string()).unwrap();
        prop_assert_eq!(once.to_string(), twice.to_string());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // shallow trees with small atoms so evaluation stays cheap
    #[test]
    fn printed_form_evaluates_to_the_same_element(
        a in (1u64..6).prop_map(Expr::Cyc),
        b in (1u64..6).prop_map(Expr::Xn1),
        n in 0u32..4,
    ) {
        let e = Expr::Sub(
            Box::new(Expr::Mul(Box::new(a), Box::new(Expr::Scalar(n.into(), Box::new(b))))),
            Box::new(Expr::Basis(2)),
        );
        let back = parse(&e.to_string()).unwrap();
        prop_assert_eq!(eval(&back).unwrap(), eval(&e).unwrap());
    }
}

#[test]
fn garbage_never_panics() {
    for text in [
        "[",
        "]",
        "((",
        "b(",
        "cyc(99999999999999999999)",
        "[x^99999999]",
        "--[x]",
        "3**[x]",
        "[x/]",
        "\u{00e9}",
    ] {
        let _ = parse(text);
    }
}
