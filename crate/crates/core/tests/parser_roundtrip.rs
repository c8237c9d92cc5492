use grafcl::expr::{self, Constant, ContractedOp, FormExpr, InfixOp, UnaryOp};
use grafcl::rational::ratio;
use grafcl::{Sign, Signature};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = FormExpr> {
    prop_oneof![
        (0i64..50, 1i64..6).prop_map(|(n, d)| FormExpr::Scalar(ratio(n, d))),
        prop::collection::vec(1u32..=12, 1..4).prop_map(FormExpr::Blade),
        prop::sample::select(vec![
            Constant::One,
            Constant::Vol,
            Constant::PPlus,
            Constant::PMinus
        ])
        .prop_map(FormExpr::Const),
    ]
}

fn ast() -> impl Strategy<Value = FormExpr> {
    leaf().prop_recursive(6, 64, 3, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        prop_oneof![
            (prop::sample::select(UnaryOp::ALL.to_vec()), b())
                .prop_map(|(op, x)| FormExpr::Unary(op, x)),
            (b(), b()).prop_map(|(l, r)| FormExpr::Add(l, r)),
            (b(), b()).prop_map(|(l, r)| FormExpr::Sub(l, r)),
            (
                prop::sample::select(vec![InfixOp::Graf, InfixOp::Wedge, InfixOp::Triangle]),
                b(),
                b()
            )
                .prop_map(|(op, l, r)| FormExpr::Product(op, l, r)),
            (1u32..=12, b()).prop_map(|(k, x)| FormExpr::Product(
                InfixOp::Contract,
                Box::new(FormExpr::Frame(k)),
                x
            )),
            (prop::bool::ANY, b(), b()).prop_map(|(plus, l, r)| FormExpr::Truncated(
                if plus { Sign::Plus } else { Sign::Minus },
                l,
                r
            )),
            (prop::bool::ANY, 0u32..5, b(), b()).prop_map(|(w, l, x, y)| FormExpr::Contracted(
                if w {
                    ContractedOp::Wedge
                } else {
                    ContractedOp::Graf
                },
                l,
                x,
                y
            )),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parse_inverts_print(e in ast()) {
        let printed = e.to_string();
        let back = expr::parse(&printed).unwrap();
        prop_assert_eq!(&back, &e, "{}", printed);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn form_to_expr_reparses(terms in prop::collection::vec((0u32..64, -9i64..=9, 1i64..=4), 0..6)) {
        let s = Signature::new(4, 2).unwrap();
        let f = grafcl::Form::from_terms(
            s,
            terms.into_iter().map(|(b, n, d)| (grafcl::Blade::from_bits(b), ratio(n, d))),
        ).unwrap();
        prop_assert_eq!(expr::eval_str(&f.to_expr(), s).unwrap(), f);
    }
}

#[test]
fn eval_is_deterministic() {
    let s = Signature::new(3, 2).unwrap();
    let src = "tgp(e12 + 1/2 <> e3, hodge(e45) - pminus) + cg(1, e123, e{2,4})";
    let first = expr::eval_str(src, s).unwrap();
    for _ in 0..5 {
        assert_eq!(
            expr::eval_str(src, s).unwrap().to_string(),
            first.to_string()
        );
    }
}
