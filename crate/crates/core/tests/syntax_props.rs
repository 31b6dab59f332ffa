use paraprob::gen;
use paraprob::syntax::check_dialect;
use paraprob::{parse_bd, parse_outer, BinOp, Dialect, OuterFormula, UnaryOp};
use proptest::prelude::*;

fn has_par_neg(f: &OuterFormula) -> bool {
    match f {
        OuterFormula::Unary(UnaryOp::ParNeg, _) => true,
        OuterFormula::Unary(_, g) => has_par_neg(g),
        OuterFormula::Bin(_, a, b) => has_par_neg(a) || has_par_neg(b),
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn outer_round_trip(seed in any::<u64>(), which in 0usize..3) {
        let dialect = [Dialect::Pm, Dialect::Four, Dialect::PlainLuk][which];
        let mut rng = gen::rng(seed);
        let f = gen::outer_formula(&mut rng, dialect, &gen::vars(3), 8, 3);
        let text = f.to_string();
        prop_assert_eq!(parse_outer(&text, dialect).unwrap(), f, "{}", text);
    }

    #[test]
    fn bd_round_trip(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let f = gen::bd_formula(&mut rng, &gen::vars(4), 8);
        prop_assert_eq!(parse_bd(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn accepted_four_formulas_have_no_par_neg(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let f = gen::outer_formula(&mut rng, Dialect::Pm, &gen::vars(2), 4, 1);
        let as_four = f.map_atoms(&mut |a| match a {
            OuterFormula::Modal(_, body) => OuterFormula::modal(paraprob::Modality::Bl, body.clone()),
            other => other.clone(),
        });
        if check_dialect(&as_four, Dialect::Four).is_ok() {
            prop_assert!(!has_par_neg(&as_four));
        } else {
            prop_assert!(has_par_neg(&as_four));
        }
    }
}

#[test]
fn precedence() {
    let f = parse_outer("a -> b -> c", Dialect::PlainLuk).unwrap();
    let (a, b, c) = (OuterFormula::atom("a"), OuterFormula::atom("b"), OuterFormula::atom("c"));
    assert_eq!(f, a.clone().implies(b.clone().implies(c)));
    assert_eq!(parse_outer("~!a", Dialect::PlainLuk).unwrap(), a.clone().delta().luk_neg());
    assert_eq!(
        parse_outer("a (+) b <-> b", Dialect::PlainLuk).unwrap(),
        OuterFormula::bin(BinOp::Iff, a.plus(b.clone()), b)
    );
}
