use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use efd::canon::{piecewise_canonical_n, DEFAULT_CAP};
use efd::gen::term;
use efd::geometry::{is_full_dimensional, sample_solutions, FullDim, IneqSystem, LinearForm, Q};
use efd::models::{eval, sample_element, Assignment, Element, WitnessAlgebra};
use efd::term::{expand_macros, parse_term, print_node, Node, Signature, Term, Var};

fn sig_strategy() -> impl Strategy<Value = Signature> {
    prop_oneof![Just(Signature::Group), Just(Signature::Hoop), Just(Signature::Mv)]
}

fn random_node(sig: Signature, seed: u64) -> (usize, Node) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + (seed % 3) as usize;
    (n, term(&mut rng, sig, n, 5, 6))
}

fn model(sig: Signature) -> WitnessAlgebra {
    match sig {
        Signature::Group => WitnessAlgebra::RationalGroup,
        Signature::Hoop => WitnessAlgebra::cone(WitnessAlgebra::RationalGroup).unwrap(),
        Signature::Mv => WitnessAlgebra::gamma(WitnessAlgebra::RationalGroup).unwrap(),
    }
}

fn env(a: &WitnessAlgebra, n: usize, seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (1..=n).map(|i| (Var::x(i), sample_element(a, &mut rng, 12))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn print_then_parse_is_identity(sig in sig_strategy(), seed in any::<u64>()) {
        let (_, t) = random_node(sig, seed);
        let printed = print_node(&t);
        prop_assert_eq!(parse_term(&printed, sig).unwrap(), t, "{}", printed);
    }

    #[test]
    fn expansion_preserves_values(sig in sig_strategy(), seed in any::<u64>(), at in any::<u64>()) {
        let (n, t) = random_node(sig, seed);
        let t = Term::new(sig, t).unwrap();
        let e = expand_macros(&t).unwrap();
        let again = expand_macros(&e).unwrap();
        prop_assert_eq!(again.node(), e.node());
        let a = model(sig);
        let x = env(&a, n, at);
        prop_assert_eq!(eval(&a, &t, &x).unwrap(), eval(&a, &e, &x).unwrap());
    }

    #[test]
    fn canonical_form_agrees_with_evaluation(seed in any::<u64>(), at in any::<u64>()) {
        let (n, t) = random_node(Signature::Group, seed);
        let Ok(pl) = piecewise_canonical_n(&t, n, DEFAULT_CAP) else { return Ok(()) };
        let a = WitnessAlgebra::RationalGroup;
        let x = env(&a, n, at);
        let coords: Vec<Q> = (1..=n).map(|i| x[&Var::x(i)].as_num().unwrap().clone()).collect();
        let v = eval(&a, &Term::new(Signature::Group, t).unwrap(), &x).unwrap();
        let piece = pl.piece_at(&coords).expect("pieces cover the space");
        prop_assert_eq!(Element::Num(piece.form.eval(&coords)), v);
    }

    #[test]
    fn full_verdicts_have_interior_bases(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 0..5)) {
        let s = IneqSystem::new(3, rows.iter().map(|r| LinearForm::from_i64(r)).collect()).unwrap();
        match is_full_dimensional(&s) {
            FullDim::Full { basis } => prop_assert!(basis.iter().all(|v| s.contains(v))),
            FullDim::Degenerate { vanishing, .. } => {
                prop_assert!(!vanishing.is_zero());
                for p in sample_solutions(&s, 30, 1) {
                    prop_assert!(vanishing.eval(&p).is_zero());
                }
            }
        }
    }
}

#[test]
fn mv_laws_hold_in_gamma() {
    let a = model(Signature::Mv);
    let laws = [
        ("x1 + x2", "x2 + x1"),
        ("x1 + (x2 + x3)", "(x1 + x2) + x3"),
        ("x1 + 0", "x1"),
        ("~~x1", "x1"),
        ("x1 + ~0", "~0"),
        ("~(~x1 + x2) + x2", "~(~x2 + x1) + x1"),
    ];
    for (l, r) in laws {
        let (l, r) = (parse_term(l, Signature::Mv).unwrap(), parse_term(r, Signature::Mv).unwrap());
        let (l, r) = (Term::new(Signature::Mv, l).unwrap(), Term::new(Signature::Mv, r).unwrap());
        for seed in 0..200 {
            let x = env(&a, 3, seed);
            assert_eq!(eval(&a, &l, &x).unwrap(), eval(&a, &r, &x).unwrap());
        }
    }
}
