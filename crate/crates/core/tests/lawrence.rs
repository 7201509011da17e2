use ado_core::coeffring::ScalarExt;
use ado_core::hwspace::{theta_matrix, BasisExponent};
use ado_core::lawrence::{
    cup_state, ev_state, f_class, g_class, lawrence_action, pairing, w_coev, CoevOrdering, HomologyClass, PairingMode, Side,
};
use ado_core::verma::{act_e_coproduct, BraidWord};
use proptest::prelude::*;

const CASES: [(usize, u32); 4] = [(2, 2), (2, 3), (3, 2), (3, 3)];

#[test]
fn theta_has_full_column_rank() {
    for (n, level) in CASES {
        let th = theta_matrix(n, level).unwrap();
        assert_eq!(th.matrix.rank(), th.dim(), "n={n} N={level}");
        assert_eq!(th.factors, 2 * n - 1);
        assert_eq!(th.weight, (n as u32 - 1) * (level - 1));
    }
}

#[test]
fn cup_class_reproduces_the_cups() {
    for (n, level) in CASES {
        let th = theta_matrix(n, level).unwrap();
        let f = f_class(n, level).unwrap();
        assert_eq!(th.apply(&f.coords), cup_state(n, level, CoevOrdering::InnerFirst));
    }
}

/// coord_e read off the unique term v₀⊗v_e that only column e contains.
#[test]
fn cup_class_matches_leading_terms() {
    for (n, level) in CASES {
        let th = theta_matrix(n, level).unwrap();
        let target = cup_state(n, level, CoevOrdering::InnerFirst);
        let f = f_class(n, level).unwrap();
        for (e, got) in th.columns.iter().zip(&f.coords) {
            let mut idx = vec![0u8];
            idx.extend(e.parts.iter().map(|&p| p as u8));
            let s = ScalarExt::s_pow(level, BasisExponent::Weighted.exponent(e));
            assert_eq!(got, &target.coeff(&idx).try_div(&s).unwrap(), "n={n} N={level} e={:?}", e.parts);
        }
    }
}

#[test]
fn outer_first_cups_are_not_highest_weight() {
    assert!(act_e_coproduct(&w_coev(3, 2, CoevOrdering::InnerFirst)).is_zero());
    assert!(!act_e_coproduct(&w_coev(3, 2, CoevOrdering::OuterFirst)).is_zero());
}

#[test]
fn cap_class_is_the_caps_on_each_column() {
    for (n, level) in CASES {
        let th = theta_matrix(n, level).unwrap();
        let g = g_class(n, level).unwrap();
        for (st, got) in th.states.iter().zip(&g.coords) {
            assert_eq!(got, &ev_state(st, n, CoevOrdering::InnerFirst).unwrap());
        }
    }
}

#[test]
fn homology_classes_round_trip_through_json() {
    let f = f_class(3, 2).unwrap();
    assert_eq!(HomologyClass::from_json(&f.to_json()).unwrap(), f);
    let g = g_class(2, 3).unwrap();
    assert_eq!(HomologyClass::from_json(&g.to_json()).unwrap(), g);
}

#[test]
fn pairing_rejects_mismatched_classes() {
    let f = f_class(2, 2).unwrap();
    let g = g_class(2, 3).unwrap();
    assert!(pairing(&f, &g, PairingMode::Bilinear).is_err());
    assert!(pairing(&f, &f, PairingMode::Bilinear).is_err());
}

#[test]
fn action_rejects_non_highest_weight_targets() {
    let th = theta_matrix(2, 2).unwrap();
    let st = ado_core::verma::TensorState::basis(2, &[0, 1, 0]);
    assert!(th.solve(&st).is_err());
}

fn words(strands: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec(prop_oneof![1..=g, -g..=-1], 0..4).prop_map(move |l| BraidWord::new(strands, l).unwrap())
}

fn case() -> impl Strategy<Value = (usize, u32, usize, BraidWord, BraidWord)> {
    prop::sample::select(CASES.to_vec()).prop_flat_map(|(n, level)| {
        let dim = theta_matrix(n, level).unwrap().dim();
        (Just(n), Just(level), 0..dim, words(2 * n - 1), words(2 * n - 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn action_is_a_representation((n, level, e, a, b) in case()) {
        let dim = theta_matrix(n, level).unwrap().dim();
        let x = HomologyClass::unit(Side::Multifork, n, level, e, dim);
        let ab = lawrence_action(&a.concat(&b), &x).unwrap();
        let step = lawrence_action(&a, &lawrence_action(&b, &x).unwrap()).unwrap();
        prop_assert_eq!(ab, step);
        let back = lawrence_action(&a.inverse(), &lawrence_action(&a, &x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn action_satisfies_braid_relations((n, level, e, _a, _b) in case()) {
        let th = theta_matrix(n, level).unwrap();
        let x = HomologyClass::unit(Side::Multifork, n, level, e, th.dim());
        let k = th.factors;
        let act = |l: &[i32]| lawrence_action(&BraidWord::new(k, l.to_vec()).unwrap(), &x).unwrap();
        for g in 1..(k as i32 - 1) {
            prop_assert_eq!(act(&[g, g + 1, g]), act(&[g + 1, g, g + 1]));
        }
        if k >= 4 {
            prop_assert_eq!(act(&[1, 3]), act(&[3, 1]));
        }
    }
}
