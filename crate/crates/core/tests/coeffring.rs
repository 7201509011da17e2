use ado_core::coeffring::{quantum_integer, specialize, CycScalar, ScalarExt, SpecializationMap};
use num_complex::Complex64;
use proptest::prelude::*;

/// Σ c · q^a · s^b over the given terms.
fn build(level: u32, terms: &[(i64, i64, i64)]) -> ScalarExt {
    terms.iter().fold(ScalarExt::zero(level), |acc, &(c, a, b)| {
        let m = &ScalarExt::q_pow(level, a) * &ScalarExt::monomial(CycScalar::from_int(level, c), b, 0);
        &acc + &m
    })
}

fn terms() -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-3i64..=3, 0i64..8, -3i64..=3), 1..4)
}

fn element(level: u32) -> impl Strategy<Value = ScalarExt> {
    (terms(), terms()).prop_filter_map("zero denominator", move |(n, d)| {
        let den = build(level, &d);
        (!den.is_zero()).then(|| build(level, &n).try_div(&den).unwrap())
    })
}

fn level_and_three() -> impl Strategy<Value = (ScalarExt, ScalarExt, ScalarExt)> {
    (2u32..=4).prop_flat_map(|l| (element(l), element(l), element(l)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in level_and_three()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn bar_is_an_involutive_ring_map((a, b, _c) in level_and_three()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn json_round_trip((a, _b, _c) in level_and_three()) {
        let back = ScalarExt::from_json(a.level(), &a.to_json()).unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn specialization_is_a_ring_map(
        (a, b, _c) in level_and_three(),
        re in 0.05f64..0.95,
        shift in 0i32..3,
        im in -0.5f64..0.5,
    ) {
        let map = SpecializationMap::EtaNumeric { lambda: Complex64::new(re + shift as f64, im) };
        let ev = |x: &ScalarExt| specialize(x, &map);
        if let (Ok(x), Ok(y)) = (ev(&a), ev(&b)) {
            let scale = 1.0 + x.norm() * y.norm() + x.norm() + y.norm();
            if let Ok(p) = ev(&(&a * &b)) {
                prop_assert!((p - x * y).norm() < 1e-8 * scale, "{} vs {}", p, x * y);
            }
            if let Ok(s) = ev(&(&a + &b)) {
                prop_assert!((s - (x + y)).norm() < 1e-8 * scale);
            }
        }
    }
}

#[test]
fn quantum_integers_are_symmetric() {
    for level in 2..=6u32 {
        let n = level as i64;
        assert!(quantum_integer(level, n).is_zero());
        assert!(quantum_integer(level, 0).is_zero());
        assert!(quantum_integer(level, 1).is_one());
        for k in 1..n {
            assert_eq!(quantum_integer(level, n - k), quantum_integer(level, k), "N={level} k={k}");
            assert!(!quantum_integer(level, k).is_zero());
        }
    }
}

#[test]
fn mixed_t_exponents_do_not_add() {
    let a = ScalarExt::t_pow(2, 1);
    let b = ScalarExt::one(2);
    assert!(a.try_add(&b).is_err());
    assert!(a.try_add(&ScalarExt::zero(2)).is_ok());
}

#[test]
fn levels_do_not_mix() {
    assert!(ScalarExt::one(2).try_mul(&ScalarExt::one(3)).is_err());
}
