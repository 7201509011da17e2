use ado_core::verma::{
    act_e_coproduct, act_f_coproduct, act_k_coproduct, r_matrix_apply, writhe, BraidWord, TensorState,
};
use proptest::prelude::*;

fn word(strands: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec(prop_oneof![1..=g, -g..=-1], 0..6).prop_map(move |l| BraidWord::new(strands, l).unwrap())
}

fn setup() -> impl Strategy<Value = (u32, BraidWord, Vec<u8>)> {
    (2u32..=3, 2usize..=4).prop_flat_map(|(level, n)| (Just(level), word(n), prop::collection::vec(0..level as u8, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn braids_preserve_weight_and_carry_t_to_the_writhe((level, w, idx) in setup()) {
        let v = TensorState::basis(level, &idx);
        let out = w.act(&v).unwrap();
        prop_assert!(!out.is_zero());
        prop_assert_eq!(out.weight(), v.weight());
        for c in out.terms().values() {
            prop_assert_eq!(c.t_exp(), writhe(&w));
        }
    }

    #[test]
    fn braids_commute_with_the_quantum_group((level, w, idx) in setup()) {
        let v = TensorState::basis(level, &idx);
        prop_assert_eq!(w.act(&act_e_coproduct(&v)).unwrap(), act_e_coproduct(&w.act(&v).unwrap()));
        prop_assert_eq!(w.act(&act_f_coproduct(&v)).unwrap(), act_f_coproduct(&w.act(&v).unwrap()));
        prop_assert_eq!(w.act(&act_k_coproduct(&v, 1)).unwrap(), act_k_coproduct(&w.act(&v).unwrap(), 1));
    }

    #[test]
    fn inverse_word_undoes_the_action((level, w, idx) in setup()) {
        let v = TensorState::basis(level, &idx);
        prop_assert_eq!(w.inverse().act(&w.act(&v).unwrap()).unwrap(), v);
    }

    #[test]
    fn braid_relations_on_states(level in 2u32..=3, idx in prop::collection::vec(0u8..3, 4)) {
        let idx: Vec<u8> = idx.into_iter().map(|i| i % level as u8).collect();
        let v = TensorState::basis(level, &idx);
        let act = |l: &[i32]| BraidWord::new(4, l.to_vec()).unwrap().act(&v).unwrap();
        prop_assert_eq!(act(&[1, 2, 1]), act(&[2, 1, 2]));
        prop_assert_eq!(act(&[2, 3, 2]), act(&[3, 2, 3]));
        prop_assert_eq!(act(&[1, 3]), act(&[3, 1]));
        prop_assert_eq!(act(&[-1, -3]), act(&[-3, -1]));
    }
}

#[test]
fn word_acts_rightmost_letter_first() {
    let v = TensorState::basis(2, &[1, 0, 0]);
    let w = BraidWord::new(3, vec![1, 2]).unwrap();
    let by_hand = r_matrix_apply(&r_matrix_apply(&v, 2, false).unwrap(), 1, false).unwrap();
    assert_eq!(w.act(&v).unwrap(), by_hand);
}

#[test]
fn bad_generators_are_rejected() {
    assert!(BraidWord::new(2, vec![2]).is_err());
    assert!(BraidWord::new(3, vec![0]).is_err());
    let v = TensorState::basis(2, &[0, 0]);
    assert!(r_matrix_apply(&v, 2, false).is_err());
}
