use ado_core::ado::knot_table;
use ado_core::oracle::{alexander_burau, kashaev_figure_eight, symmetrize, IntLaurent};
use ado_core::verma::BraidWord;
use proptest::prelude::*;

fn knot_words() -> impl Strategy<Value = BraidWord> {
    (2usize..=4, prop::collection::vec(prop_oneof![1i32..4, -3i32..0], 0..8))
        .prop_map(|(n, l)| {
            let letters = l.into_iter().filter(|g| g.unsigned_abs() < n as u32).collect();
            BraidWord::new(n, letters).unwrap()
        })
        .prop_filter("knot closure", |w| w.components() == 1)
}

proptest! {
    #[test]
    fn alexander_is_symmetric_and_normalized(w in knot_words()) {
        let d = alexander_burau(&w).unwrap();
        prop_assert_eq!(d.at_one(), 1);
        prop_assert_eq!(d.invert_variable(), d.clone());
        prop_assert_eq!(alexander_burau(&w.mirror()).unwrap(), d.clone());
        prop_assert_eq!(symmetrize(&d), d);
    }
}

#[test]
fn corpus_values() {
    let trefoil = alexander_burau(&knot_table("trefoil").unwrap()).unwrap();
    assert_eq!(trefoil.to_string(), "t^-1 - 1 + t");
    let fig8 = alexander_burau(&knot_table("figure-eight").unwrap()).unwrap();
    assert_eq!(fig8, IntLaurent::new(-1, vec![-1, 3, -1]));
    assert_eq!(alexander_burau(&knot_table("unknot").unwrap()).unwrap(), IntLaurent::constant(1));
    assert!(alexander_burau(&knot_table("hopf").unwrap()).is_err());
}

#[test]
fn kashaev_figure_eight_small_values() {
    for (n, v) in [(2, 5.0), (3, 13.0), (4, 27.0)] {
        assert!((kashaev_figure_eight(n).re - v).abs() < 1e-9);
    }
}
