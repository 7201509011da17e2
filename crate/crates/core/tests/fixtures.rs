use ado_core::coeffring::ScalarExt;
use ado_core::fixtures::{compute_fixture, fixture_dir, load_fixture, write_fixtures, FIXTURE_CASES};
use ado_core::lawrence::{f_class, g_class};

#[test]
fn stored_fixtures_match_recomputation() {
    let dir = fixture_dir();
    for (n, level) in FIXTURE_CASES {
        let (f, g) = load_fixture(&dir, n, level).unwrap_or_else(|e| panic!("{}: {e}", dir.display()));
        assert_eq!(f, f_class(n, level).unwrap(), "F for n={n} N={level}");
        assert_eq!(g, g_class(n, level).unwrap(), "G for n={n} N={level}");
    }
}

#[test]
fn two_strand_level_two_values() {
    let s = |k| ScalarExt::s_pow(2, k);
    let f = f_class(2, 2).unwrap();
    assert_eq!(f.coords, vec![s(-2), -&s(-2)]);
    let g = g_class(2, 2).unwrap();
    assert_eq!(g.coords, vec![s(1), s(1)]);
}

#[test]
fn written_fixtures_load_back() {
    let dir = std::env::temp_dir().join(format!("ado-fixtures-{}", std::process::id()));
    let paths = write_fixtures(&dir).unwrap();
    assert_eq!(paths.len(), FIXTURE_CASES.len());
    for (n, level) in FIXTURE_CASES {
        let (f, g) = load_fixture(&dir, n, level).unwrap();
        let v = compute_fixture(n, level).unwrap();
        assert_eq!(f.to_json(), v["f"]);
        assert_eq!(g.to_json(), v["g"]);
    }
    std::fs::remove_dir_all(&dir).ok();
}
