//! Regenerate the regression fixtures into `ADO_FIXTURE_DIR` (or the crate's fixtures directory).

fn main() {
    let dir = ado_core::fixtures::fixture_dir();
    for p in ado_core::fixtures::write_fixtures(&dir).expect("fixtures") {
        println!("{}", p.display());
    }
}
