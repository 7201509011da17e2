//! Regression fixtures: the cup and cap classes for small (n, N), stored as JSON.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{AdoError, Result};
use crate::lawrence::{f_class, g_class, HomologyClass};

/// (strands, level) pairs kept under regression.
pub const FIXTURE_CASES: [(usize, u32); 4] = [(1, 2), (2, 2), (2, 3), (3, 2)];

/// `ADO_FIXTURE_DIR` if set, otherwise the fixtures directory of this crate.
pub fn fixture_dir() -> PathBuf {
    std::env::var_os("ADO_FIXTURE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

pub fn fixture_path(dir: &Path, strands: usize, level: u32) -> PathBuf {
    dir.join(format!("classes_n{strands}_N{level}.json"))
}

pub fn compute_fixture(strands: usize, level: u32) -> Result<serde_json::Value> {
    let f = f_class(strands, level)?;
    let g = g_class(strands, level)?;
    Ok(serde_json::json!({ "n": strands, "N": level, "f": f.to_json(), "g": g.to_json() }))
}

pub fn write_fixtures(dir: &Path) -> Result<Vec<PathBuf>> {
    let io = |e: std::io::Error| AdoError::Malformed(e.to_string());
    fs::create_dir_all(dir).map_err(io)?;
    let mut written = Vec::new();
    for (n, level) in FIXTURE_CASES {
        let path = fixture_path(dir, n, level);
        let text = serde_json::to_string_pretty(&compute_fixture(n, level)?).expect("json");
        fs::write(&path, text + "\n").map_err(io)?;
        written.push(path);
    }
    Ok(written)
}

/// The stored (F, G) pair.
pub fn load_fixture(dir: &Path, strands: usize, level: u32) -> Result<(HomologyClass, HomologyClass)> {
    let path = fixture_path(dir, strands, level);
    let text = fs::read_to_string(&path).map_err(|e| AdoError::Malformed(format!("{}: {e}", path.display())))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| AdoError::Malformed(e.to_string()))?;
    Ok((HomologyClass::from_json(&v["f"])?, HomologyClass::from_json(&v["g"])?))
}
