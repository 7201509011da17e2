//! Command-line front end: argument model, braid parsing and the run loop.

use std::fmt::Write as _;

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use crate::ado::{ado_direct, ado_topological, knot_table, specialize_invariant, AdoResult, KNOT_NAMES};
use crate::error::{AdoError, Result};
use crate::verma::{writhe, BraidWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Topological,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Coloured Alexander (ADO) invariants of braid closures.
#[derive(Parser, Debug, Clone)]
#[command(name = "ado", version)]
pub struct RunConfig {
    /// Braid word: signed generator indices ("1 -2 1 -2") or caret syntax ("s1^3 s2^-1").
    #[arg(long, conflicts_with = "knot", allow_hyphen_values = true)]
    pub braid: Option<String>,

    /// Strand count for --braid (defaults to one more than the largest generator).
    #[arg(long)]
    pub strands: Option<usize>,

    /// Built-in knot: unknot, trefoil, figure-eight, hopf, cinquefoil.
    #[arg(long)]
    pub knot: Option<String>,

    /// The colour N (the root of unity is e^{iπ/N}).
    #[arg(long, default_value_t = 2)]
    pub color: u32,

    #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
    pub method: MethodArg,

    /// Evaluate at this λ, given as a real number or "a+bi".
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest accepted colour.
    #[arg(long, default_value_t = 5)]
    pub max_color: u32,
}

/// Parse a braid word. Tokens are separated by whitespace or commas.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for (pos, tok) in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).enumerate() {
        let err = |message: &str| AdoError::Parse { position: pos, message: format!("{message}: {tok:?}") };
        if let Some(rest) = tok.strip_prefix(['s', 'σ']) {
            let (g, p) = rest.split_once('^').unwrap_or((rest, "1"));
            let g: i32 = g.parse().map_err(|_| err("bad generator"))?;
            let p: i32 = p.parse().map_err(|_| err("bad exponent"))?;
            if g <= 0 {
                return Err(err("generator index must be positive"));
            }
            let letter = if p < 0 { -g } else { g };
            letters.extend(std::iter::repeat_n(letter, p.unsigned_abs() as usize));
        } else {
            let l: i32 = tok.parse().map_err(|_| err("expected a signed integer"))?;
            if l == 0 {
                return Err(err("generator 0 does not exist"));
            }
            letters.push(l);
        }
    }
    let needed = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
    let n = strands.unwrap_or(needed);
    if let Some(pos) = letters.iter().position(|l| l.unsigned_abs() as usize >= n) {
        return Err(AdoError::Parse {
            position: pos,
            message: format!("generator {} needs more than {} strands", letters[pos], n),
        });
    }
    BraidWord::new(n, letters)
}

/// Parse "a", "a+bi", "a-bi", "bi" or "i".
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || AdoError::Parse { position: 0, message: format!("not a complex number: {text:?}") };
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Ok(re) = s.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    let body = s.strip_suffix(['i', 'j']).ok_or_else(bad)?;
    // split at the last sign that is not an exponent sign or the leading sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re.parse().map_err(|_| bad())?, im))
}

fn format_complex(z: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im < 0.0 {
        format!("{:.10}-{:.10}i", re, -im)
    } else {
        format!("{:.10}+{:.10}i", re, im)
    }
}

/// What a run produced: the exit status and the text to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(status: i32, e: impl std::fmt::Display) -> Self {
        Outcome { status, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn exit_code(e: &AdoError) -> i32 {
    match e {
        AdoError::DegenerateSpecialization => EXIT_DEGENERATE,
        _ => EXIT_PARSE,
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    match run_inner(config) {
        Ok(o) => o,
        Err(e) => Outcome::error(exit_code(&e), e),
    }
}

fn run_inner(config: &RunConfig) -> Result<Outcome> {
    let (label, word) = match (&config.braid, &config.knot) {
        (Some(b), None) => (b.trim().to_string(), parse_braid(b, config.strands)?),
        (None, Some(k)) => {
            let w = knot_table(k).ok_or_else(|| AdoError::Parse {
                position: 0,
                message: format!("unknown knot {k:?}; known: {}", KNOT_NAMES.join(", ")),
            })?;
            (k.clone(), w)
        }
        (None, None) => (String::from("unknot"), BraidWord::identity(config.strands.unwrap_or(1))),
        (Some(_), Some(_)) => return Err(AdoError::ParameterMismatch("give either --braid or --knot".into())),
    };
    if config.color < 2 || config.color > config.max_color {
        return Err(AdoError::ParameterMismatch(format!("colour must lie in 2..={}", config.max_color)));
    }
    let lambda = config.lambda.as_deref().map(parse_complex).transpose()?;
    let level = config.color;

    let mut results: Vec<AdoResult> = Vec::new();
    if matches!(config.method, MethodArg::Direct | MethodArg::Both) {
        results.push(ado_direct(&word, level)?);
    }
    if matches!(config.method, MethodArg::Topological | MethodArg::Both) {
        results.push(ado_topological(&word, level)?);
    }
    let equal = (results.len() == 2).then(|| results[0].value == results[1].value);
    let numeric = match lambda {
        Some(l) => Some(specialize_invariant(&results[0], l)?),
        None => None,
    };

    let w = writhe(&word);
    let stdout = match config.format {
        Format::Json => {
            let mut obj = json!({
                "n": word.strands(),
                "N": level,
                "writhe": w,
                "method": match config.method { MethodArg::Direct => "direct", MethodArg::Topological => "topological", MethodArg::Both => "both" },
                "value": results[0].value.to_json(),
                "tExp": results[0].value.t_exp(),
            });
            if let Some(e) = equal {
                obj["equal"] = json!(e);
            }
            if let (Some(l), Some(z)) = (lambda, numeric) {
                obj["lambda"] = json!([l.re, l.im]);
                obj["numeric"] = json!([z.re, z.im]);
            }
            format!("{}\n", serde_json::to_string(&obj).expect("json"))
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{label}: n={} N={level} writhe={w}", word.strands()).ok();
            for r in &results {
                writeln!(s, "{:<12} {}", format!("{}:", r.method.name()), r.value).ok();
            }
            if let Some(e) = equal {
                writeln!(s, "equal: {e}").ok();
            }
            if let (Some(l), Some(z)) = (lambda, numeric) {
                writeln!(s, "at lambda={}: {}", format_complex(l), format_complex(z)).ok();
            }
            s
        }
    };
    let status = if equal == Some(false) { EXIT_MISMATCH } else { EXIT_OK };
    Ok(Outcome { status, stdout, stderr: String::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_parsing() {
        assert_eq!(parse_braid("1 1 1", Some(2)).unwrap().letters(), &[1, 1, 1]);
        assert_eq!(parse_braid("1 -2 1 -2", Some(3)).unwrap().letters(), &[1, -2, 1, -2]);
        assert!(matches!(parse_braid("3", Some(2)), Err(AdoError::Parse { position: 0, .. })));
        assert_eq!(parse_braid("s1^3", None).unwrap().letters(), &[1, 1, 1]);
        assert_eq!(parse_braid("s1 s2^-2", None).unwrap().letters(), &[1, -2, -2]);
        assert_eq!(parse_braid("s1 s2^-2", None).unwrap().strands(), 3);
        assert!(matches!(parse_braid("1 x", None), Err(AdoError::Parse { position: 1, .. })));
        assert_eq!(parse_braid("", None).unwrap(), BraidWord::identity(1));
    }

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("0.5").unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(parse_complex("-1.5-0.25i").unwrap(), Complex64::new(-1.5, -0.25));
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("1e-3+1e-3i").unwrap(), Complex64::new(1e-3, 1e-3));
        assert!(parse_complex("abc").is_err());
    }
}
