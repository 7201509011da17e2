//! The invariant itself, computed two ways.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffring::{specialize, ScalarExt, SpecializationMap};
use crate::error::{AdoError, Result};
use crate::lawrence::{self, ev_dual_state, CoevOrdering, PipelineConfig};
use crate::verma::{writhe, BraidWord, TensorState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Topological,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Topological => "topological",
        }
    }
}

/// The monomial t^a s^b that each crossing contributes to the raw partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingUnit {
    pub t_exp: i64,
    pub s_exp: i64,
}

/// t · s^{1−N}: the value of a single positive kink.
pub fn crossing_unit(level: u32) -> CrossingUnit {
    CrossingUnit { t_exp: 1, s_exp: 1 - level as i64 }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdoResult {
    pub value: ScalarExt,
    /// The unnormalized scalar before removing the crossing units.
    pub raw: ScalarExt,
    pub strands: usize,
    pub level: u32,
    pub braid: BraidWord,
    pub method: Method,
}

impl AdoResult {
    pub fn writhe(&self) -> i64 {
        writhe(&self.braid)
    }
}

/// Multiply out the per-crossing unit: value = raw · (t^a s^b)^{−w}.
pub fn normalize(raw: &ScalarExt, w: i64, unit: CrossingUnit) -> ScalarExt {
    let level = raw.level();
    let u = &ScalarExt::t_pow(level, unit.t_exp) * &ScalarExt::s_pow(level, unit.s_exp);
    raw * &u.pow(-w)
}

/// v₀ followed by the nested cups, with the dual slots carrying plain indices.
fn cups_with_duals(strands: usize, level: u32) -> TensorState {
    let pairs = strands - 1;
    let mut out = TensorState::zero(level, 2 * strands - 1);
    let total = (level as usize).pow(pairs as u32);
    for code in 0..total {
        let mut idx = vec![0u8; 2 * strands - 1];
        let mut rest = code;
        for k in 1..=pairs {
            let i = (rest % level as usize) as u8;
            rest /= level as usize;
            let (p, q) = CoevOrdering::InnerFirst.pair_positions(strands, k);
            idx[p - 1] = i;
            idx[q - 1] = i;
        }
        out.add_term(idx, ScalarExt::one(level));
    }
    out
}

/// Partial trace of the braid over all strands but the first, read off on v₀.
pub fn raw_direct(word: &BraidWord, level: u32) -> Result<ScalarExt> {
    let n = word.strands();
    crate::coeffring::cyclo::field(level)?;
    let state = cups_with_duals(n, level);
    let moved = word.act(&state)?;
    ev_dual_state(&moved, n)
}

pub fn ado_direct(word: &BraidWord, level: u32) -> Result<AdoResult> {
    let raw = raw_direct(word, level)?;
    Ok(finish(raw, word, level, Method::Direct))
}

/// ⟪(β ∪ 1)·F, G⟫ through the Lawrence representation.
pub fn raw_topological(word: &BraidWord, level: u32, config: &PipelineConfig) -> Result<ScalarExt> {
    let n = word.strands();
    let f = lawrence::f_class_with(n, level, config)?;
    let g = lawrence::g_class_with(n, level, config)?;
    let moved = if word.is_empty() { f } else { lawrence::lawrence_action_with(word, &f, config)? };
    lawrence::pairing(&moved, &g, config.pairing)
}

pub fn ado_topological(word: &BraidWord, level: u32) -> Result<AdoResult> {
    ado_topological_with(word, level, &PipelineConfig::default())
}

pub fn ado_topological_with(word: &BraidWord, level: u32, config: &PipelineConfig) -> Result<AdoResult> {
    let raw = raw_topological(word, level, config)?;
    Ok(finish(raw, word, level, Method::Topological))
}

fn finish(raw: ScalarExt, word: &BraidWord, level: u32, method: Method) -> AdoResult {
    let value = normalize(&raw, writhe(word), crossing_unit(level)).reduced();
    AdoResult { value, raw: raw.reduced(), strands: word.strands(), level, braid: word.clone(), method }
}

pub fn ado(word: &BraidWord, level: u32, method: Method) -> Result<AdoResult> {
    match method {
        Method::Direct => ado_direct(word, level),
        Method::Topological => ado_topological(word, level),
    }
}

/// Numeric value at a complex λ.
pub fn specialize_invariant(r: &AdoResult, lambda: Complex64) -> Result<Complex64> {
    specialize(&r.value, &SpecializationMap::EtaNumeric { lambda })
}

/// σ w σ⁻¹.
pub fn conjugate(word: &BraidWord, by: &BraidWord) -> BraidWord {
    by.concat(word).concat(&by.inverse())
}

/// w·σ_n^{±1} on one more strand.
pub fn stabilize(word: &BraidWord, positive: bool) -> BraidWord {
    let n = word.strands();
    let mut letters = word.letters().to_vec();
    letters.push(if positive { n as i32 } else { -(n as i32) });
    BraidWord::new(n + 1, letters).expect("new generator fits")
}

#[derive(Clone, Debug)]
pub struct MarkovFailure {
    pub original: BraidWord,
    pub moved: BraidWord,
    pub expected: ScalarExt,
    pub got: ScalarExt,
}

#[derive(Clone, Debug, Default)]
pub struct MarkovReport {
    pub checked: usize,
    pub failures: Vec<MarkovFailure>,
}

impl MarkovReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compare the invariant of `word` with that of random conjugates and both stabilizations.
pub fn markov_check(word: &BraidWord, level: u32, samples: usize, seed: u64) -> Result<MarkovReport> {
    let base = ado_direct(word, level)?.value;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moves = vec![stabilize(word, true), stabilize(word, false)];
    let n = word.strands();
    if n >= 2 {
        for _ in 0..samples {
            let len = rng.gen_range(1..=2);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..n as i32);
                    if rng.gen_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            let by = BraidWord::new(n, letters)?;
            moves.push(conjugate(word, &by));
        }
    }
    let mut report = MarkovReport::default();
    for m in moves {
        let got = ado_direct(&m, level)?.value;
        report.checked += 1;
        if got != base {
            report.failures.push(MarkovFailure { original: word.clone(), moved: m, expected: base.clone(), got });
        }
    }
    Ok(report)
}

/// Φ of the mirror word compared with the bar of Φ.
pub fn mirror_check(word: &BraidWord, level: u32) -> Result<bool> {
    let a = ado_direct(word, level)?.value;
    let b = ado_direct(&word.mirror(), level)?.value;
    Ok(b == a.bar())
}

/// Built-in braid presentations.
pub fn knot_table(name: &str) -> Option<BraidWord> {
    let (n, letters): (usize, Vec<i32>) = match name.to_ascii_lowercase().as_str() {
        "unknot" | "0_1" => (1, vec![]),
        "trefoil" | "3_1" => (2, vec![1, 1, 1]),
        "figure-eight" | "figure8" | "4_1" => (3, vec![1, -2, 1, -2]),
        "hopf" | "hopf-link" => (2, vec![1, 1]),
        "cinquefoil" | "5_1" => (2, vec![1, 1, 1, 1, 1]),
        _ => return None,
    };
    BraidWord::new(n, letters).ok()
}

pub const KNOT_NAMES: [&str; 5] = ["unknot", "trefoil", "figure-eight", "hopf", "cinquefoil"];

/// Require a single-component closure.
pub fn require_knot(word: &BraidWord) -> Result<()> {
    match word.components() {
        1 => Ok(()),
        c => Err(AdoError::NotAKnot(c)),
    }
}

/// Random words for sampling.
pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let letters = if strands < 2 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect()
    };
    BraidWord::new(strands, letters).expect("letters in range")
}
