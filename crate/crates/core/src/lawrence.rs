//! The truncated Lawrence representation, transported through Θ, together
//! with the classes built from cups and caps and their pairing.

use crate::coeffring::{quantum_integer_lambda, CycScalar, ScalarExt};
use crate::error::{AdoError, Result};
use crate::hwspace::{theta_matrix_with, BasisExponent, ThetaMatrix};
use crate::verma::{BraidWord, TensorState};

/// Which coevaluation pair carries which coefficient row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum CoevOrdering {
    /// v_{i_{n−1}}⊗…⊗v_{i_1}⊗v_{N−1−i_1}⊗…⊗v_{N−1−i_{n−1}}: row 1 is the innermost pair.
    #[default]
    InnerFirst,
    /// v_{i_1}⊗…⊗v_{i_{n−1}}⊗v_{N−1−i_{n−1}}⊗…⊗v_{N−1−i_1}: row 1 is the outermost pair.
    OuterFirst,
}

/// How the scan side enters the pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PairingMode {
    #[default]
    Bilinear,
    /// Apply q ↦ q⁻¹, s ↦ s⁻¹, t ↦ t⁻¹ to the scan coordinates first.
    Sesquilinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PipelineConfig {
    pub exponent: BasisExponent,
    pub ordering: CoevOrdering,
    pub pairing: PairingMode,
}

impl CoevOrdering {
    /// 1-based positions of pair `k` inside the (2·strands − 1)-factor state whose first factor is the open strand.
    pub fn pair_positions(self, strands: usize, k: usize) -> (usize, usize) {
        match self {
            CoevOrdering::InnerFirst => (strands - k + 1, strands + k),
            CoevOrdering::OuterFirst => (k + 1, 2 * strands - k),
        }
    }
}

/// Table c[k][i] for 1 ≤ k ≤ strands − 1, 0 ≤ i ≤ N − 1.
#[derive(Clone, Debug, PartialEq)]
pub struct CoevCoefficients {
    pub strands: usize,
    pub level: u32,
    rows: Vec<Vec<ScalarExt>>,
}

impl CoevCoefficients {
    /// c[k][i] with k 1-based.
    pub fn get(&self, k: usize, i: usize) -> &ScalarExt {
        &self.rows[k - 1][i]
    }

    pub fn rows(&self) -> &[Vec<ScalarExt>] {
        &self.rows
    }
}

/// The ratio c[k][i+1] / c[k][i] = −[λ+2−N+i]/[λ−i] · s^{−(2k−1)} · q^{2k(N−1) − 2(i+1)}.
pub fn coev_ratio(level: u32, k: usize, i: usize) -> ScalarExt {
    let nn = level as i64;
    let (k, i) = (k as i64, i as i64);
    let sign = ScalarExt::monomial(
        &CycScalar::from_int(level, -1) * &CycScalar::q_pow(level, 2 * k * (nn - 1) - 2 * (i + 1)),
        -(2 * k - 1),
        0,
    );
    let frac = quantum_integer_lambda(level, 2 - nn + i).try_div(&quantum_integer_lambda(level, -i)).expect("[λ−i] is a unit");
    &sign * &frac
}

pub fn coev_coefficients(strands: usize, level: u32) -> CoevCoefficients {
    let rows = (1..strands)
        .map(|k| {
            let mut row = vec![ScalarExt::one(level)];
            for i in 0..(level as usize - 1) {
                let next = &row[i] * &coev_ratio(level, k, i);
                row.push(next);
            }
            row
        })
        .collect();
    CoevCoefficients { strands, level, rows }
}

/// Σ Π_k c[k][i_k] · (cup vectors) on 2(strands − 1) factors.
pub fn w_coev(strands: usize, level: u32, ordering: CoevOrdering) -> TensorState {
    let pairs = strands.saturating_sub(1);
    let coeffs = coev_coefficients(strands, level);
    let mut out = TensorState::zero(level, 2 * pairs);
    for_each_choice(pairs, level, |choice| {
        let mut idx = vec![0u8; 2 * pairs];
        let mut c = ScalarExt::one(level);
        for (k0, &i) in choice.iter().enumerate() {
            let (p, q) = ordering.pair_positions(strands, k0 + 1);
            // positions are counted with the open strand in front
            idx[p - 2] = i;
            idx[q - 2] = level as u8 - 1 - i;
            c = &c * coeffs.get(k0 + 1, i as usize);
        }
        out.add_term(idx, c);
    });
    out
}

fn for_each_choice(len: usize, level: u32, mut f: impl FnMut(&[u8])) {
    let mut choice = vec![0u8; len];
    loop {
        f(&choice);
        let mut j = 0;
        loop {
            if j == len {
                return;
            }
            choice[j] += 1;
            if (choice[j] as u32) < level {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// v₀ ⊗ w_coev, the vector the multifork class is read off from.
pub fn cup_state(strands: usize, level: u32, ordering: CoevOrdering) -> TensorState {
    TensorState::basis(level, &[0]).tensor(&w_coev(strands, level, ordering))
}

/// The scalar π_{v₀}∘(caps)∘(undo the coefficients) of a state on 2·strands − 1 factors.
pub fn ev_state(state: &TensorState, strands: usize, ordering: CoevOrdering) -> Result<ScalarExt> {
    let level = state.level();
    let coeffs = coev_coefficients(strands, level);
    evaluate_caps(state, strands, ordering, |k, a| coeffs.get(k, a as usize).inv())
}

/// Caps applied to plain dual indices: a state whose dual slots hold v_j^* as the index j.
pub(crate) fn ev_dual_state(state: &TensorState, strands: usize) -> Result<ScalarExt> {
    let level = state.level();
    let mut out = ScalarExt::zero(level);
    for (idx, c) in state.terms() {
        if idx[0] != 0 {
            continue;
        }
        let mut val = c.clone();
        let mut alive = true;
        for k in 1..strands {
            let (p, q) = CoevOrdering::InnerFirst.pair_positions(strands, k);
            let a = idx[p - 1];
            if a != idx[q - 1] {
                alive = false;
                break;
            }
            val = &val * &pivot_weight(level, a);
        }
        if alive {
            out = &out + &val;
        }
    }
    Ok(out)
}

/// The factor v_a^*(K^{1−N} v_a) = (s q^{−2a})^{1−N}.
fn pivot_weight(level: u32, a: u8) -> ScalarExt {
    let e = 1 - level as i64;
    ScalarExt::monomial(CycScalar::q_pow(level, -2 * a as i64 * e), e, 0)
}

fn evaluate_caps(
    state: &TensorState,
    strands: usize,
    ordering: CoevOrdering,
    undo: impl Fn(usize, u8) -> Result<ScalarExt>,
) -> Result<ScalarExt> {
    let level = state.level();
    let top = level as u8 - 1;
    let mut out = ScalarExt::zero(level);
    for (idx, c) in state.terms() {
        if idx.len() != 2 * strands - 1 {
            return Err(AdoError::ParameterMismatch(format!("state on {} factors, expected {}", idx.len(), 2 * strands - 1)));
        }
        if idx[0] != 0 {
            continue;
        }
        let mut val = c.clone();
        let mut alive = true;
        for k in 1..strands {
            let (p, q) = ordering.pair_positions(strands, k);
            let a = idx[p - 1];
            if a + idx[q - 1] != top {
                alive = false;
                break;
            }
            val = &(&val * &pivot_weight(level, a)) * &undo(k, a)?;
        }
        if alive {
            out = &out + &val;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Multifork,
    Scan,
}

/// Coordinates in the multifork or scan basis, indexed by Θ's columns.
#[derive(Clone, Debug, PartialEq)]
pub struct HomologyClass {
    pub side: Side,
    pub strands: usize,
    pub level: u32,
    pub coords: Vec<ScalarExt>,
}

impl HomologyClass {
    pub fn unit(side: Side, strands: usize, level: u32, index: usize, dim: usize) -> Self {
        let coords = (0..dim).map(|j| if j == index { ScalarExt::one(level) } else { ScalarExt::zero(level) }).collect();
        HomologyClass { side, strands, level, coords }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "side": match self.side { Side::Multifork => "multifork", Side::Scan => "scan" },
            "n": self.strands,
            "N": self.level,
            "coords": self.coords.iter().map(ScalarExt::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| AdoError::Malformed(format!("homology class: {what}"));
        let side = match v["side"].as_str() {
            Some("multifork") => Side::Multifork,
            Some("scan") => Side::Scan,
            _ => return Err(bad("side")),
        };
        let strands = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let level = v["N"].as_u64().ok_or_else(|| bad("N"))? as u32;
        let coords = v["coords"]
            .as_array()
            .ok_or_else(|| bad("coords"))?
            .iter()
            .map(|c| ScalarExt::from_json(level, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(HomologyClass { side, strands, level, coords })
    }
}

fn theta(strands: usize, level: u32, config: &PipelineConfig) -> Result<std::sync::Arc<ThetaMatrix>> {
    theta_matrix_with(strands, level, config.exponent)
}

/// The multifork class whose image under Θ is v₀ ⊗ w_coev.
pub fn f_class(strands: usize, level: u32) -> Result<HomologyClass> {
    f_class_with(strands, level, &PipelineConfig::default())
}

pub fn f_class_with(strands: usize, level: u32, config: &PipelineConfig) -> Result<HomologyClass> {
    let th = theta(strands, level, config)?;
    let target = cup_state(strands, level, config.ordering);
    let coords = th.solve(&target)?;
    Ok(HomologyClass { side: Side::Multifork, strands, level, coords })
}

/// The caps functional evaluated on each column of Θ.
pub fn ev_functional(strands: usize, level: u32) -> Result<Vec<ScalarExt>> {
    ev_functional_with(strands, level, &PipelineConfig::default())
}

pub fn ev_functional_with(strands: usize, level: u32, config: &PipelineConfig) -> Result<Vec<ScalarExt>> {
    let th = theta(strands, level, config)?;
    th.states.iter().map(|st| ev_state(st, strands, config.ordering)).collect()
}

/// The scan class dual to the caps functional.
pub fn g_class(strands: usize, level: u32) -> Result<HomologyClass> {
    g_class_with(strands, level, &PipelineConfig::default())
}

pub fn g_class_with(strands: usize, level: u32, config: &PipelineConfig) -> Result<HomologyClass> {
    let coords = ev_functional_with(strands, level, config)?;
    Ok(HomologyClass { side: Side::Scan, strands, level, coords })
}

/// Σ_e a[e] · b[e] (with b barred in sesquilinear mode).
pub fn pairing(a: &HomologyClass, b: &HomologyClass, mode: PairingMode) -> Result<ScalarExt> {
    if a.side != Side::Multifork || b.side != Side::Scan {
        return Err(AdoError::ParameterMismatch("pairing takes a multifork class and a scan class".into()));
    }
    if a.strands != b.strands || a.level != b.level || a.coords.len() != b.coords.len() {
        return Err(AdoError::ParameterMismatch(format!(
            "classes for (n={}, N={}) and (n={}, N={})",
            a.strands, a.level, b.strands, b.level
        )));
    }
    let mut acc = ScalarExt::zero(a.level);
    for (x, y) in a.coords.iter().zip(&b.coords) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let y = match mode {
            PairingMode::Bilinear => y.clone(),
            PairingMode::Sesquilinear => y.bar(),
        };
        acc = acc.try_add(&(x * &y))?;
    }
    Ok(acc)
}

/// The action of a braid on 2·strands − 1 strands, transported through Θ.
pub fn lawrence_action(word: &BraidWord, cls: &HomologyClass) -> Result<HomologyClass> {
    lawrence_action_with(word, cls, &PipelineConfig::default())
}

pub fn lawrence_action_with(word: &BraidWord, cls: &HomologyClass, config: &PipelineConfig) -> Result<HomologyClass> {
    if cls.side != Side::Multifork {
        return Err(AdoError::ParameterMismatch("the braid group acts on multifork classes".into()));
    }
    let th = theta(cls.strands, cls.level, config)?;
    if word.strands() > th.factors {
        return Err(AdoError::GeneratorOutOfRange { index: word.strands() as i32 - 1, strands: th.factors });
    }
    let moved = word.act(&th.apply(&cls.coords))?;
    let coords = th.solve(&moved)?;
    Ok(HomologyClass { side: Side::Multifork, strands: cls.strands, level: cls.level, coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verma::{act_e_coproduct, act_k_coproduct};

    #[test]
    fn coefficient_table() {
        let c = coev_coefficients(3, 3);
        assert_eq!(c.rows().len(), 2);
        assert!(c.rows().iter().all(|r| r.len() == 3 && r[0].is_one()));
        let c = coev_coefficients(2, 2);
        assert_eq!(c.get(1, 1), &ScalarExt::monomial(CycScalar::from_int(2, -1), -1, 0));
    }

    #[test]
    fn w_coev_small() {
        let level = 2;
        let w = w_coev(2, level, CoevOrdering::InnerFirst);
        let mut expected = TensorState::basis(level, &[0, 1]);
        expected.add_term(vec![1, 0], coev_coefficients(2, level).get(1, 1).clone());
        assert_eq!(w, expected);
    }

    #[test]
    fn w_coev_is_highest_weight() {
        for level in 2..=4u32 {
            for strands in 2..=4usize {
                if level == 4 && strands == 4 {
                    continue;
                }
                let w = w_coev(strands, level, CoevOrdering::InnerFirst);
                assert!(act_e_coproduct(&w).is_zero(), "n={strands} N={level}");
                let p = (strands - 1) as i64;
                let eig = &ScalarExt::s_pow(level, 2 * p) * &ScalarExt::q_pow(level, -2 * p * (level as i64 - 1));
                assert_eq!(act_k_coproduct(&w, 1), w.scale(&eig));
            }
        }
    }

    #[test]
    fn outer_first_ordering_is_not_highest_weight() {
        let w = w_coev(3, 2, CoevOrdering::OuterFirst);
        assert!(!act_e_coproduct(&w).is_zero());
    }

    #[test]
    fn trivial_strand_count() {
        let f = f_class(1, 3).unwrap();
        assert_eq!(f.coords, vec![ScalarExt::one(3)]);
        assert_eq!(ev_functional(1, 3).unwrap(), vec![ScalarExt::one(3)]);
    }

    #[test]
    fn f_class_round_trip() {
        for (n, level) in [(2, 2), (2, 3), (3, 2)] {
            let f = f_class(n, level).unwrap();
            let th = theta_matrix_with(n, level, BasisExponent::default()).unwrap();
            assert_eq!(th.apply(&f.coords), cup_state(n, level, CoevOrdering::InnerFirst));
        }
    }

    #[test]
    fn unit_pairing() {
        let (n, level) = (3, 2);
        let dim = theta_matrix_with(n, level, BasisExponent::default()).unwrap().dim();
        for e in 0..dim {
            for f in 0..dim {
                let a = HomologyClass::unit(Side::Multifork, n, level, e, dim);
                let b = HomologyClass::unit(Side::Scan, n, level, f, dim);
                let p = pairing(&a, &b, PairingMode::Bilinear).unwrap();
                assert_eq!(p.is_one(), e == f);
                assert_eq!(p.is_zero(), e != f);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = g_class(2, 3).unwrap();
        assert_eq!(HomologyClass::from_json(&g.to_json()).unwrap(), g);
    }
}
