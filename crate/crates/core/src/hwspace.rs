//! Highest-weight vectors in tensor powers of U_N^λ and the matrix Θ that
//! identifies the truncated Lawrence representation with them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::coeffring::{quantum_integer_lambda, CycScalar, ScalarExt};
use crate::error::{AdoError, Result};
use crate::linalg::{eliminate, Matrix};
use crate::partitions::{enumerate, Partition};
use crate::verma::{act_e_coproduct, state_matrix, weight_basis, TensorState};

/// Exponent of s attached to the generator v_{e₁}⊗…⊗v_{e_{n−1}}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum BasisExponent {
    /// s^{Σ i·e_i}
    #[default]
    Weighted,
    /// s^{Σ (i+1)·e_i}, which is the previous one times s^m.
    Shifted,
}

impl BasisExponent {
    pub fn exponent(self, e: &Partition) -> i64 {
        let shift = match self {
            BasisExponent::Weighted => 0,
            BasisExponent::Shifted => 1,
        };
        e.parts.iter().enumerate().map(|(i, &p)| (i as i64 + 1 + shift) * p as i64).sum()
    }
}

/// s^{…}·v_{e₁}⊗…⊗v_{e_{n−1}}.
pub fn generator(e: &Partition, level: u32, exponent: BasisExponent) -> TensorState {
    let idx: Vec<u8> = e.parts.iter().map(|&p| p as u8).collect();
    TensorState::basis(level, &idx).scale(&ScalarExt::s_pow(level, exponent.exponent(e)))
}

/// The highest-weight vector Σ_k a_k v̂_k ⊗ E^k(w) in (U_N^λ)^{⊗n} built from the generator w of `e`.
/// Here v̂_k = v_k / ([λ][λ−1]…[λ−k+1]) and
/// a_k = (−1)^k s^{−k(n−1)} q^{2mk−k(k+1)}.
pub fn phi_vector(e: &Partition, level: u32, exponent: BasisExponent) -> Result<TensorState> {
    let n = e.n();
    let m = e.m() as i64;
    if !e.fits_under(level) {
        return Err(AdoError::PartitionNotFound(e.parts.clone()));
    }
    let mut ek = generator(e, level, exponent);
    let mut out = TensorState::basis(level, &[0]).tensor(&ek);
    let mut hat = ScalarExt::one(level);
    for k in 1..level as i64 {
        ek = act_e_coproduct(&ek);
        if ek.is_zero() {
            break;
        }
        hat = &hat * &quantum_integer_lambda(level, 1 - k);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let a = ScalarExt::monomial(
            &CycScalar::from_int(level, sign) * &CycScalar::q_pow(level, 2 * m * k - k * (k + 1)),
            -k * (n as i64 - 1),
            0,
        );
        let coeff = a.try_div(&hat)?;
        out = out.add(&TensorState::basis(level, &[k as u8]).tensor(&ek).scale(&coeff));
    }
    Ok(out)
}

/// Θ for the braid group on `strands` strands: columns are the highest-weight
/// vectors of weight (strands−1)(N−1)·… in (U_N^λ)^{⊗(2·strands−1)}.
#[derive(Clone, Debug)]
pub struct ThetaMatrix {
    pub strands: usize,
    pub level: u32,
    pub exponent: BasisExponent,
    /// Number of tensor factors, 2·strands − 1.
    pub factors: usize,
    /// Weight (strands−1)(N−1).
    pub weight: u32,
    pub columns: Vec<Partition>,
    pub row_basis: Vec<Vec<u8>>,
    pub matrix: Matrix,
    pub states: Vec<TensorState>,
}

impl ThetaMatrix {
    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    /// Θ·c as a tensor state.
    pub fn apply(&self, coords: &[ScalarExt]) -> TensorState {
        let mut out = TensorState::zero(self.level, self.factors);
        for (st, c) in self.states.iter().zip(coords) {
            if !c.is_zero() {
                out = out.add(&st.scale(c));
            }
        }
        out
    }

    /// Coordinates of `target` in the column basis.
    pub fn solve(&self, target: &TensorState) -> Result<Vec<ScalarExt>> {
        let level = self.level;
        if target.is_zero() {
            return Ok(vec![ScalarExt::zero(level); self.dim()]);
        }
        if target.factors() != self.factors {
            return Err(AdoError::NotInHighestWeightSpace);
        }
        let mut rhs = vec![vec![ScalarExt::zero(level)]; self.row_basis.len()];
        for (k, c) in target.terms() {
            let row = self.row_basis.binary_search(k).map_err(|_| AdoError::NotInHighestWeightSpace)?;
            rhs[row][0] = c.clone();
        }
        // t is a common factor of the target; carry it outside the elimination
        let t = target.terms().values().next().map_or(0, ScalarExt::t_exp);
        if target.terms().values().any(|c| c.t_exp() != t) {
            return Err(AdoError::NotInHighestWeightSpace);
        }
        let rhs: Vec<Vec<ScalarExt>> = rhs.into_iter().map(|r| vec![r[0].with_t(0)]).collect();
        let a: Vec<Vec<ScalarExt>> = (0..self.matrix.rows())
            .map(|i| (0..self.matrix.cols()).map(|j| self.matrix.get(i, j).clone()).collect())
            .collect();
        let solved = eliminate(a, rhs)?;
        let mut coords = Vec::with_capacity(self.dim());
        for p in &solved.pivots {
            let row = p.ok_or(AdoError::NotInHighestWeightSpace)?;
            coords.push(solved.rhs[row][0].with_t(t));
        }
        if solved.free_rows.iter().any(|&r| !solved.rhs[r][0].is_zero()) {
            return Err(AdoError::NotInHighestWeightSpace);
        }
        Ok(coords)
    }
}

type ThetaCache = RwLock<HashMap<(usize, u32, BasisExponent), Arc<ThetaMatrix>>>;

/// Θ for `strands` strands at level N, cached.
pub fn theta_matrix(strands: usize, level: u32) -> Result<Arc<ThetaMatrix>> {
    theta_matrix_with(strands, level, BasisExponent::default())
}

pub fn theta_matrix_with(strands: usize, level: u32, exponent: BasisExponent) -> Result<Arc<ThetaMatrix>> {
    static CACHE: OnceLock<ThetaCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (strands, level, exponent);
    if let Some(t) = cache.read().expect("cache poisoned").get(&key) {
        return Ok(t.clone());
    }
    let t = Arc::new(build_theta(strands, level, exponent)?);
    cache.write().expect("cache poisoned").entry(key).or_insert(t.clone());
    Ok(t)
}

fn build_theta(strands: usize, level: u32, exponent: BasisExponent) -> Result<ThetaMatrix> {
    if strands == 0 {
        return Err(AdoError::ParameterMismatch("need at least one strand".into()));
    }
    crate::coeffring::cyclo::field(level)?;
    let factors = 2 * strands - 1;
    let weight = (strands as u32 - 1) * (level - 1);
    let columns = enumerate(factors, weight, Some(level));
    let states = columns.iter().map(|e| phi_vector(e, level, exponent)).collect::<Result<Vec<_>>>()?;
    let row_basis = weight_basis(factors, weight, level);
    let matrix = state_matrix(&states, &row_basis, level);
    Ok(ThetaMatrix { strands, level, exponent, factors, weight, columns, row_basis, matrix, states })
}

/// Coordinates of `target` in the columns of `theta`.
pub fn theta_solve(target: &TensorState, theta: &ThetaMatrix) -> Result<Vec<ScalarExt>> {
    theta.solve(target)
}
