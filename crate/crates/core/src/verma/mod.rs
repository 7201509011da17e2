//! The module U_N^λ, tensor states and the quantum-group action on them.

mod braid;
mod rmatrix;

use std::collections::BTreeMap;

pub use braid::{braid_matrix, state_matrix, writhe, BraidWord};
pub use rmatrix::{r_matrix_apply, r_matrix_apply_with, RConvention};

use crate::coeffring::{quantum_integer, quantum_integer_lambda, ScalarExt};
use crate::error::{AdoError, Result};

/// A vector in (U_N^λ)^{⊗factors}: sparse map from multi-indices to coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorState {
    level: u32,
    factors: usize,
    terms: BTreeMap<Vec<u8>, ScalarExt>,
}

impl TensorState {
    pub fn zero(level: u32, factors: usize) -> Self {
        TensorState { level, factors, terms: BTreeMap::new() }
    }

    /// The basis vector v_{i₁}⊗…⊗v_{i_k}.
    pub fn basis(level: u32, index: &[u8]) -> Self {
        let mut s = Self::zero(level, index.len());
        s.add_term(index.to_vec(), ScalarExt::one(level));
        s
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn factors(&self) -> usize {
        self.factors
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, ScalarExt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &[u8]) -> ScalarExt {
        self.terms.get(index).cloned().unwrap_or_else(|| ScalarExt::zero(self.level))
    }

    pub fn add_term(&mut self, index: Vec<u8>, c: ScalarExt) {
        debug_assert_eq!(index.len(), self.factors);
        debug_assert!(index.iter().all(|&i| (i as u32) < self.level));
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ScalarExt::from_int(self.level, -1)))
    }

    pub fn scale(&self, c: &ScalarExt) -> Self {
        let mut out = Self::zero(self.level, self.factors);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Map every coefficient through `f`, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&ScalarExt) -> ScalarExt) -> Self {
        let mut out = Self::zero(self.level, self.factors);
        for (k, v) in &self.terms {
            let c = f(v);
            if !c.is_zero() {
                out.terms.insert(k.clone(), c);
            }
        }
        out
    }

    /// v ⊗ w.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.level, self.factors + other.factors);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, x * y);
            }
        }
        out
    }

    /// The common index sum of all terms, if homogeneous.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|k| k.iter().map(|&i| i as u32).sum::<u32>());
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    fn check_position(&self, position: usize) -> Result<()> {
        if position == 0 || position > self.factors {
            return Err(AdoError::PositionOutOfRange { position, factors: self.factors });
        }
        Ok(())
    }
}

/// K on one factor: v_i ↦ s q^{-2i} v_i.
pub fn act_k(state: &TensorState, position: usize) -> Result<TensorState> {
    act_k_power(state, position, 1)
}

/// K^p on one factor.
pub fn act_k_power(state: &TensorState, position: usize, p: i64) -> Result<TensorState> {
    state.check_position(position)?;
    let level = state.level;
    let mut out = TensorState::zero(level, state.factors);
    for (idx, c) in &state.terms {
        let i = idx[position - 1] as i64;
        let eig = k_eigenvalue(level, i).pow(p);
        out.add_term(idx.clone(), c * &eig);
    }
    Ok(out)
}

pub(crate) fn k_eigenvalue(level: u32, i: i64) -> ScalarExt {
    &ScalarExt::s_pow(level, 1) * &ScalarExt::q_pow(level, -2 * i)
}

/// E on one factor: v_i ↦ [λ+1−i] v_{i−1}.
pub fn act_e(state: &TensorState, position: usize) -> Result<TensorState> {
    state.check_position(position)?;
    let mut out = TensorState::zero(state.level, state.factors);
    for (idx, c) in &state.terms {
        let i = idx[position - 1];
        if i == 0 {
            continue;
        }
        let mut j = idx.clone();
        j[position - 1] = i - 1;
        out.add_term(j, c * &quantum_integer_lambda(state.level, 1 - i as i64));
    }
    Ok(out)
}

/// F on one factor: v_i ↦ [i+1] v_{i+1}.
pub fn act_f(state: &TensorState, position: usize) -> Result<TensorState> {
    state.check_position(position)?;
    let mut out = TensorState::zero(state.level, state.factors);
    for (idx, c) in &state.terms {
        let i = idx[position - 1];
        if i as u32 + 1 >= state.level {
            continue;
        }
        let mut j = idx.clone();
        j[position - 1] = i + 1;
        out.add_term(j, c * &quantum_integer(state.level, i as i64 + 1));
    }
    Ok(out)
}

/// Δ(E) = E⊗K + 1⊗E iterated: Σ_j Id^{j−1}⊗E⊗K^{k−j}.
pub fn act_e_coproduct(state: &TensorState) -> TensorState {
    let level = state.level;
    let k = state.factors;
    let mut out = TensorState::zero(level, k);
    for (idx, c) in &state.terms {
        for j in 0..k {
            let i = idx[j];
            if i == 0 {
                continue;
            }
            let mut coeff = c * &quantum_integer_lambda(level, 1 - i as i64);
            let tail: i64 = idx[j + 1..].iter().map(|&x| x as i64).sum();
            let tail_len = (k - j - 1) as i64;
            coeff = &coeff * &(&ScalarExt::s_pow(level, tail_len) * &ScalarExt::q_pow(level, -2 * tail));
            let mut t = idx.clone();
            t[j] = i - 1;
            out.add_term(t, coeff);
        }
    }
    out
}

/// Δ(F) = F⊗1 + K^{-1}⊗F iterated: Σ_j K^{-(j−1)}⊗F⊗Id^{k−j}.
pub fn act_f_coproduct(state: &TensorState) -> TensorState {
    let level = state.level;
    let k = state.factors;
    let mut out = TensorState::zero(level, k);
    for (idx, c) in &state.terms {
        for j in 0..k {
            let i = idx[j];
            if i as u32 + 1 >= level {
                continue;
            }
            let head: i64 = idx[..j].iter().map(|&x| x as i64).sum();
            let factor = &ScalarExt::s_pow(level, -(j as i64)) * &ScalarExt::q_pow(level, 2 * head);
            let coeff = &(c * &quantum_integer(level, i as i64 + 1)) * &factor;
            let mut t = idx.clone();
            t[j] = i + 1;
            out.add_term(t, coeff);
        }
    }
    out
}

/// Δ(K)^p = K^p⊗…⊗K^p.
pub fn act_k_coproduct(state: &TensorState, p: i64) -> TensorState {
    let level = state.level;
    let mut out = TensorState::zero(level, state.factors);
    for (idx, c) in &state.terms {
        let w: i64 = idx.iter().map(|&x| x as i64).sum();
        let eig = &ScalarExt::s_pow(level, p * idx.len() as i64) * &ScalarExt::q_pow(level, -2 * p * w);
        out.add_term(idx.clone(), c * &eig);
    }
    out
}

/// All length-`factors` multi-indices with entries below `level` summing to `weight`, lexicographic.
pub fn weight_basis(factors: usize, weight: u32, level: u32) -> Vec<Vec<u8>> {
    crate::partitions::enumerate(factors + 1, weight, Some(level))
        .into_iter()
        .map(|p| p.parts.into_iter().map(|x| x as u8).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(level: u32, idx: &[u8]) -> TensorState {
        TensorState::basis(level, idx)
    }

    #[test]
    fn single_factor_actions() {
        let level = 3;
        assert_eq!(act_k(&v(level, &[0]), 1).unwrap(), v(level, &[0]).scale(&ScalarExt::s_pow(level, 1)));
        assert!(act_e(&v(level, &[0]), 1).unwrap().is_zero());
        assert_eq!(act_e(&v(level, &[2]), 1).unwrap(), v(level, &[1]).scale(&quantum_integer_lambda(level, -1)));
        assert_eq!(act_f(&v(level, &[0]), 1).unwrap(), v(level, &[1]));
        assert!(act_f(&v(level, &[2]), 1).unwrap().is_zero());
        assert!(act_k(&v(level, &[0]), 2).is_err());
    }

    #[test]
    fn sl2_relations() {
        for level in 2..=5u32 {
            let q2 = ScalarExt::q_pow(level, 2);
            let qq = &ScalarExt::q_pow(level, 1) - &ScalarExt::q_pow(level, -1);
            for i in 0..level as u8 {
                let x = v(level, &[i]);
                let ke = act_k(&act_e(&x, 1).unwrap(), 1).unwrap();
                let ek = act_e(&act_k(&x, 1).unwrap(), 1).unwrap();
                assert_eq!(ke, ek.scale(&q2));
                let kf = act_k(&act_f(&x, 1).unwrap(), 1).unwrap();
                let fk = act_f(&act_k(&x, 1).unwrap(), 1).unwrap();
                assert_eq!(kf.scale(&q2), fk);
                let ef = act_e(&act_f(&x, 1).unwrap(), 1).unwrap();
                let fe = act_f(&act_e(&x, 1).unwrap(), 1).unwrap();
                let kk = act_k(&x, 1).unwrap().sub(&act_k_power(&x, 1, -1).unwrap());
                assert_eq!(ef.sub(&fe), kk.scale(&qq.inv().unwrap()));
            }
        }
    }

    #[test]
    fn coproduct_two_factors() {
        let level = 2;
        let out = act_e_coproduct(&v(level, &[1, 0]));
        let expected = v(level, &[0, 0]).scale(&(&quantum_integer_lambda(level, 0) * &ScalarExt::s_pow(level, 1)));
        assert_eq!(out, expected);
        assert!(act_e_coproduct(&v(level, &[0, 0])).is_zero());
    }

    #[test]
    fn coproducts_respect_relations() {
        let level = 3;
        let qq = &ScalarExt::q_pow(level, 1) - &ScalarExt::q_pow(level, -1);
        for idx in weight_basis(3, 2, level) {
            let x = v(level, &idx);
            let ef = act_e_coproduct(&act_f_coproduct(&x));
            let fe = act_f_coproduct(&act_e_coproduct(&x));
            let k = act_k_coproduct(&x, 1);
            let kinv = act_k_coproduct(&x, -1);
            assert_eq!(ef.sub(&fe), k.sub(&kinv).scale(&qq.inv().unwrap()));
        }
    }

    #[test]
    fn weight_bases() {
        assert_eq!(weight_basis(2, 1, 2), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(weight_basis(3, 1, 2), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(weight_basis(4, 2, 3).len(), 10);
    }
}
