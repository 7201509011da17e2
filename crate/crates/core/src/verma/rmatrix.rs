//! The braiding on U_N^λ ⊗ U_N^λ and its inverse, tabulated once per level.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::coeffring::{quantum_integer, quantum_integer_lambda, CycScalar, ScalarExt};
use crate::error::{AdoError, Result};
use crate::linalg::Matrix;

use super::TensorState;

/// Where the flip sits relative to the R-matrix sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum RConvention {
    /// R first, then swap the factors: v_i⊗v_j ↦ Σ c_n F^n v_j ⊗ E^n v_i.
    #[default]
    SwapAfter,
    /// Swap first, then R: v_i⊗v_j ↦ Σ c_n E^n v_j ⊗ F^n v_i.
    SwapBefore,
}

type Image = Vec<([u8; 2], ScalarExt)>;

pub(crate) struct RTable {
    level: u32,
    forward: Vec<Image>,
    inverse: Vec<Image>,
}

impl RTable {
    fn slot(&self, i: u8, j: u8) -> usize {
        i as usize * self.level as usize + j as usize
    }

    pub(crate) fn image(&self, i: u8, j: u8, inverse: bool) -> &Image {
        let k = self.slot(i, j);
        if inverse {
            &self.inverse[k]
        } else {
            &self.forward[k]
        }
    }
}

/// q^{n(n−1)/2} (q − q^{-1})^{2n} / Π_{l=1..n}(q^l − q^{-l}).
fn r_coefficient(level: u32, n: i64) -> CycScalar {
    let q = |k: i64| CycScalar::q_pow(level, k);
    let mut num = q(n * (n - 1) / 2);
    let mut den = CycScalar::one(level);
    let d1 = &q(1) - &q(-1);
    for l in 1..=n {
        num = &(&num * &d1) * &d1;
        den = &den * &(&q(l) - &q(-l));
    }
    num.try_div(&den).expect("{n}! is invertible below the level")
}

/// t · s^{-(a+b)} · q^{2ab}, the Cartan part on v_a ⊗ v_b.
fn cartan(level: u32, a: i64, b: i64) -> ScalarExt {
    ScalarExt::monomial(CycScalar::q_pow(level, 2 * a * b), -(a + b), 1)
}

/// Coefficient of E^n v_i, i.e. Π_{l<n} [λ+1−i+l].
fn e_power(level: u32, i: i64, n: i64) -> ScalarExt {
    (0..n).fold(ScalarExt::one(level), |acc, l| &acc * &quantum_integer_lambda(level, 1 - i + l))
}

/// Coefficient of F^n v_j, i.e. Π_{l<n} [j+l+1].
fn f_power(level: u32, j: i64, n: i64) -> ScalarExt {
    (0..n).fold(ScalarExt::one(level), |acc, l| &acc * &quantum_integer(level, j + l + 1))
}

fn build(level: u32, convention: RConvention) -> Result<RTable> {
    let nn = level as i64;
    let coeffs: Vec<ScalarExt> = (0..nn).map(|n| ScalarExt::from_cyc(r_coefficient(level, n))).collect();
    let mut forward = Vec::with_capacity((nn * nn) as usize);
    for i in 0..nn {
        for j in 0..nn {
            let mut img: Image = Vec::new();
            for n in 0..nn {
                // e is lowered by E^n, f is raised by F^n
                let (e, f) = match convention {
                    RConvention::SwapAfter => (i, j),
                    RConvention::SwapBefore => (j, i),
                };
                if n > e || f + n >= nn {
                    continue;
                }
                let (a, b) = (e - n, f + n);
                let c = &(&(&coeffs[n as usize] * &cartan(level, a, b)) * &e_power(level, e, n)) * &f_power(level, f, n);
                if c.is_zero() {
                    continue;
                }
                let out = match convention {
                    RConvention::SwapAfter => [b as u8, a as u8],
                    RConvention::SwapBefore => [a as u8, b as u8],
                };
                img.push((out, c));
            }
            forward.push(img);
        }
    }
    let mut inverse: Vec<Image> = vec![Vec::new(); forward.len()];
    for w in 0..(2 * nn - 1) {
        let block: Vec<[u8; 2]> = (0..nn).filter(|a| w - a >= 0 && w - a < nn).map(|a| [a as u8, (w - a) as u8]).collect();
        let pos = |p: &[u8; 2]| block.iter().position(|x| x == p).expect("weight preserved");
        let mut m = Matrix::zero(level, block.len(), block.len());
        for (col, src) in block.iter().enumerate() {
            for (dst, c) in &forward[(src[0] as i64 * nn + src[1] as i64) as usize] {
                m.set(pos(dst), col, c.clone());
            }
        }
        let inv = m.inverse()?;
        for (col, src) in block.iter().enumerate() {
            let slot = (src[0] as i64 * nn + src[1] as i64) as usize;
            for (row, dst) in block.iter().enumerate() {
                let c = inv.get(row, col);
                if !c.is_zero() {
                    inverse[slot].push((*dst, c.clone()));
                }
            }
        }
    }
    Ok(RTable { level, forward, inverse })
}

type Cache = RwLock<HashMap<(u32, RConvention), Arc<RTable>>>;

pub(crate) fn table(level: u32, convention: RConvention) -> Result<Arc<RTable>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("cache poisoned").get(&(level, convention)) {
        return Ok(t.clone());
    }
    crate::coeffring::cyclo::field(level)?;
    let t = Arc::new(build(level, convention)?);
    cache.write().expect("cache poisoned").entry((level, convention)).or_insert(t.clone());
    Ok(t)
}

/// Apply the braiding (or its inverse) to factors `position`, `position + 1` (1-based).
pub fn r_matrix_apply(state: &TensorState, position: usize, inverse: bool) -> Result<TensorState> {
    r_matrix_apply_with(state, position, inverse, RConvention::default())
}

pub fn r_matrix_apply_with(state: &TensorState, position: usize, inverse: bool, convention: RConvention) -> Result<TensorState> {
    if position == 0 || position >= state.factors() {
        return Err(AdoError::PositionOutOfRange { position, factors: state.factors() });
    }
    let table = table(state.level(), convention)?;
    let p = position - 1;
    let mut out = TensorState::zero(state.level(), state.factors());
    for (idx, c) in state.terms() {
        for (dst, r) in table.image(idx[p], idx[p + 1], inverse) {
            let mut k = idx.clone();
            k[p] = dst[0];
            k[p + 1] = dst[1];
            out.add_term(k, c * r);
        }
    }
    Ok(out)
}
