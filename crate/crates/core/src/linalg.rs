//! Dense matrices over the working ring and exact elimination.

use std::fmt;

use crate::coeffring::ScalarExt;
use crate::error::{AdoError, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    level: u32,
    rows: usize,
    cols: usize,
    data: Vec<ScalarExt>,
}

impl Matrix {
    pub fn zero(level: u32, rows: usize, cols: usize) -> Self {
        Matrix { level, rows, cols, data: vec![ScalarExt::zero(level); rows * cols] }
    }

    pub fn identity(level: u32, size: usize) -> Self {
        let mut m = Self::zero(level, size, size);
        for i in 0..size {
            m.set(i, i, ScalarExt::one(level));
        }
        m
    }

    pub fn from_rows(level: u32, rows: Vec<Vec<ScalarExt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<ScalarExt> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Matrix { level, rows: r, cols: c, data }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ScalarExt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ScalarExt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<ScalarExt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.level, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[ScalarExt]) -> Vec<ScalarExt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(ScalarExt::zero(self.level), |acc, k| {
                    let a = self.get(i, k);
                    if a.is_zero() || v[k].is_zero() {
                        acc
                    } else {
                        &acc + &(a * &v[k])
                    }
                })
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    /// Common t-exponent of all nonzero entries, if there is one.
    pub fn uniform_t_exp(&self) -> Option<i64> {
        let mut it = self.data.iter().filter(|x| !x.is_zero()).map(ScalarExt::t_exp);
        let first = it.next().unwrap_or(0);
        it.all(|t| t == first).then_some(first)
    }

    /// Exact inverse. All nonzero entries must share one t-exponent.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(AdoError::ParameterMismatch("inverse of a non-square matrix".into()));
        }
        let t = self.uniform_t_exp().ok_or(AdoError::TExponentMismatch(0, 0))?;
        let stripped: Vec<Vec<ScalarExt>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).with_t(0)).collect()).collect();
        let rhs = (0..self.rows)
            .map(|i| (0..self.rows).map(|j| if i == j { ScalarExt::one(self.level) } else { ScalarExt::zero(self.level) }).collect())
            .collect();
        let solved = eliminate(stripped, rhs)?;
        let mut out = Matrix::zero(self.level, self.rows, self.cols);
        for (col, row) in solved.pivots.iter().enumerate() {
            let row = row.ok_or(AdoError::DivisionByZero)?;
            for j in 0..self.rows {
                out.set(col, j, solved.rhs[row][j].with_t(-t));
            }
        }
        Ok(out)
    }

    /// Rank over the function field.
    pub fn rank(&self) -> usize {
        let stripped: Vec<Vec<ScalarExt>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).with_t(0)).collect()).collect();
        let rhs = vec![Vec::new(); self.rows];
        eliminate(stripped, rhs).map(|s| s.pivots.iter().flatten().count()).unwrap_or(0)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub(crate) struct Eliminated {
    /// pivots[c] is the row holding the pivot of column c, if any.
    pub pivots: Vec<Option<usize>>,
    pub rhs: Vec<Vec<ScalarExt>>,
    /// Rows without a pivot, left as zero rows on the coefficient side.
    pub free_rows: Vec<usize>,
}

/// Gauss-Jordan on `a` carrying `rhs` along. Pivots are chosen to keep
/// expressions small: cheapest entry first, then the sparsest row.
pub(crate) fn eliminate(mut a: Vec<Vec<ScalarExt>>, mut rhs: Vec<Vec<ScalarExt>>) -> Result<Eliminated> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut used = vec![false; rows];
    let mut pivots = Vec::with_capacity(cols);
    for c in 0..cols {
        let nnz = |r: usize, a: &Vec<Vec<ScalarExt>>| a[r].iter().filter(|x| !x.is_zero()).count();
        let pick = (0..rows)
            .filter(|&r| !used[r] && !a[r][c].is_zero())
            .min_by_key(|&r| (a[r][c].cost(), nnz(r, &a)));
        let Some(p) = pick else {
            pivots.push(None);
            continue;
        };
        used[p] = true;
        let inv = a[p][c].inv()?;
        a[p] = a[p].iter().map(|x| if x.is_zero() { x.clone() } else { x * &inv }).collect();
        rhs[p] = rhs[p].iter().map(|x| if x.is_zero() { x.clone() } else { x * &inv }).collect();
        let prow = a[p].clone();
        let prhs = rhs[p].clone();
        for r in 0..rows {
            if r == p || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for (j, pv) in prow.iter().enumerate() {
                if !pv.is_zero() {
                    a[r][j] = &a[r][j] - &(&f * pv);
                }
            }
            for (j, pv) in prhs.iter().enumerate() {
                if !pv.is_zero() {
                    rhs[r][j] = &rhs[r][j] - &(&f * pv);
                }
            }
        }
        pivots.push(Some(p));
    }
    let free_rows = (0..rows).filter(|&r| !used[r]).collect();
    Ok(Eliminated { pivots, rhs, free_rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::quantum_integer_lambda;

    #[test]
    fn inverse_round_trip() {
        let level = 3;
        let a = quantum_integer_lambda(level, 0);
        let b = quantum_integer_lambda(level, 1);
        let m = Matrix::from_rows(level, vec![vec![a.clone(), b.clone()], vec![ScalarExt::s_pow(level, 2), a.clone()]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn inverse_carries_t() {
        let level = 2;
        let m = Matrix::from_rows(level, vec![vec![ScalarExt::t_pow(level, 1)]]);
        assert_eq!(m.inverse().unwrap().get(0, 0), &ScalarExt::t_pow(level, -1));
    }
}
