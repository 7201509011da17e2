use std::fmt;

use crate::error::{AdoError, Result};
use crate::linalg::Matrix;

use super::rmatrix::{r_matrix_apply_with, RConvention};
use super::{weight_basis, TensorState};

/// A word in the braid group on `strands` strands; ±i stands for σ_i^{±1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(AdoError::GeneratorOutOfRange { index: 0, strands });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(AdoError::GeneratorOutOfRange { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters read on more strands.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        BraidWord::new(strands.max(self.strands), self.letters.clone())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands.max(other.strands), letters }
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// The permutation of strand positions (0-based) induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        count
    }

    /// Apply the word to the first `strands` factors of a state; the rightmost letter acts first.
    pub fn act(&self, state: &TensorState) -> Result<TensorState> {
        self.act_with(state, RConvention::default())
    }

    pub fn act_with(&self, state: &TensorState, convention: RConvention) -> Result<TensorState> {
        let mut cur = state.clone();
        for &l in self.letters.iter().rev() {
            cur = r_matrix_apply_with(&cur, l.unsigned_abs() as usize, l < 0, convention)?;
        }
        Ok(cur)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "B{}[{}]", self.strands, s.join(" "))
    }
}

/// Sum of the letter signs.
pub fn writhe(word: &BraidWord) -> i64 {
    word.letters.iter().map(|l| l.signum() as i64).sum()
}

/// The matrix of `word` on the weight-`weight` block of a `total_factors`-fold tensor power,
/// columns and rows in the canonical multi-index order.
pub fn braid_matrix(word: &BraidWord, total_factors: usize, weight: u32, level: u32) -> Result<Matrix> {
    if word.strands > total_factors.max(1) {
        return Err(AdoError::GeneratorOutOfRange { index: word.strands as i32 - 1, strands: total_factors });
    }
    let basis = weight_basis(total_factors, weight, level);
    let mut m = Matrix::zero(level, basis.len(), basis.len());
    for (col, idx) in basis.iter().enumerate() {
        let img = word.act(&TensorState::basis(level, idx))?;
        for (k, c) in img.terms() {
            let row = basis.binary_search(k).expect("weight blocks are preserved");
            m.set(row, col, c.clone());
        }
    }
    Ok(m)
}

/// Matrix over a given list of multi-indices; used where the block is not a full weight space.
pub fn state_matrix(states: &[TensorState], basis: &[Vec<u8>], level: u32) -> Matrix {
    let mut m = Matrix::zero(level, basis.len(), states.len());
    for (col, s) in states.iter().enumerate() {
        for (k, c) in s.terms() {
            let row = basis.binary_search(k).expect("index in basis");
            m.set(row, col, c.clone());
        }
    }
    m
}
