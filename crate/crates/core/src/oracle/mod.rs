//! Independent reference values: the Alexander polynomial from the reduced
//! Burau representation and the Kashaev invariant of the figure-eight knot.

mod laurent;

use num_complex::Complex64;

pub use laurent::IntLaurent;

use crate::error::{AdoError, Result};
use crate::verma::BraidWord;

type Mat = Vec<Vec<IntLaurent>>;

fn identity(d: usize) -> Mat {
    (0..d).map(|i| (0..d).map(|j| IntLaurent::constant((i == j) as i64)).collect()).collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    (0..d)
        .map(|i| (0..d).map(|j| (0..d).fold(IntLaurent::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))).collect())
        .collect()
}

/// Reduced Burau matrix of σ_i^{±1} (1-based i) on n strands, size n−1.
pub fn burau_generator(n: usize, letter: i32) -> Mat {
    let d = n - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let t = IntLaurent::monomial(1, 1);
    let mt = IntLaurent::monomial(-1, 1);
    let ti = IntLaurent::monomial(1, -1);
    let mti = IntLaurent::monomial(-1, -1);
    let one = IntLaurent::constant(1);
    let mut m = identity(d);
    if letter > 0 {
        m[i][i] = mt;
        if i > 0 {
            m[i][i - 1] = t;
        }
        if i + 1 < d {
            m[i][i + 1] = one;
        }
    } else {
        m[i][i] = mti;
        if i > 0 {
            m[i][i - 1] = one;
        }
        if i + 1 < d {
            m[i][i + 1] = ti;
        }
    }
    m
}

/// Reduced Burau matrix of a word (product of letters left to right).
pub fn burau_matrix(word: &BraidWord) -> Mat {
    let d = word.strands() - 1;
    word.letters().iter().fold(identity(d), |acc, &l| mat_mul(&acc, &burau_generator(word.strands(), l)))
}

fn det(m: &Mat) -> IntLaurent {
    match m.len() {
        0 => IntLaurent::constant(1),
        1 => m[0][0].clone(),
        d => (0..d).fold(IntLaurent::zero(), |acc, j| {
            if m[0][j].is_zero() {
                return acc;
            }
            let minor: Mat = m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect()).collect();
            let term = m[0][j].mul(&det(&minor));
            if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
        }),
    }
}

/// The representative of ±t^k·p with exponents symmetric about 0 and positive value at t = 1.
pub fn symmetrize(p: &IntLaurent) -> IntLaurent {
    if p.is_zero() {
        return p.clone();
    }
    let span = p.high() - p.low();
    let shifted = p.shift(-p.low() - span / 2);
    if shifted.at_one() < 0 {
        shifted.neg()
    } else {
        shifted
    }
}

/// Alexander polynomial of the closure, symmetric with Δ(1) = 1.
pub fn alexander_burau(word: &BraidWord) -> Result<IntLaurent> {
    let c = word.components();
    if c != 1 {
        return Err(AdoError::NotAKnot(c));
    }
    let n = word.strands();
    if n == 1 {
        return Ok(IntLaurent::constant(1));
    }
    let b = burau_matrix(word);
    let i = identity(n - 1);
    let diff: Mat = (0..n - 1).map(|r| (0..n - 1).map(|c| i[r][c].sub(&b[r][c])).collect()).collect();
    let num = det(&diff);
    let den = IntLaurent::new(0, vec![1; n]);
    let q = num.div_exact(&den).ok_or_else(|| AdoError::Malformed("Burau determinant not divisible".into()))?;
    Ok(symmetrize(&q))
}

/// Σ_{k<N} |(ω)_k|² with (ω)_k = Π_{j=1..k} (1 − ω^j), for a given root ω.
pub fn habiro_sum(level: u32, omega: Complex64) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    let mut poch = Complex64::new(1.0, 0.0);
    for k in 0..level {
        if k > 0 {
            poch *= Complex64::new(1.0, 0.0) - omega.powu(k);
        }
        total += poch * poch.conj();
    }
    total
}

/// Kashaev invariant of the figure-eight with ω = e^{2πi/N}.
pub fn kashaev_figure_eight(level: u32) -> Complex64 {
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / level.max(1) as f64);
    habiro_sum(level, omega)
}

/// The same sum at ω = e^{πi/N}.
pub fn kashaev_figure_eight_half_root(level: u32) -> Complex64 {
    let omega = Complex64::from_polar(1.0, std::f64::consts::PI / level.max(1) as f64);
    habiro_sum(level, omega)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(alexander_burau(&word(2, &[1, 1, 1])).unwrap(), IntLaurent::new(-1, vec![1, -1, 1]));
        assert_eq!(alexander_burau(&word(3, &[1, -2, 1, -2])).unwrap(), IntLaurent::new(-1, vec![-1, 3, -1]));
        assert_eq!(alexander_burau(&BraidWord::identity(1)).unwrap(), IntLaurent::constant(1));
        assert_eq!(alexander_burau(&word(2, &[1, 1, 1, 1, 1])).unwrap(), IntLaurent::new(-2, vec![1, -1, 1, -1, 1]));
        assert!(alexander_burau(&word(2, &[1, 1])).is_err());
    }

    #[test]
    fn burau_relations() {
        let a = burau_matrix(&word(4, &[1, 2, 1]));
        let b = burau_matrix(&word(4, &[2, 1, 2]));
        assert_eq!(a, b);
        assert_eq!(burau_matrix(&word(4, &[1, 3])), burau_matrix(&word(4, &[3, 1])));
        for l in [1, 2, 3] {
            assert_eq!(burau_matrix(&word(4, &[l, -l])), identity(3));
        }
    }

    #[test]
    fn kashaev_values() {
        assert!((kashaev_figure_eight(2) - Complex64::new(5.0, 0.0)).norm() < 1e-12);
        assert!((kashaev_figure_eight(1) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        for n in 1..=10 {
            assert!(kashaev_figure_eight(n).im.abs() < 1e-12);
        }
    }
}
