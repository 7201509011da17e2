use std::fmt;

use num_complex::Complex64;

/// Integer Laurent polynomial Σ coeffs[k] t^{low+k}, trimmed at both ends.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntLaurent {
    low: i64,
    coeffs: Vec<i64>,
}

impl IntLaurent {
    pub fn new(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = IntLaurent { low, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        IntLaurent::default()
    }

    pub fn constant(c: i64) -> Self {
        IntLaurent::new(0, vec![c])
    }

    pub fn monomial(c: i64, exp: i64) -> Self {
        IntLaurent::new(exp, vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[k as usize]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let coeffs = (low..=high).map(|e| self.coeff(e) + other.coeff(e)).collect();
        IntLaurent::new(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        IntLaurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntLaurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntLaurent::new(self.low + other.low, coeffs)
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        IntLaurent { low: self.low + by, coeffs: self.coeffs.clone() }
    }

    /// Exact quotient by a divisor whose top coefficient is ±1; None if a remainder is left.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let lead = *d.coeffs.last()?;
        if lead.abs() != 1 {
            return None;
        }
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return self.is_zero().then(IntLaurent::zero);
        }
        let mut q = vec![0i64; r.len() - d.coeffs.len() + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + d.coeffs.len() - 1] * lead;
            q[k] = c;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[k + j] -= c * dj;
            }
        }
        r.iter().all(|&x| x == 0).then(|| IntLaurent::new(self.low - d.low, q))
    }

    /// p(1/t).
    pub fn invert_variable(&self) -> Self {
        let coeffs: Vec<i64> = self.coeffs.iter().rev().copied().collect();
        IntLaurent::new(-self.high(), coeffs)
    }

    /// p(1).
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coeffs.iter().enumerate().map(|(k, &c)| c as f64 * t.powi((self.low + k as i64) as i32)).sum()
    }
}

impl fmt::Debug for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.low + k as i64;
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match (a, e) {
                (_, 0) => write!(f, "{}", a)?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{}", e)?,
                (_, 1) => write!(f, "{}t", a)?,
                _ => write!(f, "{}t^{}", a, e)?,
            }
        }
        Ok(())
    }
}
