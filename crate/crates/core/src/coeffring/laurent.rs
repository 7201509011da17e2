//! Laurent polynomials in the formal variable s with cyclotomic coefficients.

use std::fmt;

use num_complex::Complex64;

use super::cyclo::CycScalar;
use crate::error::{AdoError, Result};

/// Σ coeffs[k] · s^{low + k}. Trimmed: no zero at either end; zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SPoly {
    level: u32,
    low: i64,
    coeffs: Vec<CycScalar>,
}

impl SPoly {
    pub fn zero(level: u32) -> Self {
        SPoly { level, low: 0, coeffs: Vec::new() }
    }

    pub fn constant(c: CycScalar) -> Self {
        SPoly::new(c.level(), 0, vec![c])
    }

    pub fn monomial(c: CycScalar, exp: i64) -> Self {
        SPoly::new(c.level(), exp, vec![c])
    }

    pub fn new(level: u32, low: i64, coeffs: Vec<CycScalar>) -> Self {
        let mut p = SPoly { level, low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(CycScalar::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> CycScalar {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            CycScalar::zero(self.level)
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Number of nonzero terms.
    pub fn terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn leading(&self) -> Option<&CycScalar> {
        self.coeffs.last()
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        SPoly { level: self.level, low: self.low + by, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return SPoly::zero(self.level);
        }
        SPoly { level: self.level, low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
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
        let mut coeffs = vec![CycScalar::zero(self.level); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            let i = (self.low - low) as usize + k;
            coeffs[i] = &coeffs[i] + c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let i = (other.low - low) as usize + k;
            coeffs[i] = &coeffs[i] + c;
        }
        SPoly::new(self.level, low, coeffs)
    }

    pub fn neg(&self) -> Self {
        SPoly { level: self.level, low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return SPoly::zero(self.level);
        }
        let mut coeffs = vec![CycScalar::zero(self.level); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        SPoly::new(self.level, self.low + other.low, coeffs)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(l) if l.is_one() => Ok(self.clone()),
            Some(l) => Ok(self.scale(&l.inv()?)),
        }
    }

    /// Polynomial division on the coefficient vectors, ignoring offsets.
    /// Returns (quotient, remainder) as offset-0 polynomials.
    fn divmod_raw(a: &[CycScalar], b: &[CycScalar], level: u32) -> Result<(Vec<CycScalar>, Vec<CycScalar>)> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        if r.len() < b.len() {
            return Ok((Vec::new(), r));
        }
        let lead_inv = b[db].inv()?;
        let mut q = vec![CycScalar::zero(level); r.len() - db];
        while r.len() >= b.len() {
            let k = r.len() - 1 - db;
            let c = r.last().unwrap() * &lead_inv;
            if !c.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * bj);
                }
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(CycScalar::is_zero) {
                r.pop();
            }
        }
        Ok((q, r))
    }

    /// Monic gcd of the underlying polynomials, with offset 0.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let mut a = self.coeffs.clone();
        let mut b = other.coeffs.clone();
        while !b.is_empty() {
            let (_, r) = Self::divmod_raw(&a, &b, self.level)?;
            a = std::mem::replace(&mut b, r);
        }
        SPoly::new(self.level, 0, a).monic()
    }

    /// Exact quotient of the coefficient vectors (offsets subtract). Errors on a nonzero remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(AdoError::DivisionByZero);
        }
        let (q, r) = Self::divmod_raw(&self.coeffs, &d.coeffs, self.level)?;
        if !r.is_empty() {
            return Err(AdoError::Malformed("inexact polynomial division".into()));
        }
        Ok(SPoly::new(self.level, self.low - d.low, q))
    }

    /// s ↦ s^{-1} together with ξ ↦ ξ^{-1} on coefficients.
    pub fn bar(&self) -> Self {
        let coeffs: Vec<CycScalar> = self.coeffs.iter().rev().map(CycScalar::bar).collect();
        SPoly::new(self.level, -self.high(), coeffs)
    }

    pub fn eval(&self, s: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c.to_complex() * s.powi((self.low + k as i64) as i32))
            .sum()
    }
}

impl fmt::Debug for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i64;
            let monomial = match e {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{}", e),
            };
            let (negative, body) = match c.as_rational() {
                Some(r) => {
                    let neg = r < &num_rational::BigRational::from_integer(0.into());
                    let a = if neg { -r.clone() } else { r.clone() };
                    let one = a == num_rational::BigRational::from_integer(1.into());
                    let body = match (one, e) {
                        (_, 0) => a.to_string(),
                        (true, _) => monomial,
                        (false, _) => format!("{}·{}", a, monomial),
                    };
                    (neg, body)
                }
                None if e == 0 => (false, format!("({})", c)),
                None => (false, format!("({})·{}", c, monomial)),
            };
            match (first, negative) {
                (true, true) => write!(f, "-{}", body)?,
                (true, false) => write!(f, "{}", body)?,
                (false, true) => write!(f, " - {}", body)?,
                (false, false) => write!(f, " + {}", body)?,
            }
            first = false;
        }
        Ok(())
    }
}
