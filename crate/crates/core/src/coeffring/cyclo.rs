//! The cyclotomic field Q(ξ), ξ = exp(2πi / 2N), in the power basis modulo
//! the 2N-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AdoError, Result};

/// Per-level tables: the modulus and the reduced powers of ξ.
#[derive(Debug)]
pub struct CycloField {
    level: u32,
    degree: usize,
    /// Low-to-high coefficients of the monic cyclotomic polynomial, without the leading 1.
    modulus: Vec<BigRational>,
    /// ξ^k reduced, for 0 <= k < 2N.
    powers: Vec<Vec<BigRational>>,
}

impl CycloField {
    fn new(level: u32) -> Self {
        let order = 2 * level as usize;
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        let modulus: Vec<BigRational> = phi[..degree]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let mut field = CycloField { level, degree, modulus, powers: Vec::with_capacity(order) };
        let mut p = vec![BigRational::zero(); degree];
        p[0] = BigRational::one();
        for _ in 0..order {
            field.powers.push(p.clone());
            // multiply by ξ
            let mut next = vec![BigRational::zero(); degree + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            p = field.reduce(next);
        }
        field
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Reduce a coefficient vector of any length modulo the cyclotomic polynomial.
    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree;
        if c.len() > d {
            for k in (d..c.len()).rev() {
                if c[k].is_zero() {
                    continue;
                }
                let lead = std::mem::take(&mut c[k]);
                for j in 0..d {
                    if !self.modulus[j].is_zero() {
                        c[k - d + j] -= &lead * &self.modulus[j];
                    }
                }
            }
            c.truncate(d);
        }
        c.resize(d, BigRational::zero());
        c
    }
}

fn contexts() -> &'static RwLock<HashMap<u32, &'static CycloField>> {
    static CTX: OnceLock<RwLock<HashMap<u32, &'static CycloField>>> = OnceLock::new();
    CTX.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Field tables for level `N` (cached for the life of the process).
pub fn field(level: u32) -> Result<&'static CycloField> {
    if level < 2 {
        return Err(AdoError::UnsupportedLevel(level));
    }
    if let Some(f) = contexts().read().unwrap().get(&level) {
        return Ok(f);
    }
    let mut map = contexts().write().unwrap();
    let f = *map.entry(level).or_insert_with(|| Box::leak(Box::new(CycloField::new(level))));
    Ok(f)
}

fn field_unchecked(level: u32) -> &'static CycloField {
    field(level).expect("CycScalar constructed with unsupported level")
}

/// Integer coefficients (low to high) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d of n
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = rem.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db];
        q[k] = c;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= c * bj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Element of Q(ξ) at a fixed level.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    level: u32,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero(level: u32) -> Self {
        let d = field_unchecked(level).degree;
        CycScalar { level, coeffs: vec![BigRational::zero(); d] }
    }

    pub fn one(level: u32) -> Self {
        Self::from_rational(level, BigRational::one())
    }

    pub fn from_int(level: u32, v: i64) -> Self {
        Self::from_rational(level, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(level: u32, v: BigRational) -> Self {
        let mut z = Self::zero(level);
        z.coeffs[0] = v;
        z
    }

    /// Build from an arbitrary-length coefficient vector in powers of ξ (reduced on entry).
    pub fn from_coeffs(level: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        let f = field(level)?;
        Ok(CycScalar { level, coeffs: f.reduce(coeffs) })
    }

    /// ξ^k for any integer k.
    pub fn q_pow(level: u32, k: i64) -> Self {
        let f = field_unchecked(level);
        let order = 2 * level as i64;
        let idx = k.rem_euclid(order) as usize;
        CycScalar { level, coeffs: f.powers[idx].clone() }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Is this a rational constant?
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// True when every power-basis coefficient is an integer (membership in Z[ξ]).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Number of nonzero power-basis coefficients; used as a size heuristic.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            Err(AdoError::LevelMismatch(self.level, other.level))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycScalar { level: self.level, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycScalar { level: self.level, coeffs })
    }

    /// Product reduced modulo the 2N-th cyclotomic polynomial.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let d = self.coeffs.len();
        let mut tmp = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    tmp[i + j] += a * b;
                }
            }
        }
        let coeffs = field_unchecked(self.level).reduce(tmp);
        Ok(CycScalar { level: self.level, coeffs })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycScalar { level: self.level, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AdoError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.level, r.recip()));
        }
        let f = field_unchecked(self.level);
        let mut modulus = f.modulus.clone();
        modulus.push(BigRational::one());
        let u = qpoly::inverse_mod(&self.coeffs, &modulus);
        Ok(CycScalar { level: self.level, coeffs: f.reduce(u) })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// Image under ξ ↦ ξ^{-1} (complex conjugation).
    pub fn bar(&self) -> Self {
        let mut out = Self::zero(self.level);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &Self::q_pow(self.level, -(k as i64)).scale(c);
            }
        }
        out
    }

    pub fn to_complex(&self) -> Complex64 {
        let base = std::f64::consts::PI / self.level as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| Complex64::from_polar(1.0, base * k as f64) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                self.$try(rhs).expect("cyclotomic level mismatch")
            }
        }
        impl $trait for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$try(&rhs).expect("cyclotomic level mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { level: self.level, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Renders as an integer (or rational) combination of powers of ξ.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, a.is_one()) {
                (0, _) => write!(f, "{}", a)?,
                (_, true) => {}
                (_, false) => write!(f, "{}", a)?,
            }
            match k {
                0 => {}
                1 => write!(f, "ξ")?,
                _ => write!(f, "ξ^{}", k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Dense univariate polynomials over Q, just enough for field inversion.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    fn trim(p: &mut Vec<BigRational>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        if r.len() < b.len() {
            return (vec![], r);
        }
        let lead_inv = b[db].recip();
        let mut q = vec![BigRational::zero(); r.len() - db];
        while r.len() >= b.len() {
            let k = r.len() - 1 - db;
            let c = r.last().unwrap() * &lead_inv;
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
            q[k] = c;
            r.pop();
            trim(&mut r);
        }
        (q, r)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    /// u with u·a ≡ 1 (mod m); `m` irreducible so gcd(a, m) is a constant.
    pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) = (vec![], vec![BigRational::from_integer(1.into())]);
        while !r1.is_empty() {
            let (q, r) = divmod(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant
        let c = r0[0].recip();
        s0.iter().map(|x| x * &c).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(level: u32) -> CycScalar {
        CycScalar::q_pow(level, 1)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn i_times_i() {
        let i = q(2);
        assert_eq!(&i * &i, CycScalar::from_int(2, -1));
    }

    #[test]
    fn one_is_identity() {
        let a = &q(3) + &CycScalar::from_int(3, 5);
        assert_eq!(&CycScalar::one(3) * &a, a);
    }

    #[test]
    fn difference_of_squares_at_level_two() {
        let one = CycScalar::one(2);
        let x = &q(2) + &one;
        let y = &q(2) - &one;
        assert_eq!(&x * &y, CycScalar::from_int(2, -2));
    }

    #[test]
    fn root_of_unity_relations() {
        for level in 2..=6 {
            assert!(CycScalar::q_pow(level, 2 * level as i64).is_one());
            assert_eq!(CycScalar::q_pow(level, level as i64), CycScalar::from_int(level, -1));
            let mut p = CycScalar::one(level);
            for _ in 0..level {
                p = &p * &q(level);
            }
            assert_eq!(p, CycScalar::from_int(level, -1));
        }
    }

    #[test]
    fn level_mismatch_is_an_error() {
        assert_eq!(q(2).try_mul(&q(3)), Err(AdoError::LevelMismatch(2, 3)));
    }

    #[test]
    fn level_one_rejected() {
        assert!(matches!(field(1), Err(AdoError::UnsupportedLevel(1))));
    }

    #[test]
    fn inverse() {
        for level in 2..=7 {
            let a = &(&q(level) * &q(level)) + &CycScalar::from_int(level, 3);
            let b = a.inv().unwrap();
            assert!((&a * &b).is_one());
        }
        assert_eq!(CycScalar::zero(3).inv(), Err(AdoError::DivisionByZero));
    }

    #[test]
    fn bar_is_conjugation() {
        let a = &q(5) + &CycScalar::q_pow(5, 3).scale(&BigRational::new(2.into(), 3.into()));
        let z = a.to_complex();
        let w = a.bar().to_complex();
        assert!((z.conj() - w).norm() < 1e-12);
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn display() {
        let a = &q(3) - &CycScalar::from_int(3, 2);
        assert_eq!(a.to_string(), "-2 + ξ");
        assert_eq!(CycScalar::zero(3).to_string(), "0");
    }
}
