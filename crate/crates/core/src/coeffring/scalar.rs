//! The working coefficient ring: rational functions in s over Q(ξ), times a
//! power of the central unit t = q^{λ²/2}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::cyclo::CycScalar;
use super::laurent::SPoly;
use crate::error::{AdoError, Result};

/// Fractions whose combined term count exceeds this are gcd-reduced eagerly.
/// Smaller ones are reduced only by monomial content and a monic denominator.
pub const GCD_TERM_THRESHOLD: usize = 64;

/// num / den · t^t_exp.
///
/// Stored form: `den` has no factor of s, its lowest exponent is 0 and its
/// leading coefficient is 1. Zero is stored with `den = 1`, `t_exp = 0`.
#[derive(Clone)]
pub struct ScalarExt {
    num: SPoly,
    den: SPoly,
    t_exp: i64,
}

impl ScalarExt {
    pub fn zero(level: u32) -> Self {
        ScalarExt { num: SPoly::zero(level), den: SPoly::constant(CycScalar::one(level)), t_exp: 0 }
    }

    pub fn one(level: u32) -> Self {
        Self::from_cyc(CycScalar::one(level))
    }

    pub fn from_int(level: u32, v: i64) -> Self {
        Self::from_cyc(CycScalar::from_int(level, v))
    }

    pub fn from_cyc(c: CycScalar) -> Self {
        let level = c.level();
        ScalarExt { num: SPoly::constant(c), den: SPoly::constant(CycScalar::one(level)), t_exp: 0 }
    }

    /// Laurent polynomial in s.
    pub fn from_poly(p: SPoly) -> Self {
        let level = p.level();
        ScalarExt { num: p, den: SPoly::constant(CycScalar::one(level)), t_exp: 0 }
    }

    /// ξ^k.
    pub fn q_pow(level: u32, k: i64) -> Self {
        Self::from_cyc(CycScalar::q_pow(level, k))
    }

    /// s^k.
    pub fn s_pow(level: u32, k: i64) -> Self {
        Self::from_poly(SPoly::monomial(CycScalar::one(level), k))
    }

    /// t^k.
    pub fn t_pow(level: u32, k: i64) -> Self {
        Self::one(level).with_t(k)
    }

    /// c · s^a · t^b.
    pub fn monomial(c: CycScalar, s_exp: i64, t_exp: i64) -> Self {
        let level = c.level();
        if c.is_zero() {
            return Self::zero(level);
        }
        ScalarExt { num: SPoly::monomial(c, s_exp), den: SPoly::constant(CycScalar::one(level)), t_exp }
    }

    pub fn from_parts(num: SPoly, den: SPoly, t_exp: i64) -> Result<Self> {
        Self::normalized(num, den, t_exp, false)
    }

    fn normalized(num: SPoly, den: SPoly, t_exp: i64, full: bool) -> Result<Self> {
        if den.is_zero() {
            return Err(AdoError::DivisionByZero);
        }
        let level = num.level();
        if num.is_zero() {
            return Ok(Self::zero(level));
        }
        let shift = den.low();
        let (mut num, mut den) = (num.shift(-shift), den.shift(-shift));
        if let Some(l) = den.leading() {
            if !l.is_one() {
                let inv = l.inv()?;
                num = num.scale(&inv);
                den = den.scale(&inv);
            }
        }
        if den.coeffs().len() > 1 && (full || num.terms() + den.terms() > GCD_TERM_THRESHOLD) {
            let g = num.gcd(&den)?;
            if g.coeffs().len() > 1 {
                num = num.exact_div(&g)?;
                den = den.exact_div(&g)?;
            }
        }
        Ok(ScalarExt { num, den, t_exp })
    }

    fn build(num: SPoly, den: SPoly, t_exp: i64) -> Self {
        Self::normalized(num, den, t_exp, false).expect("nonzero denominator")
    }

    /// Fully gcd-reduced canonical form.
    pub fn reduced(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone(), self.t_exp, true).expect("nonzero denominator")
    }

    pub fn level(&self) -> u32 {
        self.num.level()
    }

    pub fn num(&self) -> &SPoly {
        &self.num
    }

    pub fn den(&self) -> &SPoly {
        &self.den
    }

    pub fn t_exp(&self) -> i64 {
        self.t_exp
    }

    pub fn with_t(&self, t_exp: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        ScalarExt { num: self.num.clone(), den: self.den.clone(), t_exp }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.t_exp == 0 && self.num == self.den
    }

    /// True when the s-denominator clears, i.e. the value is a Laurent polynomial in s.
    pub fn is_laurent(&self) -> bool {
        self.reduced().den.coeffs().len() == 1
    }

    /// The value as a Laurent polynomial in s, ignoring t, if the denominator clears.
    pub fn as_laurent(&self) -> Option<SPoly> {
        let r = self.reduced();
        if r.den.coeffs().len() == 1 {
            let c = r.den.coeffs()[0].inv().ok()?;
            Some(r.num.scale(&c))
        } else {
            None
        }
    }

    /// Rough size measure for pivot selection.
    pub fn cost(&self) -> usize {
        self.num.terms() + self.den.terms()
    }

    fn t_for_sum(&self, other: &Self) -> Result<i64> {
        if self.is_zero() {
            Ok(other.t_exp)
        } else if other.is_zero() || self.t_exp == other.t_exp {
            Ok(self.t_exp)
        } else {
            Err(AdoError::TExponentMismatch(self.t_exp, other.t_exp))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.level() != other.level() {
            return Err(AdoError::LevelMismatch(self.level(), other.level()));
        }
        let t = self.t_for_sum(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone(), t, false);
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den), t, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.level() != other.level() {
            return Err(AdoError::LevelMismatch(self.level(), other.level()));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.level()));
        }
        let t = self.t_exp + other.t_exp;
        let one_den = |x: &Self| x.den.coeffs().len() == 1;
        if one_den(self) && one_den(other) {
            return Ok(ScalarExt { num: self.num.mul(&other.num), den: self.den.clone(), t_exp: t });
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den), t, false)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AdoError::DivisionByZero);
        }
        Self::normalized(self.den.clone(), self.num.clone(), -self.t_exp, false)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("inverting zero") } else { self.clone() };
        let mut acc = Self::one(self.level());
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// The bar involution q ↦ q^{-1}, s ↦ s^{-1}, t ↦ t^{-1}.
    pub fn bar(&self) -> Self {
        Self::build(self.num.bar(), self.den.bar(), -self.t_exp)
    }

    /// Numeric value for s and t given as complex numbers (q is fixed by the level).
    pub fn eval(&self, s: Complex64, t: Complex64) -> Result<Complex64> {
        let d = self.den.eval(s);
        let scale = self.den.coeffs().iter().map(|c| c.to_complex().norm()).fold(1.0, f64::max);
        if d.norm() <= 1e-12 * scale {
            return Err(AdoError::DegenerateSpecialization);
        }
        Ok(self.num.eval(s) / d * t.powi(self.t_exp as i32))
    }
}

impl PartialEq for ScalarExt {
    fn eq(&self, other: &Self) -> bool {
        if self.level() != other.level() {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.t_exp != other.t_exp {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for ScalarExt {}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&ScalarExt> for &ScalarExt {
            type Output = ScalarExt;
            fn $method(self, rhs: &ScalarExt) -> ScalarExt {
                self.$try(rhs).unwrap_or_else(|e| panic!("ScalarExt {}: {e}", stringify!($method)))
            }
        }
        impl $trait for ScalarExt {
            type Output = ScalarExt;
            fn $method(self, rhs: ScalarExt) -> ScalarExt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &ScalarExt {
    type Output = ScalarExt;
    fn neg(self) -> ScalarExt {
        ScalarExt { num: self.num.neg(), den: self.den.clone(), t_exp: self.t_exp }
    }
}

impl Neg for ScalarExt {
    type Output = ScalarExt;
    fn neg(self) -> ScalarExt {
        -&self
    }
}

impl fmt::Debug for ScalarExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ScalarExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        let t = match r.t_exp {
            0 => String::new(),
            1 => " · t".to_string(),
            k => format!(" · t^{}", k),
        };
        match r.as_laurent() {
            Some(p) => write!(f, "{}{}", p, t),
            None => write!(f, "[{}] / [{}]{}", r.num, r.den, t),
        }
    }
}

/// [k]_q at q = ξ.
pub fn quantum_integer(level: u32, k: i64) -> ScalarExt {
    ScalarExt::from_cyc(quantum_integer_cyc(level, k))
}

pub(crate) fn quantum_integer_cyc(level: u32, k: i64) -> CycScalar {
    let num = &CycScalar::q_pow(level, k) - &CycScalar::q_pow(level, -k);
    let den = &CycScalar::q_pow(level, 1) - &CycScalar::q_pow(level, -1);
    num.try_div(&den).expect("q - q^{-1} is invertible for level >= 2")
}

/// [λ + offset]_q = (s q^{offset} - s^{-1} q^{-offset}) / (q - q^{-1}).
pub fn quantum_integer_lambda(level: u32, offset: i64) -> ScalarExt {
    let den = (&CycScalar::q_pow(level, 1) - &CycScalar::q_pow(level, -1)).inv().expect("invertible");
    let hi = &CycScalar::q_pow(level, offset) * &den;
    let lo = -&(&CycScalar::q_pow(level, -offset) * &den);
    ScalarExt::from_poly(SPoly::new(level, -1, vec![lo, CycScalar::zero(level), hi]))
}
