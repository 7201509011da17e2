//! Exact coefficient arithmetic.

pub mod cyclo;
pub mod laurent;
pub mod scalar;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use cyclo::CycScalar;
pub use laurent::SPoly;
pub use scalar::{quantum_integer, quantum_integer_lambda, ScalarExt, GCD_TERM_THRESHOLD};

use crate::error::{AdoError, Result};

/// The coefficient maps available for specialization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpecializationMap {
    /// x ↦ q^{-2λ} = s^{-2}, d ↦ -q².
    Psi,
    /// x ↦ s², d ↦ -q^{-2}.
    Gamma,
    /// q ↦ ξ, s ↦ ξ^λ, t ↦ exp(iπλ²/(2N)) for a complex λ.
    EtaNumeric { lambda: Complex64 },
}

/// Complex values of (s, t) for a given λ at level N.
pub fn eta_values(level: u32, lambda: Complex64) -> (Complex64, Complex64) {
    let n = level as f64;
    let i = Complex64::i();
    let s = (i * PI * lambda / n).exp();
    let t = (i * PI * lambda * lambda / (2.0 * n)).exp();
    (s, t)
}

/// Evaluate x under the numeric map.
pub fn specialize(x: &ScalarExt, map: &SpecializationMap) -> Result<Complex64> {
    match map {
        SpecializationMap::EtaNumeric { lambda } => {
            let (s, t) = eta_values(x.level(), *lambda);
            x.eval(s, t)
        }
        _ => Err(AdoError::ParameterMismatch("numeric specialization needs a value of λ".into())),
    }
}

/// Integer Laurent polynomial in the two homological variables x and d.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XdPoly {
    terms: BTreeMap<(i64, i64), i64>,
}

impl XdPoly {
    pub fn new() -> Self {
        XdPoly::default()
    }

    pub fn monomial(c: i64, x_exp: i64, d_exp: i64) -> Self {
        let mut p = XdPoly::new();
        p.add_term(c, x_exp, d_exp);
        p
    }

    pub fn add_term(&mut self, c: i64, x_exp: i64, d_exp: i64) {
        let e = self.terms.entry((x_exp, d_exp)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(x_exp, d_exp));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (c, a, b))
    }

    /// Image under ψ or γ in the working ring at the given level.
    pub fn apply(&self, map: &SpecializationMap, level: u32) -> Result<ScalarExt> {
        let (x_s, d_sign, d_q) = match map {
            SpecializationMap::Psi => (-2, -1, 2),
            SpecializationMap::Gamma => (2, -1, -2),
            SpecializationMap::EtaNumeric { .. } => {
                return Err(AdoError::ParameterMismatch("the numeric map acts on the working ring".into()))
            }
        };
        let mut acc = ScalarExt::zero(level);
        for (c, a, b) in self.terms() {
            let sign = if b.rem_euclid(2) == 1 { d_sign } else { 1 };
            let coeff = &CycScalar::from_int(level, c * sign) * &CycScalar::q_pow(level, d_q * b);
            acc = &acc + &ScalarExt::monomial(coeff, x_s * a, 0);
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct ScalarJson {
    t_exp: i64,
    num_offset: i64,
    num: Vec<Vec<String>>,
    den_offset: i64,
    den: Vec<Vec<String>>,
}

fn poly_to_json(p: &SPoly) -> Vec<Vec<String>> {
    p.coeffs().iter().map(|c| c.coeffs().iter().map(rational_to_string).collect()).collect()
}

fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_from_str(s: &str) -> Result<BigRational> {
    let bad = || AdoError::Malformed(format!("rational {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn poly_from_json(level: u32, offset: i64, rows: &[Vec<String>]) -> Result<SPoly> {
    let coeffs = rows
        .iter()
        .map(|row| {
            let rs = row.iter().map(|s| rational_from_str(s)).collect::<Result<Vec<_>>>()?;
            CycScalar::from_coeffs(level, rs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SPoly::new(level, offset, coeffs))
}

impl ScalarExt {
    /// JSON form of the reduced value.
    pub fn to_json(&self) -> serde_json::Value {
        let r = self.reduced();
        let j = ScalarJson {
            t_exp: r.t_exp(),
            num_offset: r.num().low(),
            num: poly_to_json(r.num()),
            den_offset: r.den().low(),
            den: poly_to_json(r.den()),
        };
        serde_json::to_value(j).expect("plain data serializes")
    }

    pub fn from_json(level: u32, v: &serde_json::Value) -> Result<Self> {
        let j: ScalarJson = serde_json::from_value(v.clone()).map_err(|e| AdoError::Malformed(e.to_string()))?;
        let num = poly_from_json(level, j.num_offset, &j.num)?;
        let den = poly_from_json(level, j.den_offset, &j.den)?;
        Ok(ScalarExt::from_parts(num, den, 0)?.with_t(j.t_exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-9
    }

    #[test]
    fn spec_examples() {
        let eta = |l: f64| SpecializationMap::EtaNumeric { lambda: Complex64::new(l, 0.0) };
        assert!(close(specialize(&ScalarExt::one(2), &eta(0.3)).unwrap(), Complex64::new(1.0, 0.0)));
        assert!(close(specialize(&ScalarExt::s_pow(2, 1), &eta(2.0)).unwrap(), Complex64::new(-1.0, 0.0)));
        let v = specialize(&quantum_integer_lambda(2, 0), &eta(1.0)).unwrap();
        assert!(close(v, Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn degenerate_lambda() {
        // [λ] vanishes at λ = 0
        let x = quantum_integer_lambda(3, 0).inv().unwrap();
        let map = SpecializationMap::EtaNumeric { lambda: Complex64::new(0.0, 0.0) };
        assert_eq!(specialize(&x, &map), Err(AdoError::DegenerateSpecialization));
    }

    #[test]
    fn lambda_integer_matches_integer_at_integer_lambda() {
        for level in 2..=5u32 {
            for k in -3..=3i64 {
                for off in -3..=3i64 {
                    let map = SpecializationMap::EtaNumeric { lambda: Complex64::new(k as f64, 0.0) };
                    let a = specialize(&quantum_integer_lambda(level, off), &map).unwrap();
                    let b = quantum_integer(level, k + off);
                    assert!(close(a, specialize(&b, &map).unwrap()));
                }
            }
        }
    }

    #[test]
    fn homological_maps() {
        let p = XdPoly::monomial(3, 1, 1);
        assert_eq!(
            p.apply(&SpecializationMap::Gamma, 3).unwrap(),
            ScalarExt::monomial(CycScalar::from_int(3, -3), 2, 0).try_mul(&ScalarExt::q_pow(3, -2)).unwrap()
        );
        assert_eq!(
            p.apply(&SpecializationMap::Psi, 3).unwrap(),
            ScalarExt::monomial(CycScalar::from_int(3, -3), -2, 0).try_mul(&ScalarExt::q_pow(3, 2)).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let level = 3;
        let x = (&quantum_integer_lambda(level, 2) * &ScalarExt::t_pow(level, -2))
            .try_div(&quantum_integer_lambda(level, -1))
            .unwrap();
        let j = x.to_json();
        assert_eq!(ScalarExt::from_json(level, &j).unwrap(), x);
        assert_eq!(j["tExp"], serde_json::json!(-2));
    }
}
