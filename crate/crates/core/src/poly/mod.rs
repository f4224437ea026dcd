//! Univariate polynomials over `f64` and exact `i128`, characteristic
//! polynomials of small integer matrices, certified real roots, and the
//! closed-form polynomial families for `K_{1,i,t}`.
//!
//! Coefficients are stored highest degree first.

mod charpoly;
mod exact;
mod families;
mod roots;

pub use charpoly::{char_poly, IntMatrix, MAX_CHAR_POLY_DIM};
pub use families::{
    bound_polys, case1_factors, case3_h_value, f_a, f_a_scaled, resolvent_sextic,
    resolvent_sextic_int, quartic_energy, tripartite_deleted_char_poly, tripartite_g,
    tripartite_h, tripartite_q_r, tripartite_quotient_char_poly, BoundPolys,
};
pub use roots::{largest_real_root, poly_energy, real_roots, sturm_sequence, RootSet};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Real polynomial, highest-degree coefficient first. The zero polynomial
/// is the empty coefficient list.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let lead = coeffs.iter().position(|&c| c != 0.0).unwrap_or(coeffs.len());
        Self {
            coeffs: coeffs[lead..].to_vec(),
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[f64]) -> Self {
        roots
            .iter()
            .fold(Self::constant(1.0), |p, &r| &p * &Self::new(vec![1.0, -r]))
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0, check [`Poly::is_zero`].
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.first().copied().unwrap_or(0.0)
    }

    /// Coefficient of `x^power`.
    pub fn coeff(&self, power: usize) -> f64 {
        if self.is_zero() || power > self.degree() {
            0.0
        } else {
            self.coeffs[self.degree() - power]
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `sum |c_k| |x|^k`, the scale of the rounding error in [`Poly::eval`].
    pub fn eval_scale(&self, x: f64) -> f64 {
        let ax = x.abs();
        self.coeffs.iter().fold(0.0, |acc, &c| acc * ax + c.abs())
    }

    pub fn derivative(&self) -> Self {
        let d = self.degree();
        Self::new(
            self.coeffs
                .iter()
                .take(d)
                .enumerate()
                .map(|(idx, &c)| c * (d - idx) as f64)
                .collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Rescaled to unit max-abs coefficient; the sign pattern is kept.
    pub fn normalized(&self) -> Self {
        let m = self.max_abs();
        if m == 0.0 {
            Self::zero()
        } else {
            self.scale(1.0 / m)
        }
    }

    /// `p(s x)`.
    pub fn scale_var(&self, s: f64) -> Self {
        let d = self.degree();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(idx, &c)| c * s.powi((d - idx) as i32))
                .collect(),
        )
    }

    /// Polynomial long division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Poly::zero(), self.clone());
        }
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        let steps = self.degree() - dd + 1;
        let mut quot = Vec::with_capacity(steps);
        for s in 0..steps {
            let q = rem[s] / divisor.coeffs[0];
            quot.push(q);
            rem[s] = 0.0;
            for (j, &dc) in divisor.coeffs.iter().enumerate().skip(1) {
                rem[s + j] -= q * dc;
            }
        }
        (Poly::new(quot), Poly::new(rem[steps..].to_vec()))
    }

    /// Drops leading coefficients with magnitude at most `tol`.
    pub(crate) fn trim_leading(&self, tol: f64) -> Self {
        let lead = self
            .coeffs
            .iter()
            .position(|c| c.abs() > tol)
            .unwrap_or(self.coeffs.len());
        Self {
            coeffs: self.coeffs[lead..].to_vec(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|c| c.to_string()).collect())
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: Vec<String>) -> fmt::Result {
    if coeffs.is_empty() {
        return f.write_str("0");
    }
    let d = coeffs.len() - 1;
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(idx, c)| match d - idx {
            0 => c.clone(),
            1 => format!("{c}*x"),
            p => format!("{c}*x^{p}"),
        })
        .collect();
    f.write_str(&terms.join(" + "))
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let pad = |p: &Poly, i: usize| {
            let off = len - p.coeffs.len();
            if i < off {
                0.0
            } else {
                p.coeffs[i - off]
            }
        };
        Poly::new((0..len).map(|i| pad(self, i) + pad(rhs, i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(-1.0)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Integer polynomial with exact, overflow-checked arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<i128>) -> Self {
        let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(coeffs.len());
        Self {
            coeffs: coeffs[lead..].to_vec(),
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, power: usize) -> i128 {
        if self.is_zero() || power > self.degree() {
            0
        } else {
            self.coeffs[self.degree() - power]
        }
    }

    pub fn to_f64(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| c as f64).collect())
    }

    pub fn eval(&self, x: i128) -> Result<i128> {
        self.coeffs.iter().try_fold(0i128, |acc, &c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow)
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64().eval(x)
    }

    /// `p(s x)`.
    pub fn scale_var(&self, s: i128) -> Result<Self> {
        let d = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, &c)| {
                s.checked_pow((d - idx) as u32)
                    .and_then(|p| p.checked_mul(c))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn scale(&self, s: i128) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(s).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn checked_add(&self, rhs: &IntPoly) -> Result<IntPoly> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let pad = |p: &IntPoly, i: usize| {
            let off = len - p.coeffs.len();
            if i < off {
                0
            } else {
                p.coeffs[i - off]
            }
        };
        let coeffs = (0..len)
            .map(|i| pad(self, i).checked_add(pad(rhs, i)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }

    pub fn checked_sub(&self, rhs: &IntPoly) -> Result<IntPoly> {
        self.checked_add(&rhs.scale(-1)?)
    }

    pub fn checked_mul(&self, rhs: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut out = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = a
                    .checked_mul(*b)
                    .and_then(|p| out[i + j].checked_add(p))
                    .ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPoly::new(out))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|c| c.to_string()).collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.checked_add(rhs).expect("integer polynomial overflow")
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.checked_sub(rhs).expect("integer polynomial overflow")
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.checked_mul(rhs).expect("integer polynomial overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = Poly::new(vec![0.0, 1.0, -3.0, 2.0]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(0), 2.0);
        assert_eq!(p.eval(1.0), 0.0);
        assert_eq!(p.derivative(), Poly::new(vec![2.0, -3.0]));
        let (q, r) = Poly::new(vec![1.0, 0.0, -7.0, -6.0]).div_rem(&Poly::new(vec![1.0, -3.0]));
        assert_eq!(q, Poly::new(vec![1.0, 3.0, 2.0]));
        assert!(r.is_zero());
        assert_eq!(Poly::from_roots(&[1.0, 2.0]), p);
        assert_eq!(p.scale_var(2.0), Poly::new(vec![4.0, -6.0, 2.0]));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn int_arithmetic() {
        let a = IntPoly::new(vec![1, 2]);
        let b = IntPoly::new(vec![1, -2]);
        assert_eq!(&a * &b, IntPoly::new(vec![1, 0, -4]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!((&a + &b).coeffs(), &[2, 0]);
        assert_eq!(a.eval(3).unwrap(), 5);
        assert_eq!(IntPoly::new(vec![1, 0, -4]).scale_var(2).unwrap(), IntPoly::new(vec![4, 0, -4]));
        let big = IntPoly::new(vec![i128::MAX, 1]);
        assert_eq!(big.checked_mul(&big), Err(Error::Overflow));
        assert_eq!(IntPoly::new(vec![1, -3, 0]).to_string(), "1*x^2 + -3*x");
    }
}
