//! Exact gcd, square-free decomposition and Sturm chains over the integers,
//! using primitive pseudo-remainder sequences. Every operation is
//! overflow-checked; callers fall back to floating point on `Overflow`.

use crate::error::{Error, Result};

use super::IntPoly;

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl IntPoly {
    pub fn derivative(&self) -> IntPoly {
        let d = self.degree();
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[..d]
                .iter()
                .enumerate()
                .map(|(idx, &c)| c * (d - idx) as i128)
                .collect(),
        )
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> i128 {
        self.coeffs.iter().fold(0, |g, &c| gcd_i128(g, c))
    }

    /// `self / content`, with the leading coefficient made positive.
    pub fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c == 0 {
            return IntPoly::zero();
        }
        let c = if self.leading() < 0 { -c } else { c };
        IntPoly::new(self.coeffs.iter().map(|&x| x / c).collect())
    }
}

/// `m * a = q * b + r` with `m = lead(b)^(deg a - deg b + 1)`; returns
/// `(m, r)`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> Result<(i128, IntPoly)> {
    if b.is_zero() {
        return Err(Error::Precondition("division by the zero polynomial".into()));
    }
    if a.is_zero() || a.degree() < b.degree() {
        return Ok((1, a.clone()));
    }
    let lb = b.leading();
    let steps = a.degree() - b.degree() + 1;
    let mut r = a.coeffs.clone();
    let mut m = 1i128;
    let db = b.coeffs.len();
    for s in 0..steps {
        let lead = r[s];
        for x in r.iter_mut().skip(s) {
            *x = x.checked_mul(lb).ok_or(Error::Overflow)?;
        }
        m = m.checked_mul(lb).ok_or(Error::Overflow)?;
        for j in 0..db {
            let sub = lead.checked_mul(b.coeffs[j]).ok_or(Error::Overflow)?;
            r[s + j] = r[s + j].checked_sub(sub).ok_or(Error::Overflow)?;
        }
    }
    Ok((m, IntPoly::new(r[steps..].to_vec())))
}

/// Quotient of `a` by a primitive divisor `b` that divides it exactly.
pub(crate) fn exact_div(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if b.is_zero() {
        return Err(Error::Precondition("division by the zero polynomial".into()));
    }
    if a.is_zero() {
        return Ok(IntPoly::zero());
    }
    if a.degree() < b.degree() {
        return Err(Error::Precondition("inexact polynomial division".into()));
    }
    let lb = b.leading();
    let steps = a.degree() - b.degree() + 1;
    let mut r = a.coeffs.clone();
    let mut q = Vec::with_capacity(steps);
    for s in 0..steps {
        if r[s] % lb != 0 {
            return Err(Error::Precondition("inexact polynomial division".into()));
        }
        let c = r[s] / lb;
        q.push(c);
        for (j, &bj) in b.coeffs.iter().enumerate() {
            let sub = c.checked_mul(bj).ok_or(Error::Overflow)?;
            r[s + j] = r[s + j].checked_sub(sub).ok_or(Error::Overflow)?;
        }
    }
    if r[steps..].iter().any(|&x| x != 0) {
        return Err(Error::Precondition("inexact polynomial division".into()));
    }
    Ok(IntPoly::new(q))
}

/// Primitive gcd with positive leading coefficient.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    let (mut r0, mut r1) = (a.primitive(), b.primitive());
    if r0.degree() < r1.degree() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_zero() {
        let (_, r) = pseudo_rem(&r0, &r1)?;
        r0 = r1;
        r1 = r.primitive();
    }
    Ok(r0.primitive())
}

/// Yun's decomposition `p = c * prod a_i^i`, each `a_i` square-free,
/// primitive and non-constant.
pub(crate) fn square_free(p: &IntPoly) -> Result<Vec<(IntPoly, usize)>> {
    let p = p.primitive();
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let g = gcd(&p, &dp)?;
    let mut b = exact_div(&p, &g)?;
    let mut c = exact_div(&dp, &g)?;
    let mut d = c.checked_sub(&b.derivative())?;
    let mut out = Vec::new();
    let mut mult = 1;
    while b.degree() > 0 {
        let a = gcd(&b, &d)?;
        if a.degree() > 0 {
            out.push((a.clone(), mult));
        }
        b = exact_div(&b, &a)?;
        c = exact_div(&d, &a)?;
        d = c.checked_sub(&b.derivative())?;
        mult += 1;
    }
    Ok(out)
}

/// Sturm chain of a square-free `f`, each member a positive multiple of the
/// classical one.
pub(crate) fn sturm_chain(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let mut seq = vec![f.primitive()];
    if f.degree() == 0 {
        return Ok(seq);
    }
    seq.push(f.derivative().primitive());
    loop {
        let n = seq.len();
        let (m, r) = pseudo_rem(&seq[n - 2], &seq[n - 1])?;
        if r.is_zero() {
            break;
        }
        // m * a = q b + r, so sign(rem) = sign(m) * sign(r); the chain wants -rem
        let c = r.content();
        let sign = if m > 0 { -1 } else { 1 };
        let next = IntPoly::new(r.coeffs.iter().map(|&x| sign * (x / c)).collect());
        let done = next.degree() == 0;
        seq.push(next);
        if done {
            break;
        }
    }
    Ok(seq)
}
