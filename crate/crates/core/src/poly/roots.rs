//! Certified real roots: square-free decomposition, Sturm-sequence counting
//! over dyadic brackets, bisection refinement.

use crate::error::{Error, Result};

use super::{exact, IntPoly, Poly};

/// Target bracket width for refined roots.
pub const ROOT_WIDTH: f64 = 1e-12;

// Remainders this small relative to a unit-normalised dividend are zero.
// Only polynomials with non-integral coefficients take the floating-point
// route, and for those a repeated root is non-generic, so the tolerance is
// kept tight to avoid merging close but distinct roots.
const GCD_TOL: f64 = 1e-13;
// Leading coefficients below this (absolute, after normalisation) are
// rounding debris from cancellation in long division.
const LEAD_TOL: f64 = 1e-13;

/// Real roots in ascending order, repeated by multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub real_roots: Vec<f64>,
    /// Number of real roots with multiplicity, as counted by the Sturm
    /// certificate of each square-free factor.
    pub certified_count: usize,
    /// Widest final bracket over all roots.
    pub max_width: f64,
}

impl RootSet {
    pub fn largest(&self) -> Option<f64> {
        self.real_roots.last().copied()
    }

    pub fn count_positive(&self) -> usize {
        self.real_roots.iter().filter(|&&r| r > 0.0).count()
    }

    pub fn count_negative(&self) -> usize {
        self.real_roots.iter().filter(|&&r| r < 0.0).count()
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...`, each member rescaled by a positive
/// constant. Ends at (a multiple of) `gcd(p, p')`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let p = p.normalized();
    let mut seq = vec![p.clone()];
    if p.degree() == 0 {
        return seq;
    }
    seq.push(p.derivative().normalized());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        let r = r.trim_leading(LEAD_TOL);
        if r.is_zero() || r.max_abs() <= GCD_TOL {
            break;
        }
        seq.push((-&r).normalized());
        if seq[n].degree() == 0 {
            break;
        }
    }
    seq
}

fn sign_changes(seq: &[Poly], x: f64) -> usize {
    let mut changes = 0;
    let mut last = 0.0f64;
    for p in seq {
        let v = p.eval(x);
        if v != 0.0 {
            if last != 0.0 && (v > 0.0) != (last > 0.0) {
                changes += 1;
            }
            last = v;
        }
    }
    changes
}

/// Distinct roots in `(a, b]`.
fn count_in(seq: &[Poly], a: f64, b: f64) -> usize {
    sign_changes(seq, a).saturating_sub(sign_changes(seq, b))
}

/// Power of two above the Fujiwara bound
/// `2 max(|c_{n-1}/c_n|, |c_{n-2}/c_n|^(1/2), ..., |c_0/(2 c_n)|^(1/n))`
/// on the modulus of every root.
fn root_bound(p: &Poly) -> f64 {
    let n = p.degree();
    let lead = p.leading().abs();
    let mut m = 0.0f64;
    for (k, c) in p.coeffs().iter().enumerate().skip(1) {
        let ratio = if k == n { c.abs() / (2.0 * lead) } else { c.abs() / lead };
        m = m.max(ratio.powf(1.0 / k as f64));
    }
    let b = (2.0 * m).max(f64::MIN_POSITIVE);
    2f64.powi(b.log2().ceil() as i32 + 1)
}

fn numeric_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut r0 = a.normalized();
    let mut r1 = b.normalized();
    while !r1.is_zero() {
        let (_, r) = r0.div_rem(&r1);
        let r = r.trim_leading(LEAD_TOL);
        r0 = r1;
        r1 = if r.max_abs() <= GCD_TOL { Poly::zero() } else { r.normalized() };
    }
    r0.normalized()
}

fn is_negligible(p: &Poly, reference: f64) -> bool {
    p.is_zero() || p.max_abs() <= GCD_TOL * reference.max(f64::MIN_POSITIVE)
}

/// Yun's square-free decomposition: `p = c * prod a_i^i` with each `a_i`
/// square-free.
fn square_free_factors(p: &Poly) -> Vec<(Poly, usize)> {
    let dp = p.derivative();
    let g = numeric_gcd(p, &dp);
    if g.degree() == 0 {
        return vec![(p.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut b = p.div_rem(&g).0.normalized();
    let c = dp.div_rem(&g).0;
    let c = c.scale(1.0 / p.div_rem(&g).0.max_abs());
    let mut d = &c - &b.derivative();
    let mut mult = 1;
    while b.degree() > 0 {
        let a = if is_negligible(&d, c.max_abs().max(b.derivative().max_abs())) {
            b.clone()
        } else {
            numeric_gcd(&b, &d)
        };
        if a.degree() > 0 {
            out.push((a.clone(), mult));
        }
        let next_b = b.div_rem(&a).0;
        let c_next = d.div_rem(&a).0;
        let s = next_b.max_abs();
        let next_b = next_b.scale(1.0 / s);
        let c_next = c_next.scale(1.0 / s);
        d = &c_next - &next_b.derivative();
        b = next_b;
        mult += 1;
        if mult > p.degree() {
            break;
        }
    }
    out
}

/// Roots of a square-free polynomial with their final bracket widths.
fn isolate_square_free(f: &Poly, width: f64) -> Vec<(f64, f64)> {
    if f.degree() == 0 {
        return Vec::new();
    }
    if f.degree() == 1 {
        return vec![(-f.coeffs()[1] / f.coeffs()[0], 0.0)];
    }
    isolate_with(f, &sturm_sequence(f), width)
}

fn isolate_with(f: &Poly, seq: &[Poly], width: f64) -> Vec<(f64, f64)> {
    let seq = seq.to_vec();
    let bound = root_bound(f);
    let mut out = Vec::new();
    let mut stack = vec![(-bound, bound, count_in(&seq, -bound, bound))];
    while let Some((a, b, c)) = stack.pop() {
        match c {
            0 => {}
            1 => out.push(refine(f, &seq, a, b, width)),
            _ => {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b || b - a <= width {
                    // numerically coincident roots
                    out.extend(std::iter::repeat_n((mid, b - a), c));
                    continue;
                }
                let left = count_in(&seq, a, mid);
                stack.push((mid, b, c.saturating_sub(left)));
                stack.push((a, mid, left));
            }
        }
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

/// Shrinks `(a, b]` holding exactly one root of `f` to `width`.
fn refine(f: &Poly, seq: &[Poly], mut a: f64, mut b: f64, width: f64) -> (f64, f64) {
    let mut fa = f.eval(a);
    let fb = f.eval(b);
    if fb == 0.0 {
        return (b, 0.0);
    }
    let sign_change = fa != 0.0 && (fa > 0.0) != (fb > 0.0);
    while b - a > width {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if sign_change {
            let fm = f.eval(mid);
            if fm == 0.0 {
                return (mid, 0.0);
            }
            if (fm > 0.0) == (fa > 0.0) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        } else if count_in(seq, a, mid) >= 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    (0.5 * (a + b), b - a)
}

/// Re-brackets a simple root `r` of `p` and bisects on `p` itself.
fn polish(p: &Poly, r: f64) -> f64 {
    let mut delta = 1e-9 * r.abs().max(1.0);
    for _ in 0..4 {
        let (a, b) = (r - delta, r + delta);
        let (fa, fb) = (p.eval(a), p.eval(b));
        if fa != 0.0 && fb != 0.0 && (fa > 0.0) != (fb > 0.0) {
            let (mut a, mut b, mut fa) = (a, b, fa);
            while b - a > ROOT_WIDTH {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                let fm = p.eval(mid);
                if fm == 0.0 {
                    return mid;
                }
                if (fm > 0.0) == (fa > 0.0) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        delta *= 10.0;
    }
    r
}

/// `p` as an integer polynomial, if every coefficient is an integer that
/// `f64` represents exactly.
fn as_int(p: &Poly) -> Option<IntPoly> {
    const EXACT: f64 = 9_007_199_254_740_992.0;
    p.coeffs()
        .iter()
        .all(|c| c.fract() == 0.0 && c.abs() <= EXACT)
        .then(|| IntPoly::new(p.coeffs().iter().map(|&c| c as i128).collect()))
}

/// Roots through exact square-free factors and exact Sturm chains.
fn exact_roots(p: &IntPoly) -> Result<RootSet> {
    let zeros = p.coeffs().iter().rev().take_while(|&&c| c == 0).count();
    let deflated = IntPoly::new(p.coeffs()[..p.coeffs().len() - zeros].to_vec());
    let mut roots: Vec<f64> = vec![0.0; zeros];
    let mut max_width: f64 = 0.0;
    for (factor, mult) in exact::square_free(&deflated)? {
        let f = factor.to_f64();
        let found = if factor.degree() == 1 {
            vec![(-f.coeffs()[1] / f.coeffs()[0], 0.0)]
        } else {
            let seq: Vec<Poly> = exact::sturm_chain(&factor)?
                .iter()
                .map(|q| q.to_f64().normalized())
                .collect();
            // exact factors: bisect down to adjacent doubles
            isolate_with(&f.normalized(), &seq, 0.0)
        };
        for (r, w) in found {
            max_width = max_width.max(w);
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(RootSet {
        certified_count: roots.len(),
        real_roots: roots,
        max_width,
    })
}

/// All real roots of `p`, with multiplicity.
///
/// Integer-coefficient input is factored and counted exactly; anything else,
/// or integer input whose exact chain overflows, goes through a numerical
/// square-free decomposition.
pub fn real_roots(p: &Poly) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::Precondition("the zero polynomial has no finite root set".into()));
    }
    if let Some(ip) = as_int(p) {
        match exact_roots(&ip) {
            Err(Error::Overflow) => {}
            other => return other,
        }
    }
    let p = p.normalized();
    let zeros = p.coeffs().iter().rev().take_while(|&&c| c == 0.0).count();
    let deflated = Poly::new(p.coeffs()[..p.coeffs().len() - zeros].to_vec());

    let mut roots: Vec<f64> = vec![0.0; zeros];
    let mut max_width: f64 = 0.0;
    if deflated.degree() > 0 {
        // x = s y with s a power of two puts every root in [-1, 1] and
        // balances the coefficients; the substitution is exact.
        let s = root_bound(&deflated);
        let scaled = deflated.scale_var(s).normalized();
        let factors = square_free_factors(&scaled);
        let split = factors.len() > 1 || factors.first().is_some_and(|(_, m)| *m > 1);
        for (factor, mult) in &factors {
            for (y, w) in isolate_square_free(factor, ROOT_WIDTH / s) {
                let r = if split && *mult == 1 { polish(&deflated, y * s) } else { y * s };
                max_width = max_width.max(w * s);
                roots.extend(std::iter::repeat_n(r, *mult));
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(RootSet {
        certified_count: roots.len(),
        real_roots: roots,
        max_width,
    })
}

/// Largest real root, `tau(p)`.
pub fn largest_real_root(p: &Poly) -> Result<f64> {
    real_roots(p)?.largest().ok_or(Error::NoRealRoot)
}

/// Sum of absolute values of the roots; all roots must be real.
pub fn poly_energy(p: &Poly) -> Result<f64> {
    let rs = real_roots(p)?;
    if rs.certified_count != p.degree() {
        return Err(Error::MissingRealRoots {
            expected: p.degree(),
            found: rs.certified_count,
        });
    }
    Ok(rs.real_roots.iter().map(|r| r.abs()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn assert_roots(p: &Poly, want: &[f64], tol: f64) {
        let rs = real_roots(p).unwrap();
        assert_eq!(rs.real_roots.len(), want.len(), "{p}: {:?}", rs.real_roots);
        for (x, y) in rs.real_roots.iter().zip(want) {
            assert!((x - y).abs() <= tol, "{p}: got {:?}, want {want:?}", rs.real_roots);
        }
    }

    #[test]
    fn cubic_and_quadratic() {
        assert_roots(&Poly::new(vec![1.0, 0.0, -7.0, -6.0]), &[-2.0, -1.0, 3.0], 1e-12);
        let p = Poly::new(vec![1.0, -6.0, -14.0]);
        assert_roots(&p, &[3.0 - 23f64.sqrt(), 3.0 + 23f64.sqrt()], 1e-12);
        assert_eq!(largest_real_root(&Poly::new(vec![1.0, 0.0, -7.0, -6.0])).unwrap(), 3.0);
    }

    #[test]
    fn no_real_root() {
        assert_eq!(largest_real_root(&Poly::new(vec![1.0, 0.0, 1.0])), Err(Error::NoRealRoot));
        assert!(real_roots(&Poly::zero()).is_err());
    }

    #[test]
    fn multiplicities() {
        assert_roots(&Poly::new(vec![1.0, -2.0, 1.0]), &[1.0, 1.0], 1e-9);
        assert_roots(&Poly::new(vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]), &[0.0; 6], 0.0);
        // x^2 (x^2 - 4)(x^2 - 36)
        assert_roots(
            &Poly::new(vec![1.0, 0.0, -40.0, 0.0, 144.0, 0.0, 0.0]),
            &[-6.0, -2.0, 0.0, 0.0, 2.0, 6.0],
            1e-12,
        );
        // (x - 4)(x + 2)^2
        assert_roots(&Poly::new(vec![1.0, 0.0, -12.0, -16.0]), &[-2.0, -2.0, 4.0], 1e-9);
        // (x - 1)^3 (x + 2)
        assert_roots(&Poly::from_roots(&[1.0, 1.0, 1.0, -2.0]), &[-2.0, 1.0, 1.0, 1.0], 1e-7);
        // (x^2 - 1)^2 (x - 3)
        let p = Poly::from_roots(&[1.0, 1.0, -1.0, -1.0, 3.0]);
        assert_roots(&p, &[-1.0, -1.0, 1.0, 1.0, 3.0], 1e-9);
    }

    #[test]
    fn sturm_counts_distinct_roots() {
        let p = Poly::from_roots(&[-3.0, -0.5, 0.25, 2.0, 7.0]);
        let seq = sturm_sequence(&p);
        assert_eq!(count_in(&seq, -10.0, 10.0), 5);
        assert_eq!(count_in(&seq, 0.0, 3.0), 2);
        assert_eq!(count_in(&seq, 2.5, 6.0), 0);
        let q = Poly::new(vec![1.0, 0.0, 1.0, 0.0, 2.0]);
        assert_eq!(count_in(&sturm_sequence(&q), -100.0, 100.0), 0);
    }

    #[test]
    fn energy_of_polynomial() {
        let p = Poly::from_roots(&[2.0, 1.0, -1.0, -2.0]);
        assert!((poly_energy(&p).unwrap() - 6.0).abs() < 1e-12);
        assert!(poly_energy(&Poly::new(vec![1.0, 0.0, 1.0])).is_err());
    }

    proptest! {
        #[test]
        fn recovers_random_simple_roots(mut rs in prop::collection::vec(-20.0f64..20.0, 1..7)) {
            rs.sort_by(f64::total_cmp);
            prop_assume!(rs.windows(2).all(|w| w[1] - w[0] > 1e-3));
            let p = Poly::from_roots(&rs);
            let got = real_roots(&p).unwrap();
            prop_assert_eq!(got.real_roots.len(), rs.len());
            for (x, y) in got.real_roots.iter().zip(&rs) {
                prop_assert!((x - y).abs() < 1e-7 * (1.0 + y.abs()), "{:?} vs {:?}", got.real_roots, rs);
            }
        }
    }
}
