//! Closed-form polynomials attached to `K_{1,i,t}` and its one-edge-deleted
//! variant, the resolvent sextic of a depressed quartic, and the scalar
//! condition polynomial `f_a(n, i)`.

use crate::error::{Error, Result};

use super::{largest_real_root, real_roots, IntPoly, Poly};

fn ip(c: &[i128]) -> IntPoly {
    IntPoly::new(c.to_vec())
}

/// `x^6 + 8a x^4 + 16(a^2 - 4c) x^2 - 64 b^2`, whose roots are
/// `2(x_p + x_q)` over the six root pairs of `x^4 + a x^2 + b x + c`.
pub fn resolvent_sextic(a: f64, b: f64, c: f64) -> Poly {
    Poly::new(vec![
        1.0,
        0.0,
        8.0 * a,
        0.0,
        16.0 * (a * a - 4.0 * c),
        0.0,
        -64.0 * b * b,
    ])
}

pub fn resolvent_sextic_int(a: i128, b: i128, c: i128) -> IntPoly {
    ip(&[1, 0, 8 * a, 0, 16 * (a * a - 4 * c), 0, -64 * b * b])
}

/// Sum of absolute root values of `x^4 + a x^2 + b x + c`, computed as the
/// largest root of its resolvent sextic.
///
/// Requires four real roots with exactly two of them positive (a root at
/// zero counts as neither sign); both are checked by certified root counting.
pub fn quartic_energy(a: f64, b: f64, c: f64) -> Result<f64> {
    let quartic = Poly::new(vec![1.0, 0.0, a, b, c]);
    let rs = real_roots(&quartic)?;
    if rs.certified_count != 4 {
        return Err(Error::Precondition(format!(
            "quartic has {} real roots, expected 4",
            rs.certified_count
        )));
    }
    if rs.count_positive() != 2 {
        return Err(Error::Precondition(format!(
            "quartic has {} positive roots, expected exactly 2",
            rs.count_positive()
        )));
    }
    largest_real_root(&resolvent_sextic(a, b, c))
}

/// Characteristic polynomial of the part quotient of `K_{1,i,t}`:
/// `x^3 - (ti + i + t) x - 2ti`.
pub fn tripartite_quotient_char_poly(i: i64, t: i64) -> IntPoly {
    let (i, t) = (i as i128, t as i128);
    ip(&[1, 0, -(t * i + i + t), -2 * t * i])
}

/// Characteristic polynomial of the quotient of `K_{1,i,t} - e`, `e` between
/// the 1-part and the i-part:
/// `x^4 + (1 - ti - i - t) x^2 - 2(ti - t) x + (ti - t)`.
pub fn tripartite_deleted_char_poly(i: i64, t: i64) -> IntPoly {
    let (i, t) = (i as i128, t as i128);
    ip(&[1, 0, -t * i - i - t + 1, -2 * (t * i - t), t * i - t])
}

/// `g(x) = 8 phi(x/2) = x^3 - 4(ti + i + t) x - 16ti`; `tau(g) = E(K_{1,i,t})`.
pub fn tripartite_g(i: i64, t: i64) -> IntPoly {
    let (i, t) = (i as i128, t as i128);
    ip(&[1, 0, -4 * (t * i + i + t), -16 * t * i])
}

/// Resolvent of the deleted-edge quartic; `tau(h) = E(K_{1,i,t} - e)`.
pub fn tripartite_h(i: i64, t: i64) -> IntPoly {
    let (i, t) = (i as i128, t as i128);
    let u = t * i + t;
    ip(&[
        1,
        0,
        -8 * (t * i + t + i - 1),
        0,
        16 * (u * u + (i - 1) * (i - 1) * (2 * t + 1)),
        0,
        -256 * (t * i - t) * (t * i - t),
    ])
}

/// `(q, r)` with `h = q g + r`:
/// `q = x^3 - 4((i+1)t + i - 2) x + 16ti`,
/// `r = -16[(4ti - 4t - 1) x^2 - 8ti x - 16(2i - 1) t^2]`.
pub fn tripartite_q_r(i: i64, t: i64) -> (IntPoly, IntPoly) {
    let (i, t) = (i as i128, t as i128);
    let q = ip(&[1, 0, -4 * ((i + 1) * t + i - 2), 16 * t * i]);
    let r = ip(&[
        -16 * (4 * t * i - 4 * t - 1),
        16 * 8 * t * i,
        16 * 16 * (2 * i - 1) * t * t,
    ]);
    (q, r)
}

/// Factors of `h` at `i = 2`:
/// `h1 = x^3 + 4x^2 - (12t - 4) x - 16t`, `h2 = x^3 - 4x^2 - (12t - 4) x + 16t`.
pub fn case1_factors(t: i64) -> (IntPoly, IntPoly) {
    let t = t as i128;
    (
        ip(&[1, 4, -(12 * t - 4), -16 * t]),
        ip(&[1, -4, -(12 * t - 4), 16 * t]),
    )
}

/// `h(1 + sqrt(1 + 8i))` at `t = 1` in closed form:
/// `32(-16 i^2 + 36 i + 5 sqrt(8i + 1) - 3)`.
pub fn case3_h_value(i: i64) -> f64 {
    let i = i as f64;
    32.0 * (-16.0 * i * i + 36.0 * i + 5.0 * (8.0 * i + 1.0).sqrt() - 3.0)
}

/// `f_a(n, i) = n(a i^2 - 2(1 - a) i - 1) - a i^3 + (1 - a) i^2 - (a - 2) i`.
pub fn f_a(n: i64, i: i64, a: f64) -> f64 {
    let (n, i) = (n as f64, i as f64);
    n * (a * i * i - 2.0 * (1.0 - a) * i - 1.0) - a * i.powi(3) + (1.0 - a) * i * i - (a - 2.0) * i
}

/// `den * f_{num/den}(n, i)`, exact.
pub fn f_a_scaled(n: i64, i: i64, num: i64, den: i64) -> i128 {
    let (n, i, p, q) = (n as i128, i as i128, num as i128, den as i128);
    n * (p * i * i - 2 * (q - p) * i - q) - p * i * i * i + (q - p) * i * i - (p - 2 * q) * i
}

/// Polynomials behind the spectral-radius bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPolys {
    /// Quotient polynomial of `K_{1,i,n-i-1}`:
    /// `x^3 - ((n-i)(i+1) - 1) x - 2(n-i-1) i`.
    pub cubic: IntPoly,
    /// Two-cell quotient polynomial of `K_{i,1,...,1}`:
    /// `x^2 - (n-i-1) x - i(n-i)`.
    pub quadratic: IntPoly,
    /// Quotient polynomial of `K_{1,2,2,n-5}`:
    /// `x^4 - (5n-17) x^2 - 8(2n-9) x - 6(2n-10)`.
    pub quartic: IntPoly,
}

pub fn bound_polys(n: i64, i: i64) -> BoundPolys {
    let (n, i) = (n as i128, i as i128);
    BoundPolys {
        cubic: ip(&[1, 0, -((n - i) * (i + 1) - 1), -2 * (n - i - 1) * i]),
        quadratic: ip(&[1, -(n - i - 1), -i * (n - i)]),
        quartic: ip(&[1, 0, -(5 * n - 17), -8 * (2 * n - 9), -6 * (2 * n - 10)]),
    }
}
