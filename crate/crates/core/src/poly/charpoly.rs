use crate::error::{Error, Result};

use super::IntPoly;

pub const MAX_CHAR_POLY_DIM: usize = 16;

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        Ok(Self {
            n,
            data: rows.iter().flatten().map(|&x| i128::from(x)).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.n + j]
    }

    fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        let n = self.n;
        let mut data = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let p = a.checked_mul(rhs.get(k, j)).ok_or(Error::Overflow)?;
                    data[i * n + j] = data[i * n + j].checked_add(p).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(IntMatrix { n, data })
    }

    fn trace(&self) -> Result<i128> {
        (0..self.n).try_fold(0i128, |acc, i| acc.checked_add(self.get(i, i)).ok_or(Error::Overflow))
    }
}

/// `det(xI - M)` by the Faddeev-LeVerrier recurrence in exact integers.
///
/// `M_1 = I`, `c_{n-k} = -tr(M M_k) / k`, `M_{k+1} = M M_k + c_{n-k} I`;
/// every division is exact for an integer matrix.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.dim();
    if n > MAX_CHAR_POLY_DIM {
        return Err(Error::TooLarge(n, MAX_CHAR_POLY_DIM));
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(1i128);
    let mut mk = IntMatrix::identity(n);
    for k in 1..=n {
        let amk = m.checked_mul(&mk)?;
        let tr = amk.trace()?;
        let k = k as i128;
        if tr % k != 0 {
            // cannot happen for integer input; guards the exactness claim
            return Err(Error::Precondition("non-integral Faddeev-LeVerrier step".into()));
        }
        let c = -tr / k;
        coeffs.push(c);
        mk = amk;
        for i in 0..n {
            mk.data[i * n + i] = mk.data[i * n + i].checked_add(c).ok_or(Error::Overflow)?;
        }
    }
    Ok(IntPoly::new(coeffs))
}
