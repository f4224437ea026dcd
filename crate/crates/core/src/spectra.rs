//! Eigenvalues of adjacency and quotient matrices, energy, spectral radius
//! and the per-part Perron vector of a complete multipartite graph.
//!
//! Symmetric matrices go through a cyclic Jacobi solver. Quotient matrices
//! are not symmetric in general, so their spectrum is taken from the
//! characteristic polynomial via certified real-root isolation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{multipartite_quotient, LabeledGraph, PartitionSpec, QuotientMatrix};
use crate::poly::{char_poly, real_roots, IntMatrix};

/// Relative eigen-residual accepted from the symmetric solver.
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-10;
/// Asymmetry accepted by [`eig_symmetric`].
pub const SYMMETRY_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues sorted non-increasingly, with the largest eigen-residual.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub residual_bound: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    /// `i`-th largest eigenvalue, 1-based as in `lambda_1 >= lambda_2 >= ...`.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }
}

/// Full eigen-decomposition of a symmetric matrix.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub spectrum: Spectrum,
    /// Column-major: eigenvector `j` is `vectors[j*n..(j+1)*n]`, matching
    /// `spectrum.values[j]`.
    pub vectors: Vec<f64>,
}

impl SymmetricEigen {
    pub fn vector(&self, j: usize) -> &[f64] {
        let n = self.spectrum.len();
        &self.vectors[j * n..(j + 1) * n]
    }
}

/// Cyclic Jacobi on a dense symmetric `n x n` row-major matrix.
pub fn eigh(m: &[f64], n: usize) -> Result<SymmetricEigen> {
    assert_eq!(m.len(), n * n, "matrix storage does not match dimension");
    let mut asym = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            asym = asym.max((m[i * n + j] - m[j * n + i]).abs());
        }
    }
    if asym > SYMMETRY_TOL {
        return Err(Error::Asymmetric(asym));
    }

    let mut a = m.to_vec();
    // v is row-major here; column j holds eigenvector j
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= f64::EPSILON * norm || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    a[r * n + p] = c * arp - s * arq;
                    a[r * n + q] = s * arp + c * arq;
                }
                for r in 0..n {
                    let apr = a[p * n + r];
                    let aqr = a[q * n + r];
                    a[p * n + r] = c * apr - s * aqr;
                    a[q * n + r] = s * apr + c * aqr;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    let vrp = v[r * n + p];
                    let vrq = v[r * n + q];
                    v[r * n + p] = c * vrp - s * vrq;
                    v[r * n + q] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[y * n + y].total_cmp(&a[x * n + x]).then(x.cmp(&y)));
    let values: Vec<f64> = order.iter().map(|&j| a[j * n + j]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &j in &order {
        vectors.extend((0..n).map(|r| v[r * n + j]));
    }

    let mut residual: f64 = 0.0;
    for (j, &lambda) in values.iter().enumerate() {
        let x = &vectors[j * n..(j + 1) * n];
        let mut r2 = 0.0;
        for row in 0..n {
            let ax: f64 = (0..n).map(|col| m[row * n + col] * x[col]).sum();
            r2 += (ax - lambda * x[row]).powi(2);
        }
        residual = residual.max(r2.sqrt());
    }
    let bound = EIGEN_RESIDUAL_TOL * (1.0 + norm);
    if residual > bound {
        return Err(Error::EigenResidual { residual, bound });
    }

    Ok(SymmetricEigen {
        spectrum: Spectrum {
            values,
            residual_bound: residual,
        },
        vectors,
    })
}

/// Eigenvalues of a symmetric matrix.
pub fn eig_symmetric(m: &[f64], n: usize) -> Result<Spectrum> {
    eigh(m, n).map(|e| e.spectrum)
}

pub fn adjacency_spectrum(g: &LabeledGraph) -> Result<Spectrum> {
    eig_symmetric(&g.adjacency_f64(), g.n())
}

/// Spectrum of a quotient matrix from the real roots of its characteristic
/// polynomial. `residual_bound` carries the widest root bracket.
pub fn eig_quotient(q: &QuotientMatrix) -> Result<Spectrum> {
    let m = IntMatrix::from_rows(&q.b)?;
    let phi = char_poly(&m)?.to_f64();
    let roots = real_roots(&phi)?;
    if roots.real_roots.len() < q.dim() {
        return Err(Error::MissingRealRoots {
            expected: q.dim(),
            found: roots.real_roots.len(),
        });
    }
    let mut values = roots.real_roots;
    values.reverse();
    Ok(Spectrum {
        values,
        residual_bound: roots.max_width,
    })
}

pub fn graph_energy(g: &LabeledGraph) -> Result<f64> {
    if g.n() == 0 {
        return Ok(0.0);
    }
    Ok(adjacency_spectrum(g)?.energy())
}

pub fn spectral_radius(g: &LabeledGraph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    Ok(adjacency_spectrum(g)?.lambda(1))
}

pub fn second_eigenvalue(g: &LabeledGraph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::Precondition(format!(
            "second eigenvalue needs at least 2 vertices, got {}",
            g.n()
        )));
    }
    Ok(adjacency_spectrum(g)?.lambda(2))
}

/// Perron vector of `K_{t_1,...,t_k}` reduced to one entry per part.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerronData {
    pub components: Vec<f64>,
    pub radius: f64,
}

impl PerronData {
    /// `max_i |lambda x_i - sum_{j != i} t_j x_j|`.
    pub fn residual(&self, spec: &PartitionSpec) -> f64 {
        let total: f64 = spec
            .parts()
            .iter()
            .zip(&self.components)
            .map(|(&t, x)| t as f64 * x)
            .sum();
        spec.parts()
            .iter()
            .zip(&self.components)
            .map(|(&t, &x)| (self.radius * x - (total - t as f64 * x)).abs())
            .fold(0.0, f64::max)
    }
}

/// Unit Perron vector per part, normalised so that `sum t_i x_i^2 = 1`.
///
/// The radius is the largest quotient eigenvalue. For this quotient the
/// eigen-equation `lambda x_i = T - t_i x_i` with `T = sum t_j x_j` gives the
/// eigenvector directly as `x_i ∝ 1 / (lambda + t_i)`.
pub fn perron_components(spec: &PartitionSpec) -> Result<PerronData> {
    let radius = eig_quotient(&multipartite_quotient(spec))?.values[0];
    let raw: Vec<f64> = spec.parts().iter().map(|&t| 1.0 / (radius + t as f64)).collect();
    let norm: f64 = spec
        .parts()
        .iter()
        .zip(&raw)
        .map(|(&t, x)| t as f64 * x * x)
        .sum::<f64>()
        .sqrt();
    let data = PerronData {
        components: raw.iter().map(|x| x / norm).collect(),
        radius,
    };
    let res = data.residual(spec);
    if !(res <= 1e-9 * (1.0 + radius)) {
        return Err(Error::EigenResidual {
            residual: res,
            bound: 1e-9 * (1.0 + radius),
        });
    }
    Ok(data)
}
