use rayon::prelude::*;
use serde::Serialize;

use super::{observe_sign, EnergyComparison, Observed, DEFAULT_SIGN_TOL};
use crate::error::{Error, Result};
use crate::graph::{EdgeLocus, PartitionSpec};
use crate::partitions::partitions;

pub const MAX_FULL_NMAX: usize = 14;
pub const MAX_TRIPARTITE_NMAX: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub sign_tolerance: f64,
    pub tripartite_only: bool,
    /// `1` runs on the calling thread.
    pub workers: usize,
}

impl SweepConfig {
    pub fn new(n_max: usize) -> Self {
        Self {
            n_max,
            sign_tolerance: DEFAULT_SIGN_TOL,
            tripartite_only: false,
            workers: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let cap = if self.tripartite_only {
            MAX_TRIPARTITE_NMAX
        } else {
            MAX_FULL_NMAX
        };
        if !(3..=cap).contains(&self.n_max) {
            return Err(Error::OutOfRange(format!(
                "n_max must lie in [3, {cap}], got {}",
                self.n_max
            )));
        }
        if !(self.sign_tolerance > 0.0) {
            return Err(Error::OutOfRange(format!(
                "sign tolerance must be positive, got {}",
                self.sign_tolerance
            )));
        }
        if self.workers == 0 {
            return Err(Error::OutOfRange("workers must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub agree: usize,
    pub disagree: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub sign_tolerance: f64,
    pub rows: Vec<EnergyComparison>,
    pub summary: Summary,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.summary.disagree == 0 && self.summary.inconclusive == 0
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &EnergyComparison> {
        self.rows
            .iter()
            .filter(|r| r.observed != Observed::Inconclusive && !r.agrees())
    }

    pub fn min_margin(&self) -> f64 {
        self.rows.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min)
    }
}

/// `{1, i, n - i - 1}` with the locus between the 1-part and the i-part.
pub fn tripartite_family(n: usize, i: usize) -> Result<(PartitionSpec, EdgeLocus)> {
    if i == 0 || i + 2 > n {
        return Err(Error::OutOfRange(format!("need 1 <= i <= n - 2, got n = {n}, i = {i}")));
    }
    let spec = PartitionSpec::new(vec![1, i, n - i - 1])?;
    let locus = EdgeLocus::between_sizes(&spec, 1, i)?;
    Ok((spec, locus))
}

/// Every `(spec, locus)` case visited by a sweep, in report order.
pub fn sweep_cases(config: &SweepConfig) -> Result<Vec<(PartitionSpec, EdgeLocus)>> {
    config.validate()?;
    let mut cases = Vec::new();
    for n in 3..=config.n_max {
        if config.tripartite_only {
            for i in 1..=n - 2 {
                cases.push(tripartite_family(n, i)?);
            }
        } else {
            for parts in partitions(n) {
                if parts.len() < 2 {
                    continue;
                }
                let spec = PartitionSpec::new(parts)?;
                for locus in EdgeLocus::all_loci(&spec) {
                    cases.push((spec.clone(), locus));
                }
            }
        }
    }
    dedup_in_order(&mut cases);
    Ok(cases)
}

fn dedup_in_order(cases: &mut Vec<(PartitionSpec, EdgeLocus)>) {
    let mut seen = std::collections::HashSet::new();
    cases.retain(|(s, l)| seen.insert((s.parts().to_vec(), *l)));
}

fn run_cases(
    name: String,
    cases: Vec<(PartitionSpec, EdgeLocus)>,
    sign_tolerance: f64,
    workers: usize,
) -> Result<SweepReport> {
    let observe = |(s, l): &(PartitionSpec, EdgeLocus)| observe_sign(s, *l, sign_tolerance);
    let rows: Vec<EnergyComparison> = if workers <= 1 {
        cases.iter().map(observe).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        // indexed collect keeps case order
        pool.install(|| cases.par_iter().map(observe).collect::<Result<_>>())?
    };
    let mut summary = Summary {
        total: rows.len(),
        ..Summary::default()
    };
    for r in &rows {
        if r.observed == Observed::Inconclusive {
            summary.inconclusive += 1;
        } else if r.agrees() {
            summary.agree += 1;
        } else {
            summary.disagree += 1;
        }
    }
    Ok(SweepReport {
        name,
        sign_tolerance,
        rows,
        summary,
    })
}

/// Predicted against observed sign over every case of `config`.
pub fn sweep_theorem(config: &SweepConfig) -> Result<SweepReport> {
    let cases = sweep_cases(config)?;
    let name = if config.tripartite_only {
        format!("tripartite n<={}", config.n_max)
    } else {
        format!("full n<={}", config.n_max)
    };
    run_cases(name, cases, config.sign_tolerance, config.workers)
}

/// Specs with `k >= min_k`, a 1-part and an `i`-part, locus between them.
fn shaped_cases(n_max: usize, min_k: usize, i: usize) -> Result<Vec<(PartitionSpec, EdgeLocus)>> {
    let mut cases = Vec::new();
    for n in 3..=n_max {
        for parts in partitions(n) {
            if parts.len() < min_k || !parts.contains(&1) || !parts.contains(&i) {
                continue;
            }
            let spec = PartitionSpec::new(parts)?;
            let locus = EdgeLocus::between_sizes(&spec, 1, i)?;
            cases.push((spec, locus));
        }
    }
    Ok(cases)
}

/// `k >= 4`, edge between a 1-part and an `i`-part, `i = 4` with `n <= 11`
/// and `i = 5` with `n <= 8`.
pub fn lemma31_residual(sign_tolerance: f64) -> Result<SweepReport> {
    let mut cases = shaped_cases(11, 4, 4)?;
    cases.extend(shaped_cases(8, 4, 5)?);
    run_cases("k>=4, i in {4,5} residual".into(), cases, sign_tolerance, 1)
}

/// `k >= 4`, edge between a 1-part and an `i`-part, `i` in {2, 3}, `n <= 7`.
pub fn lemma34_residual(sign_tolerance: f64) -> Result<SweepReport> {
    let mut cases = shaped_cases(7, 4, 2)?;
    cases.extend(shaped_cases(7, 4, 3)?);
    run_cases("k>=4, i in {2,3} residual".into(), cases, sign_tolerance, 1)
}

/// `{1, i, n - i - 1}` with `4 <= i <= n - 3`, `n <= 34`.
pub fn lemma41_residual(sign_tolerance: f64) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for n in 7..=34 {
        for i in 4..=n - 3 {
            cases.push(tripartite_family(n, i)?);
        }
    }
    run_cases("tripartite 4<=i<=n-3 residual".into(), cases, sign_tolerance, 1)
}
