//! Sign oracle for single-edge deletion in complete multipartite graphs,
//! the numerical observation it is tested against, sufficient-condition
//! checkers, and exhaustive sweeps.

mod cases;
mod checks;
mod suites;
mod sweep;

pub use cases::{verify_case_analyses, CaseReport, CaseRow};
pub use checks::{
    check_cond1, check_cond2, check_lembound, check_monotonicity, check_rey, check_thm22,
    CondCheck, EdgeSubsetSpec, LemBoundCheck, MonotonicityCheck, ReyCheck, Thm22Check,
};
pub use suites::{
    closed_form_suite, interlacing_suite, lembound_suite, monotonicity_suite, resolvent_suite,
    soundness_suite, Condition, SuiteReport, CONDITION_GRID,
};
pub use sweep::{
    lemma31_residual, lemma34_residual, lemma41_residual, sweep_cases, sweep_theorem,
    tripartite_family, Summary, SweepConfig, SweepReport, MAX_FULL_NMAX, MAX_TRIPARTITE_NMAX,
};

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{build_complete_multipartite, canonical_edge, delete_edge, EdgeLocus, PartitionSpec};
use crate::spectra::graph_energy;

pub const DEFAULT_SIGN_TOL: f64 = 1e-8;

/// Direction of `E(G - e) - E(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increase,
    Decrease,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Observed {
    Increase,
    Decrease,
    Inconclusive,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increase => "increase",
            Direction::Decrease => "decrease",
        })
    }
}

impl fmt::Display for Observed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Observed::Increase => "increase",
            Observed::Decrease => "decrease",
            Observed::Inconclusive => "inconclusive",
        })
    }
}

/// Predicted against observed change of energy for one `(spec, locus)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyComparison {
    pub spec: PartitionSpec,
    pub locus: EdgeLocus,
    pub energy_g: f64,
    pub energy_g_minus_e: f64,
    pub delta: f64,
    pub predicted: Direction,
    pub observed: Observed,
    pub margin: f64,
    /// Bipartite rows rest on the numerical check alone.
    pub numeric_only: bool,
}

impl EnergyComparison {
    pub fn agrees(&self) -> bool {
        matches!(
            (self.predicted, self.observed),
            (Direction::Increase, Observed::Increase) | (Direction::Decrease, Observed::Decrease)
        )
    }
}

/// Classification of the energy change when an edge between the parts of
/// `locus` is deleted.
///
/// * `k >= 4`: decreases iff both parts are 1-parts;
/// * `k = 3`: decreases iff `t_a + t_b <= 3`;
/// * `k = 2`: decreases iff `min(t_a, t_b) = 1`;
///
/// and increases otherwise.
pub fn predict_sign(spec: &PartitionSpec, locus: EdgeLocus) -> Result<Direction> {
    locus.validate(spec)?;
    let (ta, tb) = locus.sizes(spec);
    let decrease = match spec.k() {
        2 => ta.min(tb) == 1,
        3 => ta + tb <= 3,
        _ => ta == 1 && tb == 1,
    };
    Ok(if decrease {
        Direction::Decrease
    } else {
        Direction::Increase
    })
}

/// Energies of `G` and `G - e` by brute-force eigen-solves.
pub fn observe_sign(spec: &PartitionSpec, locus: EdgeLocus, sign_tolerance: f64) -> Result<EnergyComparison> {
    if !(sign_tolerance > 0.0) {
        return Err(crate::Error::OutOfRange(format!(
            "sign tolerance must be positive, got {sign_tolerance}"
        )));
    }
    let predicted = predict_sign(spec, locus)?;
    let g = build_complete_multipartite(spec);
    let (u, v) = canonical_edge(spec, locus)?;
    let ge = delete_edge(&g, u, v)?;
    let energy_g = graph_energy(&g)?;
    let energy_g_minus_e = graph_energy(&ge)?;
    let delta = energy_g_minus_e - energy_g;
    let observed = if delta.abs() <= sign_tolerance {
        Observed::Inconclusive
    } else if delta > 0.0 {
        Observed::Increase
    } else {
        Observed::Decrease
    };
    Ok(EnergyComparison {
        spec: spec.clone(),
        locus,
        energy_g,
        energy_g_minus_e,
        delta,
        predicted,
        observed,
        margin: delta.abs(),
        numeric_only: spec.k() == 2,
    })
}

/// Vertex permutation taking `K_{1,1,t_3,...} - e` (edge between two
/// 1-parts) onto the canonical layout of `K_{2,t_3,...}`, if `locus` joins
/// two 1-parts.
pub fn merge_one_parts(spec: &PartitionSpec, locus: EdgeLocus) -> Result<(PartitionSpec, Vec<usize>)> {
    locus.validate(spec)?;
    if locus.sizes(spec) != (1, 1) {
        return Err(crate::Error::InvalidLocus(format!(
            "locus {locus} of {spec} does not join two 1-parts"
        )));
    }
    let mut merged_parts: Vec<usize> = spec
        .parts()
        .iter()
        .enumerate()
        .filter(|(p, _)| *p != locus.part_a && *p != locus.part_b)
        .map(|(_, &t)| t)
        .collect();
    merged_parts.push(2);
    let merged = PartitionSpec::new(merged_parts)?;

    // Old parts in their new order: the merged 2-part goes where a 2 sorts.
    let mut old_groups: Vec<Vec<usize>> = (0..spec.k())
        .filter(|&p| p != locus.part_a && p != locus.part_b)
        .map(|p| spec.vertex_range(p).collect())
        .collect();
    old_groups.push(
        spec.vertex_range(locus.part_a)
            .chain(spec.vertex_range(locus.part_b))
            .collect(),
    );
    old_groups.sort_by_key(|g| std::cmp::Reverse(g.len()));

    let mut perm = vec![0; spec.n()];
    let mut next = 0;
    for group in old_groups {
        for v in group {
            perm[v] = next;
            next += 1;
        }
    }
    Ok((merged, perm))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(parts: &[usize]) -> PartitionSpec {
        PartitionSpec::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn predictions() {
        let s = spec(&[3, 2, 1, 1]);
        assert_eq!(predict_sign(&s, EdgeLocus::between_sizes(&s, 1, 1).unwrap()).unwrap(), Direction::Decrease);
        assert_eq!(predict_sign(&s, EdgeLocus::between_sizes(&s, 1, 2).unwrap()).unwrap(), Direction::Increase);
        let s = spec(&[2, 2, 1]);
        assert_eq!(predict_sign(&s, EdgeLocus::between_sizes(&s, 1, 2).unwrap()).unwrap(), Direction::Decrease);
        assert_eq!(predict_sign(&s, EdgeLocus::between_sizes(&s, 2, 2).unwrap()).unwrap(), Direction::Increase);
        let l = EdgeLocus::new(0, 1).unwrap();
        assert_eq!(predict_sign(&spec(&[5, 1]), l).unwrap(), Direction::Decrease);
        assert_eq!(predict_sign(&spec(&[3, 3]), l).unwrap(), Direction::Increase);
        assert!(predict_sign(&spec(&[3, 3]), EdgeLocus::new(0, 2).unwrap()).is_err());
    }

    #[test]
    fn observations() {
        let s = spec(&[2, 1, 1]);
        let c = observe_sign(&s, EdgeLocus::between_sizes(&s, 1, 1).unwrap(), DEFAULT_SIGN_TOL).unwrap();
        assert!((c.energy_g_minus_e - 4.0).abs() < 1e-12);
        assert!((c.energy_g - (1.0 + 17f64.sqrt())).abs() < 1e-12);
        assert_eq!(c.observed, Observed::Decrease);
        assert!(c.agrees());

        let s = spec(&[1, 3, 1]);
        let c = observe_sign(&s, EdgeLocus::between_sizes(&s, 1, 3).unwrap(), DEFAULT_SIGN_TOL).unwrap();
        assert_eq!(c.observed, Observed::Increase);
        assert!(c.agrees());

        let s = spec(&[1, 2, 2]);
        let c = observe_sign(&s, EdgeLocus::between_sizes(&s, 1, 2).unwrap(), DEFAULT_SIGN_TOL).unwrap();
        assert_eq!(c.observed, Observed::Decrease);
        assert!((c.delta - (c.energy_g_minus_e - c.energy_g)).abs() == 0.0);

        assert!(observe_sign(&s, EdgeLocus::new(0, 1).unwrap(), 0.0).is_err());
    }

    #[test]
    fn inconclusive_when_tolerance_swallows_delta() {
        let s = spec(&[2, 1, 1]);
        let c = observe_sign(&s, EdgeLocus::between_sizes(&s, 1, 1).unwrap(), 10.0).unwrap();
        assert_eq!(c.observed, Observed::Inconclusive);
        assert!(!c.agrees());
    }

    #[test]
    fn one_parts_merge_is_an_isomorphism() {
        for parts in [vec![1, 1, 3], vec![3, 2, 1, 1], vec![1, 1, 1, 2, 4], vec![1, 1]] {
            let s = spec(&parts);
            let locus = EdgeLocus::between_sizes(&s, 1, 1).unwrap();
            let (u, v) = canonical_edge(&s, locus).unwrap();
            let ge = delete_edge(&build_complete_multipartite(&s), u, v).unwrap();
            if s.k() == 2 {
                assert!(merge_one_parts(&s, locus).is_err());
                continue;
            }
            let (merged, perm) = merge_one_parts(&s, locus).unwrap();
            let target = build_complete_multipartite(&merged);
            assert_eq!(ge.relabel(&perm).edges(), target.edges(), "{s}");
        }
    }
}
