use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    check_cond1, check_cond2, check_lembound, check_monotonicity, check_rey, check_thm22,
    sweep_cases, tripartite_family, EdgeSubsetSpec, SweepConfig,
};
use crate::error::Result;
use crate::graph::{build_complete_multipartite, canonical_edge, delete_edge, LabeledGraph, PartitionSpec};
use crate::partitions::partitions;
use crate::poly::{largest_real_root, quartic_energy, real_roots, resolvent_sextic, tripartite_g, tripartite_h};
use crate::spectra::{adjacency_spectrum, graph_energy};

/// Values of `a` tried by the sufficient-condition suite.
pub const CONDITION_GRID: [f64; 6] = [0.3, 0.357, 0.36, 0.4, 0.5, 0.7];

const MAX_LISTED_FAILURES: usize = 20;

/// Sufficient conditions exercised by [`soundness_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    EdgeSubset,
    Perron,
    Cond1,
    Cond2,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Condition::EdgeSubset, Condition::Perron, Condition::Cond1, Condition::Cond2];
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    /// Number of individual assertions made.
    pub checked: usize,
    pub failed: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
    pub note: String,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
            note: String::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Result<LabeledGraph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    LabeledGraph::from_edges(n, &edges)
}

/// Random graphs `G` on at most `n_max` vertices and random induced
/// subgraphs `H` on `m` vertices: `lambda_i(G) >= lambda_i(H) >= lambda_{n-m+i}(G)`.
pub fn interlacing_suite(trials: usize, seed: u64, n_max: usize) -> Result<SuiteReport> {
    let tol = 1e-9;
    let mut report = SuiteReport::new("interlacing");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let n = rng.gen_range(2..=n_max.max(2));
        let g = random_graph(&mut rng, n)?;
        let m = rng.gen_range(1..=n);
        let mut keep = sample(&mut rng, n, m).into_vec();
        keep.sort_unstable();
        let h = g.induced_subgraph(&keep);
        let sg = adjacency_spectrum(&g)?;
        let sh = adjacency_spectrum(&h)?;
        let ok = (1..=m).all(|i| {
            sg.lambda(i) >= sh.lambda(i) - tol && sh.lambda(i) >= sg.lambda(n - m + i) - tol
        });
        report.record(ok, || format!("trial {trial}: n = {n}, kept {keep:?}"));
    }
    Ok(report)
}

/// Random depressed quartics with four real roots: the resolvent sextic's
/// roots are the doubled pair sums, and with exactly two positive roots its
/// largest root is the sum of absolute values.
pub fn resolvent_suite(trials: usize, seed: u64) -> Result<SuiteReport> {
    let tol = 1e-7;
    let mut report = SuiteReport::new("resolvent sextic");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut two_positive = 0;
    for trial in 0..trials {
        let mut x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        let mean = x.iter().sum::<f64>() / 4.0;
        x.iter_mut().for_each(|r| *r -= mean);

        let e2: f64 = (0..4).flat_map(|p| (p + 1..4).map(move |q| (p, q))).map(|(p, q)| x[p] * x[q]).sum();
        let e3 = x[0] * x[1] * x[2] + x[0] * x[1] * x[3] + x[0] * x[2] * x[3] + x[1] * x[2] * x[3];
        let e4 = x[0] * x[1] * x[2] * x[3];
        let (a, b, c) = (e2, -e3, e4);

        let mut sums: Vec<f64> = (0..4)
            .flat_map(|p| (p + 1..4).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * (x[p] + x[q]))
            .collect();
        sums.sort_by(f64::total_cmp);
        let rs = real_roots(&resolvent_sextic(a, b, c))?;
        let ok = rs.real_roots.len() == 6
            && rs.real_roots.iter().zip(&sums).all(|(r, s)| (r - s).abs() <= tol);
        report.record(ok, || format!("trial {trial}: roots {x:?}, resolvent roots {:?}", rs.real_roots));

        let positive = x.iter().filter(|r| **r > 0.0).count();
        // keep clear of roots so close to zero that their sign is a rounding artefact
        if positive == 2 && x.iter().all(|r| r.abs() > 1e-6) {
            two_positive += 1;
            let expected: f64 = x.iter().map(|r| r.abs()).sum();
            let got = quartic_energy(a, b, c);
            let ok = matches!(got, Ok(e) if (e - expected).abs() <= tol);
            report.record(ok, || format!("trial {trial}: roots {x:?}, energy {got:?} vs {expected}"));
        }
    }
    report.note = format!("{two_positive} of {trials} quartics had exactly two positive roots");
    Ok(report)
}

/// For every spec with `3 <= n <= n_max` and every pair of part sizes
/// differing by at least 2, moving one vertex from the larger part to the
/// smaller raises the spectral radius by more than `1e-9`.
pub fn monotonicity_suite(n_max: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("balancing monotonicity");
    for n in 3..=n_max {
        for parts in partitions(n) {
            if parts.len() < 2 {
                continue;
            }
            let spec = PartitionSpec::new(parts)?;
            let mut seen = Vec::new();
            for pi in 0..spec.k() {
                for pj in 0..spec.k() {
                    let (ti, tj) = (spec.part_size(pi), spec.part_size(pj));
                    if ti < tj + 2 || seen.contains(&(ti, tj)) {
                        continue;
                    }
                    seen.push((ti, tj));
                    let c = check_monotonicity(&spec, pi, pj)?;
                    report.record(c.holds && c.margin() > 1e-9, || {
                        format!("{spec} -> {}: margin {}", c.balanced, c.margin())
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Both spectral-radius lower bounds over `n <= n_max`: the tripartite one
/// for `2 <= i <= n - 3` and the all-1-parts one for `2 <= i <= n - 5`.
pub fn lembound_suite(n_max: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("radius lower bounds");
    for n in 5..=n_max {
        for i in 2..=n - 3 {
            let c = check_lembound(n, i, false)?;
            report.record(c.holds && c.certified, || {
                format!("{}: radius {} vs bound {}", c.spec, c.radius, c.bound)
            });
            if i + 5 <= n {
                let c = check_lembound(n, i, true)?;
                report.record(c.holds && c.certified, || {
                    format!("{}: radius {} vs bound {}", c.spec, c.radius, c.bound)
                });
            }
        }
    }
    Ok(report)
}

/// `E(K_{1,i,t}) = tau(g)` and `E(K_{1,i,t} - e) = tau(h)` within `1e-8`
/// for all `i + t <= max_sum`.
pub fn closed_form_suite(max_sum: usize) -> Result<SuiteReport> {
    let tol = 1e-8;
    let mut report = SuiteReport::new("closed-form tripartite energies");
    for i in 1..max_sum {
        for t in 1..=max_sum - i {
            let (spec, locus) = tripartite_family(1 + i + t, i)?;
            let g = build_complete_multipartite(&spec);
            let (u, v) = canonical_edge(&spec, locus)?;
            let ge = delete_edge(&g, u, v)?;
            let (ii, tt) = (i as i64, t as i64);
            let eg = graph_energy(&g)?;
            let tau_g = largest_real_root(&tripartite_g(ii, tt).to_f64())?;
            report.record((eg - tau_g).abs() <= tol, || format!("i = {i}, t = {t}: E(G) = {eg}, tau(g) = {tau_g}"));
            let ege = graph_energy(&ge)?;
            let tau_h = largest_real_root(&tripartite_h(ii, tt).to_f64())?;
            report.record((ege - tau_h).abs() <= tol, || {
                format!("i = {i}, t = {t}: E(G-e) = {ege}, tau(h) = {tau_h}")
            });
        }
    }
    Ok(report)
}

/// Over every case of the `n <= n_max` sweep, each selected sufficient
/// condition that reports true must come with an energy increase larger than
/// `sign_tolerance`. The edge-subset condition must also leave
/// `lambda_2(G - S)` at or above `(sqrt(5) - 1) / 2`.
pub fn soundness_suite(n_max: usize, sign_tolerance: f64, conditions: &[Condition]) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("sufficient-condition soundness");
    let p4_lambda2 = (5f64.sqrt() - 1.0) / 2.0;
    let mut fired = [0usize; 4];
    let on = |c: Condition| conditions.contains(&c);
    let mut config = SweepConfig::new(n_max);
    config.sign_tolerance = sign_tolerance;
    for (spec, locus) in sweep_cases(&config)? {
        if on(Condition::EdgeSubset) {
            let c = check_thm22(&spec, &EdgeSubsetSpec::single(&spec, locus)?)?;
            if c.holds {
                fired[0] += 1;
                report.record(c.delta > sign_tolerance && c.lambda2_after >= p4_lambda2 - 1e-12, || {
                    format!("edge subset on {spec} at {locus}: delta {}, lambda2 {}", c.delta, c.lambda2_after)
                });
            }
        }
        let shaped = matches!(locus.sizes(&spec), (1, i) | (i, 1) if i >= 2) && spec.k() >= 3;
        for a in CONDITION_GRID {
            if on(Condition::Perron) {
                let c = check_rey(&spec, locus, a)?;
                if c.holds {
                    fired[1] += 1;
                    report.record(c.delta > sign_tolerance, || {
                        format!("Perron condition on {spec} at {locus}, a = {a}: delta {}", c.delta)
                    });
                }
            }
            if !shaped {
                continue;
            }
            for (slot, cond) in [(2, Condition::Cond1), (3, Condition::Cond2)] {
                if !on(cond) {
                    continue;
                }
                let c = if cond == Condition::Cond1 {
                    check_cond1(&spec, locus, a)?
                } else {
                    check_cond2(&spec, locus, a)?
                };
                if c.holds {
                    fired[slot] += 1;
                    report.record(c.delta > sign_tolerance, || {
                        format!("{cond:?} on {spec} at {locus}, a = {a}: delta {}", c.delta)
                    });
                }
            }
        }
    }
    report.note = format!(
        "true results: edge subset {}, Perron {}, cond1 {}, cond2 {}",
        fired[0], fired[1], fired[2], fired[3]
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for r in [
            interlacing_suite(40, 7, 8).unwrap(),
            resolvent_suite(60, 11).unwrap(),
            monotonicity_suite(8).unwrap(),
            lembound_suite(12).unwrap(),
            closed_form_suite(10).unwrap(),
            soundness_suite(7, 1e-8, &Condition::ALL).unwrap(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn seeded_suites_are_reproducible() {
        assert_eq!(resolvent_suite(20, 3).unwrap(), resolvent_suite(20, 3).unwrap());
        assert_eq!(interlacing_suite(20, 3, 6).unwrap(), interlacing_suite(20, 3, 6).unwrap());
    }

    #[test]
    fn empty_suite_does_not_pass() {
        assert!(!interlacing_suite(0, 1, 5).unwrap().passed());
    }
}
