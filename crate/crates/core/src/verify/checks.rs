use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    build_complete_multipartite, canonical_edge, delete_edge, EdgeLocus, LabeledGraph, PartitionSpec,
};
use crate::poly::{bound_polys, f_a};
use crate::spectra::{graph_energy, perron_components, second_eigenvalue, spectral_radius};

/// Slack on `t_i >= 2 lambda(H) |U_i|`, absorbing the rounding of `lambda(H)`.
const CONDITION_SLACK: f64 = 1e-9;

/// A non-empty set `S` of inter-part edges of `K_{t_1,...,t_k}`, the
/// subgraph `H` it spans and `|U_i| = |V(H) ∩ V_i|` per part.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSubsetSpec {
    pub edges: Vec<(usize, usize)>,
    /// Endpoints of `S`, ascending; vertex `j` of `induced` is `vertices[j]`.
    pub vertices: Vec<usize>,
    pub induced: LabeledGraph,
    pub u_counts: Vec<usize>,
}

impl EdgeSubsetSpec {
    pub fn new(spec: &PartitionSpec, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::InvalidEdge(0, 0, "edge subset must be non-empty".into()));
        }
        let g = build_complete_multipartite(spec);
        let part_of = g.part_of().expect("multipartite graphs carry parts");
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= spec.n() || v >= spec.n() {
                return Err(Error::InvalidEdge(u, v, "endpoint out of range".into()));
            }
            if u == v || part_of[u] == part_of[v] {
                return Err(Error::InvalidEdge(u, v, "edge must join two distinct parts".into()));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();

        let mut vertices: Vec<usize> = norm.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let local = |x: usize| vertices.binary_search(&x).expect("endpoint listed");
        let local_edges: Vec<_> = norm.iter().map(|&(u, v)| (local(u), local(v))).collect();
        let induced = LabeledGraph::from_edges(vertices.len(), &local_edges)?;

        let mut u_counts = vec![0; spec.k()];
        for &v in &vertices {
            u_counts[part_of[v]] += 1;
        }
        Ok(Self {
            edges: norm,
            vertices,
            induced,
            u_counts,
        })
    }

    /// The subset holding just the canonical edge of `locus`.
    pub fn single(spec: &PartitionSpec, locus: EdgeLocus) -> Result<Self> {
        let e = canonical_edge(spec, locus)?;
        Self::new(spec, &[e])
    }
}

fn deleted(spec: &PartitionSpec, edges: &[(usize, usize)]) -> Result<(LabeledGraph, LabeledGraph)> {
    let g = build_complete_multipartite(spec);
    let mut ge = g.clone();
    for &(u, v) in edges {
        ge = delete_edge(&ge, u, v)?;
    }
    Ok((g, ge))
}

fn energy_delta(g: &LabeledGraph, ge: &LabeledGraph) -> Result<f64> {
    Ok(graph_energy(ge)? - graph_energy(g)?)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thm22Check {
    /// `t_i >= 2 lambda(H) |U_i|` for every part.
    pub holds: bool,
    pub lambda_h: f64,
    pub lambda2_after: f64,
    /// `E(G - S) - E(G)`.
    pub delta: f64,
}

/// Whether every part satisfies `t_i >= 2 lambda(H) |U_i|`, which forces
/// `E(G - S) > E(G)`.
pub fn check_thm22(spec: &PartitionSpec, subset: &EdgeSubsetSpec) -> Result<Thm22Check> {
    if subset.u_counts.len() != spec.k() {
        return Err(Error::Precondition("edge subset belongs to a different spec".into()));
    }
    let lambda_h = spectral_radius(&subset.induced)?;
    let holds = spec
        .parts()
        .iter()
        .zip(&subset.u_counts)
        .all(|(&t, &u)| t as f64 + CONDITION_SLACK >= 2.0 * lambda_h * u as f64);
    let (g, gs) = deleted(spec, &subset.edges)?;
    Ok(Thm22Check {
        holds,
        lambda_h,
        lambda2_after: second_eigenvalue(&gs)?,
        delta: energy_delta(&g, &gs)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReyCheck {
    pub holds: bool,
    pub lambda2_after: f64,
    /// `x_a^2 + x_b^2` for the Perron entries at the two endpoints.
    pub x_sq_sum: f64,
    pub delta: f64,
}

/// `lambda_2(G - e) > a` and `x_a^2 + x_b^2 <= a`.
pub fn check_rey(spec: &PartitionSpec, locus: EdgeLocus, a: f64) -> Result<ReyCheck> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::OutOfRange(format!("a must lie in (0, 1), got {a}")));
    }
    locus.validate(spec)?;
    let perron = perron_components(spec)?;
    let xa = perron.components[locus.part_a];
    let xb = perron.components[locus.part_b];
    let x_sq_sum = xa * xa + xb * xb;
    let (g, ge) = deleted(spec, &[canonical_edge(spec, locus)?])?;
    let lambda2_after = second_eigenvalue(&ge)?;
    Ok(ReyCheck {
        holds: lambda2_after > a && x_sq_sum <= a,
        lambda2_after,
        x_sq_sum,
        delta: energy_delta(&g, &ge)?,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CondCheck {
    /// The condition-specific clause alone.
    pub gate: bool,
    /// `f_a(n, i)` for the first condition, `2(n-1)/(lambda^2+n-1)` for the second.
    pub value: f64,
    pub lambda2_after: f64,
    /// `gate` together with `lambda_2(G - e) > a`.
    pub holds: bool,
    pub delta: f64,
}

/// Size `i` of the non-1 endpoint part, after checking the shape
/// `K_{1,i,...}` with `k >= 3`, `i >= 2` and the locus between the two.
fn one_i_shape(spec: &PartitionSpec, locus: EdgeLocus) -> Result<usize> {
    locus.validate(spec)?;
    if spec.k() < 3 {
        return Err(Error::Precondition(format!("{spec} has fewer than 3 parts")));
    }
    match locus.sizes(spec) {
        (1, i) | (i, 1) if i >= 2 => Ok(i),
        (ta, tb) => Err(Error::Precondition(format!(
            "locus {locus} of {spec} joins parts of sizes {ta} and {tb}, need a 1-part and an i-part with i >= 2"
        ))),
    }
}

fn cond_common(spec: &PartitionSpec, locus: EdgeLocus, a: f64) -> Result<(usize, f64, f64)> {
    if !(a > 0.0) {
        return Err(Error::OutOfRange(format!("a must be positive, got {a}")));
    }
    let i = one_i_shape(spec, locus)?;
    let (g, ge) = deleted(spec, &[canonical_edge(spec, locus)?])?;
    Ok((i, second_eigenvalue(&ge)?, energy_delta(&g, &ge)?))
}

/// `(2i+1)/(i(i+2)) < a < 1` and `f_a(n, i) > 0`, with `lambda_2(G - e) > a`.
pub fn check_cond1(spec: &PartitionSpec, locus: EdgeLocus, a: f64) -> Result<CondCheck> {
    let (i, lambda2_after, delta) = cond_common(spec, locus, a)?;
    let fi = i as f64;
    let value = f_a(spec.n() as i64, i as i64, a);
    let gate = (2.0 * fi + 1.0) / (fi * (fi + 2.0)) < a && a < 1.0 && value > 0.0;
    Ok(CondCheck {
        gate,
        value,
        lambda2_after,
        holds: gate && lambda2_after > a,
        delta,
    })
}

/// `2(n-1)/(lambda^2+n-1) < a` with `lambda = lambda(G)`, and
/// `lambda_2(G - e) > a`.
pub fn check_cond2(spec: &PartitionSpec, locus: EdgeLocus, a: f64) -> Result<CondCheck> {
    let (_, lambda2_after, delta) = cond_common(spec, locus, a)?;
    let lambda = spectral_radius(&build_complete_multipartite(spec))?;
    let n1 = spec.n() as f64 - 1.0;
    let value = 2.0 * n1 / (lambda * lambda + n1);
    let gate = value < a;
    Ok(CondCheck {
        gate,
        value,
        lambda2_after,
        holds: gate && lambda2_after > a,
        delta,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemBoundCheck {
    pub spec: PartitionSpec,
    pub radius: f64,
    pub bound: f64,
    /// `radius > bound`.
    pub holds: bool,
    /// The quotient polynomial is negative at `bound`, so its largest root
    /// lies strictly above it.
    pub certified: bool,
}

/// Spectral-radius lower bounds for `K_{1,i,n-i-1}` (`sqrt((n-i)(i+1))`) or,
/// with `one_parts_only`, for `K_{i,1,...,1}` (`n - i + 0.67`).
pub fn check_lembound(n: usize, i: usize, one_parts_only: bool) -> Result<LemBoundCheck> {
    let (spec, bound, certified) = if one_parts_only {
        if !(i >= 2 && i + 5 <= n) {
            return Err(Error::OutOfRange(format!("need 2 <= i <= n - 5, got n = {n}, i = {i}")));
        }
        let mut parts = vec![1; n - i];
        parts.push(i);
        let bound = (n - i) as f64 + 0.67;
        let q = bound_polys(n as i64, i as i64).quadratic.to_f64();
        (PartitionSpec::new(parts)?, bound, q.eval(bound) < 0.0)
    } else {
        if !(i >= 1 && i + 2 <= n) {
            return Err(Error::OutOfRange(format!("need 1 <= i <= n - 2, got n = {n}, i = {i}")));
        }
        let bound = (((n - i) * (i + 1)) as f64).sqrt();
        let c = bound_polys(n as i64, i as i64).cubic.to_f64();
        (PartitionSpec::new(vec![1, i, n - i - 1])?, bound, c.eval(bound) < 0.0)
    };
    let radius = spectral_radius(&build_complete_multipartite(&spec))?;
    Ok(LemBoundCheck {
        spec,
        radius,
        bound,
        holds: radius > bound,
        certified,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityCheck {
    pub balanced: PartitionSpec,
    pub radius_before: f64,
    pub radius_after: f64,
    pub holds: bool,
}

impl MonotonicityCheck {
    pub fn margin(&self) -> f64 {
        self.radius_after - self.radius_before
    }
}

/// Move one vertex from part `part_i` to part `part_j` (`t_i - t_j >= 2`)
/// and compare spectral radii.
pub fn check_monotonicity(spec: &PartitionSpec, part_i: usize, part_j: usize) -> Result<MonotonicityCheck> {
    let k = spec.k();
    if part_i >= k || part_j >= k || part_i == part_j {
        return Err(Error::InvalidLocus(format!("bad part pair ({part_i}, {part_j}) for {spec}")));
    }
    let (ti, tj) = (spec.part_size(part_i), spec.part_size(part_j));
    if ti < tj + 2 {
        return Err(Error::OutOfRange(format!(
            "part sizes {ti} and {tj} differ by less than 2"
        )));
    }
    let mut parts = spec.parts().to_vec();
    parts[part_i] -= 1;
    parts[part_j] += 1;
    let balanced = PartitionSpec::new(parts)?;
    let radius_before = spectral_radius(&build_complete_multipartite(spec))?;
    let radius_after = spectral_radius(&build_complete_multipartite(&balanced))?;
    Ok(MonotonicityCheck {
        balanced,
        radius_before,
        radius_after,
        holds: radius_after > radius_before,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(parts: &[usize]) -> PartitionSpec {
        PartitionSpec::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn thm22_single_edges() {
        let s = spec(&[3, 2, 2]);
        let l = EdgeLocus::between_sizes(&s, 2, 2).unwrap();
        let c = check_thm22(&s, &EdgeSubsetSpec::single(&s, l).unwrap()).unwrap();
        assert!((c.lambda_h - 1.0).abs() < 1e-12);
        assert!(c.holds);
        assert!(c.delta > 0.0);
        assert!(c.lambda2_after >= (5f64.sqrt() - 1.0) / 2.0 - 1e-12);

        let s = spec(&[3, 1, 1]);
        let l = EdgeLocus::between_sizes(&s, 1, 1).unwrap();
        assert!(!check_thm22(&s, &EdgeSubsetSpec::single(&s, l).unwrap()).unwrap().holds);
    }

    #[test]
    fn thm22_vacuous_parts_and_subsets() {
        // parts {4,4,1}: S = two edges 0-4, 1-5 inside the two 4-parts; the
        // 1-part has U empty so its condition is vacuous
        let s = spec(&[4, 4, 1]);
        let sub = EdgeSubsetSpec::new(&s, &[(0, 4), (5, 1)]).unwrap();
        assert_eq!(sub.u_counts, vec![2, 2, 0]);
        assert_eq!(sub.edges, vec![(0, 4), (1, 5)]);
        let c = check_thm22(&s, &sub).unwrap();
        assert!(c.holds);
        assert!(c.delta > 0.0);

        assert!(EdgeSubsetSpec::new(&s, &[]).is_err());
        assert!(EdgeSubsetSpec::new(&s, &[(0, 1)]).is_err());
        assert!(EdgeSubsetSpec::new(&s, &[(0, 9)]).is_err());
    }

    #[test]
    fn rey_examples() {
        let s = spec(&[1, 4, 1, 1]);
        let l = EdgeLocus::between_sizes(&s, 1, 4).unwrap();
        let c = check_rey(&s, l, 0.4).unwrap();
        assert!((c.lambda2_after - (2f64.sqrt() - 1.0)).abs() < 1e-9);
        assert!(c.holds);
        assert!(c.delta > 0.0);

        let s = spec(&[1, 2, 2]);
        let l = EdgeLocus::between_sizes(&s, 1, 2).unwrap();
        assert!(!check_rey(&s, l, 0.357).unwrap().holds);
        assert!(check_rey(&s, l, 1.5).is_err());
        assert!(check_rey(&s, l, 0.0).is_err());
    }

    #[test]
    fn cond1_examples() {
        let s = spec(&[1, 6, 1, 1]);
        let l = EdgeLocus::between_sizes(&s, 1, 6).unwrap();
        let c = check_cond1(&s, l, 0.4).unwrap();
        assert!((c.value - 0.6).abs() < 1e-12);
        assert!(c.gate);
        assert!(c.holds);
        assert!(c.delta > 0.0);
        // 13/48 is the gate for i = 6
        assert!(!check_cond1(&s, l, 0.25).unwrap().gate);

        // tripartite: the gate holds but lambda_2(G - e) stays below 0.4
        let s = spec(&[1, 6, 2]);
        let c = check_cond1(&s, EdgeLocus::between_sizes(&s, 1, 6).unwrap(), 0.4).unwrap();
        assert!(c.gate && !c.holds);
    }

    #[test]
    fn cond2_examples() {
        for n in 8..=12 {
            let mut parts = vec![1; n - 2];
            parts.push(2);
            let s = PartitionSpec::new(parts).unwrap();
            let l = EdgeLocus::between_sizes(&s, 1, 2).unwrap();
            let c = check_cond2(&s, l, 0.357).unwrap();
            let n1 = (n - 1) as f64;
            let loose = 2.0 * n1 / ((n as f64 - 2.33).powi(2) + n1);
            assert!(c.value < loose, "n = {n}");
            // the loose estimate only drops below 0.357 from n = 9 on
            assert_eq!(loose < 0.357, n >= 9, "n = {n}");
            assert!(c.holds, "n = {n}");
            assert!(c.delta > 0.0);
        }
    }

    #[test]
    fn cond_shape_guards() {
        let s = spec(&[2, 2, 2]);
        assert!(check_cond1(&s, EdgeLocus::new(0, 1).unwrap(), 0.4).is_err());
        let s = spec(&[3, 1]);
        assert!(check_cond2(&s, EdgeLocus::new(0, 1).unwrap(), 0.4).is_err());
        let s = spec(&[3, 1, 1]);
        assert!(check_cond2(&s, EdgeLocus::new(1, 2).unwrap(), 0.4).is_err());
        assert!(check_cond2(&s, EdgeLocus::new(0, 1).unwrap(), -0.1).is_err());
    }

    #[test]
    fn lembound_examples() {
        let c = check_lembound(9, 2, true).unwrap();
        assert!((c.radius - (3.0 + 23f64.sqrt())).abs() < 1e-10);
        assert!((c.bound - 7.67).abs() < 1e-12);
        assert!(c.holds && c.certified);

        let c = check_lembound(7, 2, false).unwrap();
        assert_eq!(c.spec.parts(), &[4, 2, 1]);
        assert!((c.bound - 15f64.sqrt()).abs() < 1e-12);
        assert!(c.holds && c.certified);

        assert!(check_lembound(6, 2, true).is_err());
        assert!(check_lembound(6, 5, false).is_err());
    }

    #[test]
    fn monotonicity_examples() {
        let s = spec(&[4, 1]);
        let c = check_monotonicity(&s, 0, 1).unwrap();
        assert_eq!(c.balanced.parts(), &[3, 2]);
        assert!((c.radius_before - 2.0).abs() < 1e-12);
        assert!((c.radius_after - 6f64.sqrt()).abs() < 1e-12);
        assert!(c.holds);
        assert!(check_monotonicity(&spec(&[3, 2]), 0, 1).is_err());
        assert!(check_monotonicity(&s, 0, 0).is_err());

        // lambda(K_{1,2,2,n-5}) is the least radius along the balancing chain
        for n in 8..=12 {
            let base = spectral_radius(&build_complete_multipartite(&spec(&[1, 2, 2, n - 5]))).unwrap();
            for i in 2..=n - 5 {
                let s = spec(&[1, i, 2, n - i - 3]);
                let r = spectral_radius(&build_complete_multipartite(&s)).unwrap();
                assert!(r >= base - 1e-12, "n = {n}, i = {i}");
            }
        }
    }
}
