//! Complete multipartite graphs, single-edge deletion and equitable
//! partitions with their quotient matrices.
//!
//! Parts are kept in canonical non-increasing order and vertices are laid
//! out contiguously part by part, so part `p` owns the vertex range
//! [`PartitionSpec::vertex_range`].

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Multiset of part sizes `t_1 >= t_2 >= ... >= t_k` defining `K_{t_1,...,t_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionSpec {
    parts: Vec<usize>,
}

impl PartitionSpec {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidPartition(format!(
                "need at least two parts, got {}",
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("part sizes must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn part_size(&self, part: usize) -> usize {
        self.parts[part]
    }

    /// Vertices owned by `part` in the contiguous layout.
    pub fn vertex_range(&self, part: usize) -> Range<usize> {
        let start: usize = self.parts[..part].iter().sum();
        start..start + self.parts[part]
    }

    /// `(n^2 - sum t_i^2) / 2`.
    pub fn edge_count(&self) -> usize {
        let n = self.n();
        let sq: usize = self.parts.iter().map(|t| t * t).sum();
        (n * n - sq) / 2
    }

    /// Lowest index of a part of the given size.
    pub fn find_part(&self, size: usize) -> Option<usize> {
        self.parts.iter().position(|&t| t == size)
    }

    pub fn count_parts(&self, size: usize) -> usize {
        self.parts.iter().filter(|&&t| t == size).count()
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for PartitionSpec {
    type Err = Error;

    /// Parses a comma-separated list of positive integers such as `1,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part size {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for PartitionSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// The pair of parts an edge runs between, stored with `part_a < part_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeLocus {
    pub part_a: usize,
    pub part_b: usize,
}

impl EdgeLocus {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidLocus(format!(
                "parts {a} and {b} coincide; there are no intra-part edges"
            )));
        }
        Ok(Self {
            part_a: a.min(b),
            part_b: a.max(b),
        })
    }

    /// Locus joining a part of size `s1` to a different part of size `s2`,
    /// using the lowest available indices.
    pub fn between_sizes(spec: &PartitionSpec, s1: usize, s2: usize) -> Result<Self> {
        let a = spec
            .find_part(s1)
            .ok_or_else(|| Error::InvalidLocus(format!("no part of size {s1} in {spec}")))?;
        let b = if s1 == s2 {
            spec.parts()
                .iter()
                .enumerate()
                .position(|(idx, &t)| idx != a && t == s2)
        } else {
            spec.find_part(s2)
        }
        .ok_or_else(|| Error::InvalidLocus(format!("no second part of size {s2} in {spec}")))?;
        Self::new(a, b)
    }

    pub fn validate(&self, spec: &PartitionSpec) -> Result<()> {
        if self.part_b >= spec.k() {
            return Err(Error::InvalidLocus(format!(
                "part index {} out of range for {} parts",
                self.part_b,
                spec.k()
            )));
        }
        Ok(())
    }

    /// Sizes `(t_a, t_b)` of the two endpoint parts.
    pub fn sizes(&self, spec: &PartitionSpec) -> (usize, usize) {
        (spec.part_size(self.part_a), spec.part_size(self.part_b))
    }

    /// The lowest-index locus with the same pair of part sizes. Edges of
    /// loci with equal size pairs are related by a graph automorphism.
    pub fn representative(&self, spec: &PartitionSpec) -> Result<Self> {
        self.validate(spec)?;
        let (sa, sb) = self.sizes(spec);
        Self::between_sizes(spec, sa, sb)
    }

    /// One representative locus per distinct pair of part sizes, sorted.
    pub fn all_loci(spec: &PartitionSpec) -> Vec<Self> {
        let mut out = Vec::new();
        for a in 0..spec.k() {
            for b in a + 1..spec.k() {
                let locus = Self { part_a: a, part_b: b };
                if locus.representative(spec).ok() == Some(locus) {
                    out.push(locus);
                }
            }
        }
        out
    }
}

impl fmt::Display for EdgeLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.part_a, self.part_b)
    }
}

impl FromStr for EdgeLocus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let idx = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidLocus(format!("bad part index {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match idx.as_slice() {
            [a, b] => Self::new(*a, *b),
            _ => Err(Error::InvalidLocus(format!(
                "expected two part indices, got {s:?}"
            ))),
        }
    }
}

/// Simple undirected graph with a dense 0/1 adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    adjacency: Vec<u8>,
    part_of: Option<Vec<usize>>,
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adjacency: vec![0; n * n],
            part_of: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v, "not a valid pair of distinct vertices".into()));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn part_of(&self) -> Option<&[usize]> {
        self.part_of.as_deref()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.n + v] != 0
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let x = u8::from(on);
        self.adjacency[u * self.n + v] = x;
        self.adjacency[v * self.n + u] = x;
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|&x| x as usize).sum()
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.adjacency[u * self.n..(u + 1) * self.n]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|&x| x as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Row-major `n x n` adjacency as reals.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        self.adjacency.iter().map(|&x| f64::from(x)).collect()
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> LabeledGraph {
        let m = vertices.len();
        let mut h = Self::empty(m);
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(u, v) {
                    h.set(a, b, true);
                }
            }
        }
        h
    }

    /// Graph with vertices relabelled so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> LabeledGraph {
        let mut h = Self::empty(self.n);
        for (u, v) in self.edges() {
            h.set(perm[u], perm[v], true);
        }
        h
    }

    /// Disjoint union, `other` placed after `self`.
    pub fn disjoint_union(&self, other: &LabeledGraph) -> LabeledGraph {
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(self.n + u, self.n + v, true);
        }
        g
    }

    fn count_into(&self, u: usize, cell: &[usize]) -> usize {
        cell.iter().filter(|&&v| self.adjacent(u, v)).count()
    }
}

/// Ordered list of disjoint vertex sets covering the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquitableCells {
    pub cells: Vec<Vec<usize>>,
}

impl EquitableCells {
    pub fn new(cells: Vec<Vec<usize>>) -> Self {
        Self { cells }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    fn check_cover(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for cell in &self.cells {
            if cell.is_empty() {
                return Err(Error::InvalidCells("empty cell".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidCells(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidCells(format!("vertex {v} in two cells")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidCells(format!("vertex {v} not covered")));
        }
        Ok(())
    }
}

/// Neighbour-count matrix `b[i][j]` of an equitable partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub b: Vec<Vec<i64>>,
    pub cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.b.len()
    }

    pub fn from_rows(b: Vec<Vec<i64>>, cell_sizes: Vec<usize>) -> Self {
        Self { b, cell_sizes }
    }
}

/// `K_{t_1,...,t_k}` with parts laid out contiguously in canonical order.
pub fn build_complete_multipartite(spec: &PartitionSpec) -> LabeledGraph {
    let n = spec.n();
    let part_of: Vec<usize> = (0..spec.k())
        .flat_map(|p| std::iter::repeat_n(p, spec.part_size(p)))
        .collect();
    let mut g = LabeledGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.set(u, v, true);
            }
        }
    }
    g.part_of = Some(part_of);
    g
}

/// Copy of `g` without the edge `uv`.
pub fn delete_edge(g: &LabeledGraph, u: usize, v: usize) -> Result<LabeledGraph> {
    if u == v {
        return Err(Error::InvalidEdge(u, v, "endpoints coincide".into()));
    }
    if u >= g.n || v >= g.n {
        return Err(Error::InvalidEdge(u, v, "vertex out of range".into()));
    }
    if !g.adjacent(u, v) {
        return Err(Error::InvalidEdge(u, v, "vertices are not adjacent".into()));
    }
    let mut h = g.clone();
    h.set(u, v, false);
    Ok(h)
}

/// First vertex of `part_a` and first vertex of `part_b`.
pub fn canonical_edge(spec: &PartitionSpec, locus: EdgeLocus) -> Result<(usize, usize)> {
    locus.validate(spec)?;
    Ok((
        spec.vertex_range(locus.part_a).start,
        spec.vertex_range(locus.part_b).start,
    ))
}

/// Quotient of the part partition: `b[i][j] = t_j` off the diagonal.
pub fn multipartite_quotient(spec: &PartitionSpec) -> QuotientMatrix {
    let k = spec.k();
    let b = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { 0 } else { spec.part_size(j) as i64 })
                .collect()
        })
        .collect();
    QuotientMatrix {
        b,
        cell_sizes: spec.parts().to_vec(),
    }
}

/// Part partition of `G - e` refined by splitting each endpoint of `e` out of
/// its part.
///
/// Cell order: `{u}`, `{v}`, the rest of `u`'s part, the rest of `v`'s part
/// (each omitted when empty), then the untouched parts in canonical order.
/// Here `u` lies in `part_a`, the larger part. For `K_{1,i,t}` with the edge
/// between the 1-part and the i-part this yields cells of sizes
/// `(1, 1, i-1, t)`.
pub fn deleted_edge_partition(spec: &PartitionSpec, locus: EdgeLocus) -> Result<EquitableCells> {
    let (u, v) = canonical_edge(spec, locus)?;
    let mut cells = vec![vec![u], vec![v]];
    for (part, endpoint) in [(locus.part_a, u), (locus.part_b, v)] {
        let rest: Vec<usize> = spec.vertex_range(part).filter(|&w| w != endpoint).collect();
        if !rest.is_empty() {
            cells.push(rest);
        }
    }
    for p in 0..spec.k() {
        if p != locus.part_a && p != locus.part_b {
            cells.push(spec.vertex_range(p).collect());
        }
    }
    Ok(EquitableCells::new(cells))
}

/// Quotient matrix of `G - e` for the partition of [`deleted_edge_partition`].
/// Equitability is re-checked on the actual graph.
pub fn deleted_edge_quotient(spec: &PartitionSpec, locus: EdgeLocus) -> Result<QuotientMatrix> {
    let cells = deleted_edge_partition(spec, locus)?;
    let (u, v) = canonical_edge(spec, locus)?;
    let g = delete_edge(&build_complete_multipartite(spec), u, v)?;
    quotient_of(&g, &cells)
}

/// True iff every vertex of cell `i` has the same number of neighbours in
/// cell `j`, for all ordered cell pairs.
pub fn verify_equitable(g: &LabeledGraph, cells: &EquitableCells) -> Result<bool> {
    cells.check_cover(g.n)?;
    for ci in &cells.cells {
        for cj in &cells.cells {
            let first = g.count_into(ci[0], cj);
            if ci[1..].iter().any(|&u| g.count_into(u, cj) != first) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Quotient matrix of an equitable partition; errors if it is not equitable.
pub fn quotient_of(g: &LabeledGraph, cells: &EquitableCells) -> Result<QuotientMatrix> {
    if !verify_equitable(g, cells)? {
        return Err(Error::NotEquitable);
    }
    let b = cells
        .cells
        .iter()
        .map(|ci| {
            cells
                .cells
                .iter()
                .map(|cj| g.count_into(ci[0], cj) as i64)
                .collect()
        })
        .collect();
    Ok(QuotientMatrix {
        b,
        cell_sizes: cells.sizes(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(parts: &[usize]) -> PartitionSpec {
        PartitionSpec::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn spec_rejects_single_part_and_zero() {
        assert!(PartitionSpec::new(vec![3]).is_err());
        assert!(PartitionSpec::new(vec![2, 0]).is_err());
        assert!("1".parse::<PartitionSpec>().is_err());
        assert!("1,x".parse::<PartitionSpec>().is_err());
        assert_eq!("1,3,1".parse::<PartitionSpec>().unwrap().parts(), &[3, 1, 1]);
    }

    #[test]
    fn small_builds() {
        let k2 = build_complete_multipartite(&spec(&[1, 1]));
        assert_eq!(k2.edge_count(), 1);

        let c4 = build_complete_multipartite(&spec(&[2, 2]));
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(c4.edge_count(), 4);

        // brute-force count of cross-part pairs
        let s = spec(&[3, 2, 1]);
        let g = build_complete_multipartite(&s);
        let part = g.part_of().unwrap();
        let mut pairs = 0;
        for u in 0..6 {
            for v in u + 1..6 {
                if part[u] != part[v] {
                    pairs += 1;
                }
            }
        }
        assert_eq!(pairs, 11);
        assert_eq!(g.edge_count(), 11);
        assert_eq!(s.edge_count(), 11);
    }

    #[test]
    fn delete_edge_cases() {
        let k2 = build_complete_multipartite(&spec(&[1, 1]));
        let e = delete_edge(&k2, 0, 1).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert_eq!(k2.edge_count(), 1);

        let c4 = build_complete_multipartite(&spec(&[2, 2]));
        let p4 = delete_edge(&c4, 0, 2).unwrap();
        let mut degs: Vec<_> = (0..4).map(|v| p4.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert_eq!(p4.edge_count(), 3);

        assert!(delete_edge(&c4, 0, 1).is_err());
        assert!(delete_edge(&c4, 2, 2).is_err());
        assert!(delete_edge(&c4, 0, 9).is_err());
    }

    #[test]
    fn two_one_parts_deleted_is_k23() {
        // K_{3,1,1}: vertices 0..3 | 3 | 4
        let s = spec(&[1, 3, 1]);
        let g = build_complete_multipartite(&s);
        let locus = EdgeLocus::between_sizes(&s, 1, 1).unwrap();
        let (u, v) = canonical_edge(&s, locus).unwrap();
        let ge = delete_edge(&g, u, v).unwrap();
        // vertices 0..3 | 3 4 is exactly the layout of K_{3,2}
        let k32 = build_complete_multipartite(&spec(&[3, 2]));
        assert_eq!(ge.edges(), k32.edges());
    }

    #[test]
    fn canonical_edges() {
        let l = EdgeLocus::new(0, 1).unwrap();
        assert_eq!(canonical_edge(&spec(&[2, 2]), l).unwrap(), (0, 2));
        assert_eq!(EdgeLocus::new(1, 0).unwrap(), EdgeLocus::new(0, 1).unwrap());
        let s = spec(&[1, 5]);
        assert_eq!(
            canonical_edge(&s, EdgeLocus::new(1, 0).unwrap()).unwrap(),
            canonical_edge(&s, EdgeLocus::new(0, 1).unwrap()).unwrap()
        );
        let l = EdgeLocus::new(0, 2).unwrap();
        assert_eq!(canonical_edge(&spec(&[3, 2, 1]), l).unwrap(), (0, 5));
        assert!(canonical_edge(&spec(&[2, 2]), EdgeLocus::new(0, 2).unwrap()).is_err());
        assert!(EdgeLocus::new(1, 1).is_err());
        assert!("0,0".parse::<EdgeLocus>().is_err());
    }

    #[test]
    fn loci_are_deduplicated_by_size_pair() {
        assert_eq!(EdgeLocus::all_loci(&spec(&[1, 1, 1])).len(), 1);
        assert_eq!(EdgeLocus::all_loci(&spec(&[2, 1, 1])).len(), 2);
        assert_eq!(EdgeLocus::all_loci(&spec(&[3, 2, 2, 1])).len(), 4);
        let s = spec(&[2, 1, 1]);
        let l = EdgeLocus::new(0, 2).unwrap();
        assert_eq!(l.representative(&s).unwrap(), EdgeLocus::new(0, 1).unwrap());
    }

    #[test]
    fn multipartite_quotients() {
        // {1,i,t} in the paper's cell order
        let (i, t) = (4usize, 3usize);
        let g = build_complete_multipartite(&spec(&[1, i, t]));
        let s = spec(&[1, i, t]);
        let cells = EquitableCells::new(vec![
            s.vertex_range(s.find_part(1).unwrap()).collect(),
            s.vertex_range(s.find_part(i).unwrap()).collect(),
            s.vertex_range(s.find_part(t).unwrap()).collect(),
        ]);
        let q = quotient_of(&g, &cells).unwrap();
        let (i, t) = (i as i64, t as i64);
        assert_eq!(q.b, vec![vec![0, i, t], vec![1, 0, t], vec![1, i, 0]]);

        assert_eq!(multipartite_quotient(&spec(&[2, 2])).b, vec![vec![0, 2], vec![2, 0]]);

        // two-cell coarsening of K_{i,1,...,1}
        let (n, i) = (9usize, 2usize);
        let mut parts = vec![i];
        parts.extend(std::iter::repeat_n(1, n - i));
        let s = spec(&parts);
        let g = build_complete_multipartite(&s);
        let cells = EquitableCells::new(vec![(0..i).collect(), (i..n).collect()]);
        let q = quotient_of(&g, &cells).unwrap();
        let (n, i) = (n as i64, i as i64);
        assert_eq!(q.b, vec![vec![0, n - i], vec![i, n - i - 1]]);
    }

    #[test]
    fn deleted_edge_quotient_matches_paper_layout() {
        for i in 2..7usize {
            for t in 1..6usize {
                let s = spec(&[1, i, t]);
                let locus = EdgeLocus::between_sizes(&s, 1, i).unwrap();
                let q = deleted_edge_quotient(&s, locus).unwrap();
                let (i, t) = (i as i64, t as i64);
                assert_eq!(
                    q.b,
                    vec![
                        vec![0, 0, 0, t],
                        vec![0, 0, i - 1, t],
                        vec![0, 1, 0, t],
                        vec![1, 1, i - 1, 0],
                    ],
                    "i={i} t={t}"
                );
                assert_eq!(q.cell_sizes, vec![1, 1, (i - 1) as usize, t as usize]);
            }
        }
    }

    #[test]
    fn deleted_edge_quotient_singletons_for_c4() {
        let s = spec(&[2, 2]);
        let q = deleted_edge_quotient(&s, EdgeLocus::new(0, 1).unwrap()).unwrap();
        assert_eq!(q.cell_sizes, vec![1, 1, 1, 1]);
        let g = delete_edge(&build_complete_multipartite(&s), 0, 2).unwrap();
        let cells = deleted_edge_partition(&s, EdgeLocus::new(0, 1).unwrap()).unwrap();
        let order: Vec<usize> = cells.cells.iter().map(|c| c[0]).collect();
        for (a, &u) in order.iter().enumerate() {
            for (b, &v) in order.iter().enumerate() {
                assert_eq!(q.b[a][b], i64::from(g.adjacent(u, v)));
            }
        }
    }

    #[test]
    fn equitable_checks() {
        let k23 = build_complete_multipartite(&spec(&[2, 3]));
        let parts = EquitableCells::new(vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(verify_equitable(&k23, &parts).unwrap());

        // vertex 0 vs {1,2,3}: 1 and 3 see vertex 0, 2 does not
        let c4 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cells = EquitableCells::new(vec![vec![0], vec![1, 2, 3]]);
        assert!(!verify_equitable(&c4, &cells).unwrap());
        assert_eq!(quotient_of(&c4, &cells), Err(Error::NotEquitable));

        let single = EquitableCells::new((0..4).map(|v| vec![v]).collect());
        assert!(verify_equitable(&c4, &single).unwrap());

        assert!(verify_equitable(&c4, &EquitableCells::new(vec![vec![0, 1]])).is_err());
        assert!(verify_equitable(&c4, &EquitableCells::new(vec![vec![0, 1, 2, 3], vec![0]])).is_err());
    }
}
