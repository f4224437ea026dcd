//! Cross-checks between the structural and brute-force routes.

use multipartite_energy::graph::{
    build_complete_multipartite, canonical_edge, delete_edge, deleted_edge_partition, deleted_edge_quotient,
    multipartite_quotient, verify_equitable, EdgeLocus, PartitionSpec,
};
use multipartite_energy::partitions::partitions_with_min_parts;
use multipartite_energy::poly::{char_poly, real_roots, IntMatrix};
use multipartite_energy::spectra::{adjacency_spectrum, eig_quotient, graph_energy, second_eigenvalue};
use multipartite_energy::verify::{observe_sign, sweep_theorem, SweepConfig, DEFAULT_SIGN_TOL};

#[test]
fn energy_is_twice_the_quotient_radius() {
    for n in 2..=11 {
        for parts in partitions_with_min_parts(n, 2) {
            let spec = PartitionSpec::new(parts).unwrap();
            let e = graph_energy(&build_complete_multipartite(&spec)).unwrap();
            let radius = eig_quotient(&multipartite_quotient(&spec)).unwrap().values[0];
            assert!((e - 2.0 * radius).abs() <= 1e-9 * e, "{spec}");
        }
    }
}

#[test]
fn deleted_quotient_carries_the_energy_change() {
    for n in 3..=9 {
        for parts in partitions_with_min_parts(n, 2) {
            let spec = PartitionSpec::new(parts).unwrap();
            let g = build_complete_multipartite(&spec);
            for locus in EdgeLocus::all_loci(&spec) {
                let (u, v) = canonical_edge(&spec, locus).unwrap();
                let ge = delete_edge(&g, u, v).unwrap();
                assert!(verify_equitable(&ge, &deleted_edge_partition(&spec, locus).unwrap()).unwrap());

                // quotient eigenvalues are eigenvalues of the graph itself
                let q = deleted_edge_quotient(&spec, locus).unwrap();
                let p_after = char_poly(&IntMatrix::from_rows(&q.b).unwrap()).unwrap();
                let dense = adjacency_spectrum(&ge).unwrap().values;
                let roots = real_roots(&p_after.to_f64()).unwrap();
                assert_eq!(roots.real_roots.len(), q.dim(), "{spec} {locus}");
                for r in roots.real_roots {
                    assert!(dense.iter().any(|d| (d - r).abs() <= 1e-8), "{spec} {locus}: root {r}");
                }
            }
        }
    }
}

#[test]
fn two_one_parts_merge_to_a_smaller_graph() {
    for parts in [vec![1, 1, 3], vec![4, 2, 1, 1], vec![1, 1, 1, 5]] {
        let spec = PartitionSpec::new(parts).unwrap();
        let locus = EdgeLocus::between_sizes(&spec, 1, 1).unwrap();
        let c = observe_sign(&spec, locus, DEFAULT_SIGN_TOL).unwrap();
        let mut merged: Vec<usize> = spec.parts().to_vec();
        merged.retain(|&t| t != 1);
        merged.extend(std::iter::repeat_n(1, spec.count_parts(1) - 2));
        merged.push(2);
        let e = graph_energy(&build_complete_multipartite(&PartitionSpec::new(merged).unwrap())).unwrap();
        assert!((c.energy_g_minus_e - e).abs() <= 1e-9, "{spec}");
    }
}

#[test]
fn second_eigenvalue_near_threshold() {
    let spec = PartitionSpec::new(vec![1, 4, 2]).unwrap();
    let locus = EdgeLocus::between_sizes(&spec, 1, 4).unwrap();
    let (u, v) = canonical_edge(&spec, locus).unwrap();
    let l2 = second_eigenvalue(&delete_edge(&build_complete_multipartite(&spec), u, v).unwrap()).unwrap();
    assert!(l2 > 0.36 && l2 < 0.361, "{l2}");
}

#[test]
fn full_sweep_is_clean() {
    let report = sweep_theorem(&SweepConfig::new(10)).unwrap();
    assert!(report.is_clean());
    assert_eq!(report.summary.total, report.summary.agree);
    assert!(report.min_margin() > 1e-2);
}
