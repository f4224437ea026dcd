//! Sufficient conditions for an energy increase, evaluated on a grid of
//! thresholds, next to the observed change.

use multipartite_energy::graph::{EdgeLocus, PartitionSpec};
use multipartite_energy::verify::{
    check_cond1, check_cond2, check_rey, check_thm22, EdgeSubsetSpec, CONDITION_GRID,
};

fn main() -> multipartite_energy::Result<()> {
    for parts in [vec![1, 6, 1, 1], vec![1, 4, 2], vec![3, 3, 2, 1]] {
        let spec = PartitionSpec::new(parts)?;
        let big = spec.parts()[0];
        let locus = EdgeLocus::between_sizes(&spec, 1, big)?;
        let subset = EdgeSubsetSpec::single(&spec, locus)?;
        let t = check_thm22(&spec, &subset)?;
        println!(
            "{spec}: edge-subset rule {} (lambda(H) = {:.3}), delta = {:+.6}",
            t.holds, t.lambda_h, t.delta
        );
        for &a in &CONDITION_GRID {
            let rey = check_rey(&spec, locus, a)?;
            let c1 = check_cond1(&spec, locus, a);
            let c2 = check_cond2(&spec, locus, a);
            let show = |c: multipartite_energy::Result<multipartite_energy::verify::CondCheck>| {
                c.map_or("n/a".to_string(), |c| c.holds.to_string())
            };
            println!(
                "  a = {a:<5}: perron {:<5} first {:<5} second {:<5} lambda2(G-e) = {:.4}",
                rey.holds,
                show(c1),
                show(c2),
                rey.lambda2_after
            );
        }
    }
    Ok(())
}
