//! Predicted and observed change of energy when one edge is removed, for
//! every locus of a chosen spec.
//!
//! cargo run --example edge_deletion -- 3,2,1,1

use multipartite_energy::graph::{EdgeLocus, PartitionSpec};
use multipartite_energy::verify::{observe_sign, DEFAULT_SIGN_TOL};

fn main() -> multipartite_energy::Result<()> {
    let parts: Vec<usize> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,2,1,1".into())
        .split(',')
        .map(|s| s.trim().parse().expect("part size"))
        .collect();
    let spec = PartitionSpec::new(parts)?;
    println!("spec {spec}, n = {}, {} edges", spec.n(), spec.edge_count());
    for locus in EdgeLocus::all_loci(&spec) {
        let c = observe_sign(&spec, locus, DEFAULT_SIGN_TOL)?;
        let (ta, tb) = locus.sizes(&spec);
        println!(
            "  {ta}-part / {tb}-part: E(G) = {:.6}, E(G-e) = {:.6}, delta = {:+.3e}, predicted {}, observed {}",
            c.energy_g, c.energy_g_minus_e, c.delta, c.predicted, c.observed
        );
    }
    Ok(())
}
