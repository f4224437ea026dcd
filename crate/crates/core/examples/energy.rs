//! Energy of a few complete multipartite graphs, computed twice: from the
//! full adjacency spectrum and from the quotient matrix.
//!
//! cargo run --example energy -- 1,3,1

use multipartite_energy::graph::{build_complete_multipartite, multipartite_quotient, PartitionSpec};
use multipartite_energy::spectra::{adjacency_spectrum, eig_quotient};

fn main() -> multipartite_energy::Result<()> {
    let specs: Vec<Vec<usize>> = match std::env::args().nth(1) {
        Some(arg) => vec![arg.split(',').map(|s| s.trim().parse().expect("part size")).collect()],
        None => vec![vec![1, 3, 1], vec![2, 3], vec![3, 3, 3], vec![5, 2, 1, 1]],
    };
    for parts in specs {
        let spec = PartitionSpec::new(parts)?;
        let spectrum = adjacency_spectrum(&build_complete_multipartite(&spec))?;
        // only one positive eigenvalue, so E = 2 * lambda_1
        let radius = eig_quotient(&multipartite_quotient(&spec))?.values[0];
        println!(
            "K_{spec}: n = {:>2}, E = {:.9}, 2*lambda_1 = {:.9}, residual {:.1e}",
            spec.n(),
            spectrum.energy(),
            2.0 * radius,
            spectrum.residual_bound
        );
    }
    Ok(())
}
