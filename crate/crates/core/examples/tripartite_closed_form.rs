//! Tripartite graphs K_{1,i,t}: energy from the cubic quotient polynomial,
//! before and after deleting the 1-i edge, against a dense eigen-solve.

use multipartite_energy::graph::{build_complete_multipartite, canonical_edge, delete_edge, EdgeLocus, PartitionSpec};
use multipartite_energy::poly::{poly_energy, tripartite_deleted_char_poly, tripartite_quotient_char_poly};
use multipartite_energy::spectra::graph_energy;

fn main() -> multipartite_energy::Result<()> {
    println!("{:>3} {:>3} {:>14} {:>14} {:>10}", "i", "t", "E(G)", "E(G-e)", "max err");
    for (i, t) in [(1, 1), (2, 3), (3, 1), (4, 4), (6, 2), (9, 5)] {
        // the quotient captures every non-zero eigenvalue, so their energies agree
        let e_g = poly_energy(&tripartite_quotient_char_poly(i, t).to_f64())?;
        let e_ge = poly_energy(&tripartite_deleted_char_poly(i, t).to_f64())?;

        let spec = PartitionSpec::new(vec![1, i as usize, t as usize])?;
        let locus = EdgeLocus::between_sizes(&spec, 1, i as usize)?;
        let g = build_complete_multipartite(&spec);
        let (u, v) = canonical_edge(&spec, locus)?;
        let dense_g = graph_energy(&g)?;
        let dense_ge = graph_energy(&delete_edge(&g, u, v)?)?;
        let err = (e_g - dense_g).abs().max((e_ge - dense_ge).abs());
        println!("{i:>3} {t:>3} {e_g:>14.9} {e_ge:>14.9} {err:>10.1e}");
    }
    Ok(())
}
