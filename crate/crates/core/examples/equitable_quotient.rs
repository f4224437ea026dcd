//! Equitable partition of K_{t_1,...,t_k} - e, its quotient matrix and the
//! exact characteristic polynomial of the quotient.

use multipartite_energy::graph::{
    build_complete_multipartite, canonical_edge, delete_edge, deleted_edge_partition, deleted_edge_quotient,
    verify_equitable, EdgeLocus, PartitionSpec,
};
use multipartite_energy::poly::{char_poly, real_roots, IntMatrix};

fn main() -> multipartite_energy::Result<()> {
    let spec = PartitionSpec::new(vec![3, 2, 1])?;
    let locus = EdgeLocus::between_sizes(&spec, 3, 2)?;
    let (u, v) = canonical_edge(&spec, locus)?;
    let ge = delete_edge(&build_complete_multipartite(&spec), u, v)?;

    let cells = deleted_edge_partition(&spec, locus)?;
    println!("cells {:?}, equitable: {}", cells.sizes(), verify_equitable(&ge, &cells)?);

    let q = deleted_edge_quotient(&spec, locus)?;
    for row in &q.b {
        println!("  {row:?}");
    }
    let p = char_poly(&IntMatrix::from_rows(&q.b)?)?;
    println!("char poly {p}");
    let roots = real_roots(&p.to_f64())?;
    println!("roots {:?} ({} certified)", roots.real_roots, roots.certified_count);
    Ok(())
}
