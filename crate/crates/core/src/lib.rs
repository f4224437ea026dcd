//! Energy of complete multipartite graphs and how it changes when a single
//! edge is removed.
//!
//! The crate offers two independent routes to every energy it reports:
//!
//! * brute force: build the adjacency matrix and run a dense symmetric
//!   eigen-solve ([`spectra`]);
//! * structure: reduce the graph to the quotient matrix of an equitable
//!   partition and extract roots of small integer polynomials
//!   ([`graph`], [`poly`]).
//!
//! [`verify`] combines both into a sign oracle for edge deletion, the
//! sufficient-condition checkers used to prove it, and exhaustive sweeps over
//! all small partitions. [`cli`] wraps the sweeps for batch runs.
//!
//! ```
//! use multipartite_energy::graph::{PartitionSpec, build_complete_multipartite};
//! use multipartite_energy::spectra::graph_energy;
//!
//! let spec = PartitionSpec::new(vec![1, 3, 1]).unwrap();
//! let g = build_complete_multipartite(&spec);
//! assert!((graph_energy(&g).unwrap() - 6.0).abs() < 1e-9);
//! ```

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod graph;
pub mod partitions;
pub mod poly;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
