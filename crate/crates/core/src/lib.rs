//! Spectral clustering of simplicial complexes through their filled triangles.
//!
//! Nodes of an order-2 simplicial complex are partitioned by minimizing the
//! triangle conductance: the number of filled triangles split by a cut,
//! divided by the smaller side's triangle volume. The spectral relaxation
//! runs on the normalized Laplacian of the simplicial adjacency matrix,
//! whose `(i, j)` entry counts the filled triangles containing both nodes.
//!
//! Two baselines share the same pipeline: motif clustering (every 3-clique of
//! the edge graph treated as filled) and plain graph spectral clustering.
//!
//! ```
//! use scx_core::{cluster, io, metrics, Method};
//!
//! let (complex, truth) = io::synth_hollow_bridge(0);
//! let result = cluster::sweep_cut(&complex, Method::Simplicial).unwrap();
//! let score = metrics::nmi(&result.partition, &truth).unwrap();
//! assert!((score - 1.0).abs() < 1e-12);
//! ```

pub mod cluster;
pub mod complex;
pub mod conductance;
pub mod eig;
mod error;
pub mod io;
pub mod matrix;
pub mod metrics;
pub mod operators;

pub use cluster::Partition;
pub use complex::{NodeId, SimplicialComplex};
pub use error::{Error, Result};
pub use matrix::{IntMatrix, SymMatrix};
pub use operators::{Method, OperatorBundle};
