//! Max Dense Graph Partition: split the vertices of a graph into blocks so
//! that the sum of the block densities `|E(B)| / |B|` is as large as possible.
//!
//! The crate provides an exact branch-and-bound solver, an optimal
//! polynomial algorithm for graphs whose complement has maximum degree two,
//! coloring-based approximations for dense graphs, a 4/3-approximation for
//! cubic graphs, closed forms for complete bipartite graphs, and executable
//! hardness reductions with witness extraction. Every density is an exact
//! rational.

pub mod bipartite;
pub mod coloring;
pub mod cubic;
pub mod dense;
pub mod density;
pub mod error;
pub mod exact;
pub mod graph;
pub mod matching;
pub mod partition;
pub mod rational;
pub mod reductions;
pub mod report;

pub use bipartite::{complete_bipartite_density, is_optimal_bipartite_partition, BipartiteSplit};
pub use cubic::{approx_cubic, cubic_upper_bound, find_diamonds_and_triangles, CubicDecomposition};
pub use dense::{analyze_complement, approx_min_degree, brooks_clique_partition, eptas, solve_min_degree_n3, ComplementStats};
pub use density::{block_density, density, density_upper_bound, partition_density, utility};
pub use error::{DgpError, Result};
pub use exact::{enumerate_partitions, solve_exact, SearchConfig};
pub use graph::Graph;
pub use matching::maximum_matching;
pub use partition::Partition;
pub use rational::Rat;
pub use report::{Algorithm, SolveReport};
