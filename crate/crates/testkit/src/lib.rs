//! Brute-force oracles and seeded generators for testing `dgp-core`.
//!
//! The oracles share no search code with the solvers they check: they use
//! their own enumeration and their own edge counting, and touch `dgp-core`
//! only for the graph container, the partition type and rational numbers.

mod generate;
mod oracle;

pub use generate::{
    gen_connected_cubic, gen_gnp, gen_min_degree_n3, gen_min_degree_n_minus, gen_named,
    gen_random_cubic, gen_rx3c, named_graphs, rx3c_no_instance, rx3c_yes_instance, Seeded,
    NAMED,
};
pub use oracle::{
    for_each_partition, oracle_best_partition, oracle_exact_cover, oracle_max_cut,
    oracle_max_matching, oracle_min_dominating_set, ORACLE_PARTITION_MAX_N, ORACLE_SUBSET_MAX_N,
};

use dgp_core::DgpError;

#[derive(Debug, thiserror::Error)]
pub enum TestkitError {
    #[error("{what} supports at most {max} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("unknown named graph {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Core(#[from] DgpError),
}

pub type Result<T> = std::result::Result<T, TestkitError>;
