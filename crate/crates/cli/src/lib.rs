//! Library side of the `dgp` command: file formats, reports and the
//! commands themselves, so they can be driven in-process by tests.

pub mod commands;
pub mod error;
pub mod formats;
pub mod report;

pub use commands::{choose_auto, read_partition, rebuild, solve, verify, AlgoChoice, ReduceSource, SolveOptions};
pub use error::{CliError, Result};
pub use report::ReportFile;
