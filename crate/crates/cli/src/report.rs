use serde::{Deserialize, Serialize};

use dgp_core::reductions::Witness;
use dgp_core::{Rat, SolveReport};

/// The JSON document written by `solve` and `verify`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub algorithm: String,
    pub n: usize,
    pub m: usize,
    /// Exact density as `num/den`.
    pub density: Rat,
    /// Rendering only; never read back.
    pub density_decimal: f64,
    pub blocks: Vec<Vec<usize>>,
    pub optimal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper_bound: Option<Rat>,
    pub wall_time_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meets_target: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ReportFile {
    pub fn from_solve(r: &SolveReport, m: usize, wall_time_ms: f64) -> Self {
        ReportFile {
            algorithm: r.algorithm.to_string(),
            n: r.partition.n(),
            m,
            density: r.density.clone(),
            density_decimal: r.density.to_f64(),
            blocks: r.partition.blocks().to_vec(),
            optimal: r.optimal,
            upper_bound: r.upper_bound.clone(),
            wall_time_ms,
            target: None,
            meets_target: None,
            witness: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
