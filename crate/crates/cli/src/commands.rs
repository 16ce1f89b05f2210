use std::str::FromStr;
use std::time::Instant;

use dgp_core::dense::{approx_min_degree, eptas};
use dgp_core::reductions::{
    extract_witness, reduce_ds_to_bipartite, reduce_minuncut_to_dense, reduce_rx3c_to_cubic,
    ArtifactMeta, ReductionArtifact, Source,
};
use dgp_core::{
    approx_cubic, brooks_clique_partition, partition_density, solve_exact, solve_min_degree_n3,
    Graph, Partition, Rat, SearchConfig, SolveReport,
};

use crate::error::{CliError, Result};
use crate::formats::parse_partition;
use crate::report::ReportFile;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgoChoice {
    Auto,
    Exact,
    Dense3,
    Brooks,
    Approx,
    Cubic43,
    Eptas,
}

impl FromStr for AlgoChoice {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => AlgoChoice::Auto,
            "exact" => AlgoChoice::Exact,
            "dense3" => AlgoChoice::Dense3,
            "brooks" => AlgoChoice::Brooks,
            "approx" => AlgoChoice::Approx,
            "cubic43" => AlgoChoice::Cubic43,
            "eptas" => AlgoChoice::Eptas,
            other => {
                return Err(CliError::Parse(format!(
                    "unknown algorithm {other:?} (expected auto, exact, dense3, brooks, approx, cubic43 or eptas)"
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub algo: AlgoChoice,
    pub eps: Rat,
    /// Defaults to `max(4, n - δ)`.
    pub t: Option<usize>,
    pub max_n: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algo: AlgoChoice::Auto,
            eps: Rat::frac(1, 4),
            t: None,
            max_n: SearchConfig::default().max_n,
        }
    }
}

/// `δ >= n - 3` → dense3; cubic → cubic43; `n <= max_n` → exact; else brooks.
pub fn choose_auto(g: &Graph, max_n: usize) -> AlgoChoice {
    let n = g.n();
    let delta = g.min_degree().unwrap_or(0);
    if n > 0 && delta + 3 >= n {
        AlgoChoice::Dense3
    } else if n > 0 && g.is_regular(3) {
        AlgoChoice::Cubic43
    } else if n <= max_n {
        AlgoChoice::Exact
    } else {
        AlgoChoice::Brooks
    }
}

pub fn solve(g: &Graph, opts: &SolveOptions) -> Result<ReportFile> {
    let start = Instant::now();
    let algo = match opts.algo {
        AlgoChoice::Auto => choose_auto(g, opts.max_n),
        a => a,
    };
    let cfg = SearchConfig::with_max_n(opts.max_n);
    let report: SolveReport = match algo {
        AlgoChoice::Auto => unreachable!("resolved above"),
        AlgoChoice::Exact => solve_exact(g, &cfg)?,
        AlgoChoice::Dense3 => solve_min_degree_n3(g)?,
        AlgoChoice::Brooks => brooks_clique_partition(g)?,
        AlgoChoice::Approx => approx_min_degree(g)?,
        AlgoChoice::Cubic43 => approx_cubic(g)?,
        AlgoChoice::Eptas => {
            let delta = g.min_degree().unwrap_or(0);
            let t = opts.t.unwrap_or_else(|| (g.n() - delta).max(4));
            eptas(g, &opts.eps, t, &cfg)?
        }
    };
    report.verify(g)?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(ReportFile::from_solve(&report, g.m(), ms))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReduceSource {
    Rx3c,
    Ds,
    MinUncut,
}

impl FromStr for ReduceSource {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "rx3c" => ReduceSource::Rx3c,
            "ds" => ReduceSource::Ds,
            "minuncut" => ReduceSource::MinUncut,
            other => {
                return Err(CliError::Parse(format!(
                    "unknown source {other:?} (expected rx3c, ds or minuncut)"
                )))
            }
        })
    }
}

/// Rebuilds the artifact a source description produces.
pub fn rebuild(source: &Source) -> Result<ReductionArtifact> {
    Ok(match source {
        Source::Rx3c { instance } => reduce_rx3c_to_cubic(instance)?,
        Source::DominatingSet {
            graph,
            k,
            intermediate,
        } => reduce_ds_to_bipartite(graph, *k, *intermediate)?,
        Source::MinUncut { graph, k } => reduce_minuncut_to_dense(graph, *k)?,
    })
}

/// Parses `text` as a partition file, or as a report produced by `solve`
/// (detected by a leading `{`), taking its blocks.
pub fn read_partition(text: &str, n: usize) -> Result<Partition> {
    if text.trim_start().starts_with('{') {
        let r: ReportFile =
            serde_json::from_str(text).map_err(|e| CliError::Parse(format!("report: {e}")))?;
        Ok(Partition::new(n, r.blocks)?)
    } else {
        parse_partition(text, n)
    }
}

/// Recomputes the density of `p`. With reduction metadata, the graph must
/// match the construction for the recorded source, the target is compared
/// and a witness is extracted when the target is met. A bare `target` is
/// only compared.
pub fn verify(
    g: &Graph,
    p: &Partition,
    meta: Option<ArtifactMeta>,
    target: Option<Rat>,
) -> Result<ReportFile> {
    let start = Instant::now();
    let density = partition_density(g, p)?;
    let mut report = ReportFile {
        algorithm: "verify".into(),
        n: g.n(),
        m: g.m(),
        density_decimal: density.to_f64(),
        density: density.clone(),
        blocks: p.blocks().to_vec(),
        optimal: false,
        upper_bound: None,
        wall_time_ms: 0.0,
        target: None,
        meets_target: None,
        witness: None,
    };
    if let Some(meta) = meta {
        let rebuilt = rebuild(&meta.source)?;
        if rebuilt.graph != *g || rebuilt.meta != meta {
            return Err(CliError::Usage(
                "graph and metadata do not match the recorded reduction".into(),
            ));
        }
        let artifact = ReductionArtifact::from_parts(g.clone(), meta)?;
        report.meets_target = Some(density >= *artifact.target());
        report.target = Some(artifact.target().clone());
        report.witness = extract_witness(&artifact, p)?;
    } else if let Some(t) = target {
        report.meets_target = Some(density >= t);
        report.target = Some(t);
    }
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}
