use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dgp_cli::formats::{parse_graph, parse_rx3c, write_graph, write_partition, write_rx3c};
use dgp_cli::{read_partition, solve, verify, AlgoChoice, CliError, ReduceSource, Result, SolveOptions};
use dgp_core::reductions::{
    reduce_ds_to_bipartite, reduce_minuncut_to_dense, reduce_rx3c_to_cubic, triple_instance,
    ArtifactMeta,
};
use dgp_core::{Rat, SearchConfig};
use dgp_testkit as testkit;

#[derive(Parser)]
#[command(name = "dgp", version, about = "Maximum dense graph partition solver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a graph file and write a JSON report.
    Solve {
        graph: PathBuf,
        /// auto, exact, dense3, brooks, approx, cubic43 or eptas.
        #[arg(long, default_value = "auto")]
        algo: AlgoChoice,
        #[arg(long, default_value = "1/4")]
        eps: Rat,
        /// Degree slack for eptas; defaults to max(4, n - δ).
        #[arg(long)]
        t: Option<usize>,
        /// Largest graph the exact solver accepts.
        #[arg(long, default_value_t = SearchConfig::default().max_n)]
        max_n: usize,
        /// Report path (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the partition in the plain block-per-line format.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Build a reduction image and its metadata sidecar.
    Reduce {
        /// rx3c, ds or minuncut.
        source: ReduceSource,
        input: PathBuf,
        /// Budget: dominating set size or number of uncut edges.
        #[arg(long)]
        k: Option<usize>,
        /// For ds: emit the sparse intermediate graph only.
        #[arg(long)]
        intermediate: bool,
        /// For minuncut: triple the source (and k) when n is not a multiple of 6.
        #[arg(long)]
        triple: bool,
        /// Graph output path.
        #[arg(long)]
        out: PathBuf,
        /// Metadata path; defaults to `<out>.meta.json`.
        #[arg(long)]
        meta: Option<PathBuf>,
    },
    /// Recompute a partition's density; with --meta, also try to extract a witness.
    Verify {
        graph: PathBuf,
        /// Partition file or a report written by `solve`.
        partition: PathBuf,
        #[arg(long)]
        meta: Option<PathBuf>,
        #[arg(long)]
        target: Option<Rat>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a graph (or an rx3c instance) from a seed.
    Gen {
        /// cubic, connected-cubic, dense3, min-degree, gnp, named or rx3c.
        family: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for gnp.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Degree slack for min-degree: δ >= n - t.
        #[arg(long, default_value_t = 4)]
        t: usize,
        /// Universe size / 3 for rx3c.
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need_k(k: Option<usize>) -> Result<usize> {
    k.ok_or_else(|| CliError::Usage("this reduction needs --k".into()))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve {
            graph,
            algo,
            eps,
            t,
            max_n,
            out,
            partition_out,
        } => {
            let g = parse_graph(&read(&graph)?)?;
            let opts = SolveOptions { algo, eps, t, max_n };
            let report = solve(&g, &opts)?;
            if let Some(p) = partition_out {
                let partition = dgp_core::Partition::new(g.n(), report.blocks.clone())?;
                write(Some(&p), &write_partition(&partition))?;
            }
            write(out.as_deref(), &report.to_json())
        }
        Command::Reduce {
            source,
            input,
            k,
            intermediate,
            triple,
            out,
            meta,
        } => {
            let text = read(&input)?;
            let artifact = match source {
                ReduceSource::Rx3c => reduce_rx3c_to_cubic(&parse_rx3c(&text)?)?,
                ReduceSource::Ds => reduce_ds_to_bipartite(&parse_graph(&text)?, need_k(k)?, intermediate)?,
                ReduceSource::MinUncut => {
                    let g = parse_graph(&text)?;
                    let k = need_k(k)?;
                    if triple {
                        let (g3, k3) = triple_instance(&g, k)?;
                        reduce_minuncut_to_dense(&g3, k3)?
                    } else {
                        reduce_minuncut_to_dense(&g, k)?
                    }
                }
            };
            let meta_path = meta.unwrap_or_else(|| {
                let mut p = out.clone().into_os_string();
                p.push(".meta.json");
                PathBuf::from(p)
            });
            write(Some(&out), &write_graph(&artifact.graph))?;
            let json = serde_json::to_string_pretty(&artifact.meta).expect("metadata serializes");
            write(Some(&meta_path), &(json + "\n"))?;
            eprintln!(
                "{} vertices, {} edges, target {}",
                artifact.graph.n(),
                artifact.graph.m(),
                artifact.target()
            );
            Ok(())
        }
        Command::Verify {
            graph,
            partition,
            meta,
            target,
            out,
        } => {
            let g = parse_graph(&read(&graph)?)?;
            let p = read_partition(&read(&partition)?, g.n())?;
            let meta: Option<ArtifactMeta> = match meta {
                Some(path) => Some(
                    serde_json::from_str(&read(&path)?)
                        .map_err(|e| CliError::Parse(format!("metadata: {e}")))?,
                ),
                None => None,
            };
            let report = verify(&g, &p, meta, target)?;
            write(out.as_deref(), &report.to_json())
        }
        Command::Gen {
            family,
            n,
            seed,
            p,
            t,
            q,
            name,
            out,
        } => {
            let s = testkit::Seeded::new(seed);
            let gen_err = |e: testkit::TestkitError| CliError::Usage(e.to_string());
            let g = match family.as_str() {
                "rx3c" => {
                    let inst = testkit::gen_rx3c(q, s).map_err(gen_err)?;
                    return write(out.as_deref(), &write_rx3c(&inst));
                }
                "cubic" => testkit::gen_random_cubic(n, s),
                "connected-cubic" => testkit::gen_connected_cubic(n, s),
                "dense3" => testkit::gen_min_degree_n3(n, s),
                "min-degree" => testkit::gen_min_degree_n_minus(n, t, s),
                "gnp" => testkit::gen_gnp(n, p, s),
                "named" => {
                    let name = name.ok_or_else(|| CliError::Usage("named needs --name".into()))?;
                    testkit::gen_named(&name)
                }
                other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
            }
            .map_err(gen_err)?;
            write(out.as_deref(), &write_graph(&g))
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("DGP_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| CliError::Parse(format!("DGP_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure {threads} threads: {e}")))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dgp: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
