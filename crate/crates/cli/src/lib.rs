//! Command implementations behind the `szwalk` binary.
//!
//! Every command produces one artifact (text, CSV or JSON) as a string;
//! `main` writes it to stdout or `--out`. Output is deterministic given the
//! arguments and seed. Vertex labels on the command line and in files are
//! 1-based; everything internal is 0-based.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use szwalk_core::{
    cesaro_mixing_time, sampling_search_cost, separation_report, sign_table, simulate_hitting_time,
    verify_exceptional, verify_grid_reduction, Error, ExceptionalReport, Graph, GraphConfig,
    MarkedSet, Matrix64, Stage, Walk64,
};

pub mod render;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "szwalk",
    version,
    about = "Szegedy quantum walk search on cycles and torus grids, with classical hitting/mixing baselines"
)]
pub struct Cli {
    /// JSON config file providing the graph and marked set
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// RNG seed for Monte Carlo commands
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Artifact format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the artifact to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sign table of the walk on a marked cycle (defaults: six vertices,
    /// marked 1,2,4, stages 2..=5)
    Table1 {
        /// Cycle size
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Marked vertices, 1-based, comma separated; "" for none
        /// (default 1,2,4)
        #[arg(long)]
        marked: Option<String>,
        /// First recorded stage t (columns (W')^t and R_a'(W')^t)
        #[arg(long, default_value_t = 2)]
        from: usize,
        /// Last recorded stage t
        #[arg(long, default_value_t = 5)]
        to: usize,
    },
    /// Dense walk trajectory plus the exceptional-configuration report
    Walk {
        #[command(flatten)]
        graph: GraphArgs,
        /// Full steps of W' to run
        #[arg(long, default_value_t = 6)]
        steps: usize,
        /// Deviation tolerance for the verdict
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Omit the per-stage amplitudes from the artifact
        #[arg(long)]
        no_trajectory: bool,
    },
    /// Classical hitting time: exact linear solve next to a Monte Carlo run
    Hitting {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Cesàro mixing time to uniform from a point start
    Mixing {
        #[command(flatten)]
        graph: GraphArgs,
        /// Start vertex, 1-based
        #[arg(long, default_value_t = 1)]
        start: usize,
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
    },
    /// Quantum sampling vs classical hitting cost for clustered marked arcs
    Separation {
        /// Cycle sizes, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Cluster sizes; a single value is reused for every n
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
    },
    /// Torus-diagonal reduction study
    GridReduce {
        #[arg(long, default_value_t = 5)]
        side: usize,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Repeated uniform guessing cost for k marked out of n
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
}

/// Graph selection shared by several commands: either `--config` or an
/// explicit generator.
#[derive(clap::Args, Debug, Default)]
pub struct GraphArgs {
    /// Cycle size
    #[arg(long, conflicts_with = "torus")]
    pub cycle: Option<usize>,
    /// Torus grid side
    #[arg(long)]
    pub torus: Option<usize>,
    /// Marked vertices, 1-based, comma separated
    #[arg(long, value_delimiter = ',')]
    pub marked: Option<Vec<usize>>,
    /// Mark the torus main diagonal
    #[arg(long, conflicts_with = "marked")]
    pub diagonal: bool,
}

/// Command failure split by exit code: 2 for bad arguments or config, 1 for
/// runtime failures.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => m,
        }
    }
}

/// Validation errors are usage errors; anything the computation itself hits
/// is a runtime error.
fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn runtime(e: Error) -> CliError {
    match e {
        Error::InvalidSize { .. }
        | Error::VertexOutOfRange { .. }
        | Error::Domain(_)
        | Error::EmptyMarkedSet
        | Error::InvalidConfig(_) => CliError::Usage(e.to_string()),
        other => CliError::Runtime(other.to_string()),
    }
}

fn resolve_graph(cli: &Cli, args: &GraphArgs) -> Result<(Graph, MarkedSet), CliError> {
    if let Some(path) = &cli.config {
        if args.cycle.is_some() || args.torus.is_some() || args.marked.is_some() || args.diagonal {
            return Err(CliError::Usage(
                "--config conflicts with --cycle/--torus/--marked/--diagonal".into(),
            ));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let cfg = GraphConfig::from_json(&text).map_err(usage)?;
        return cfg.build().map_err(usage);
    }
    let graph = match (args.cycle, args.torus) {
        (Some(n), None) => Graph::cycle(n).map_err(usage)?,
        (None, Some(side)) => Graph::torus_grid(side).map_err(usage)?,
        _ => {
            return Err(CliError::Usage(
                "exactly one of --cycle, --torus or --config is required".into(),
            ))
        }
    };
    let marked = if args.diagonal {
        match args.torus {
            Some(side) => MarkedSet::diagonal(side).map_err(usage)?,
            None => return Err(CliError::Usage("--diagonal requires --torus".into())),
        }
    } else {
        match &args.marked {
            Some(labels) => {
                MarkedSet::from_one_based(labels.iter().copied(), graph.n()).map_err(usage)?
            }
            None => MarkedSet::empty(graph.n()),
        }
    };
    Ok((graph, marked))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Runtime(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Executes a parsed command line and returns the artifact string.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Table1 { n, marked, from, to } => {
            let labels = match marked {
                None => vec![1, 2, 4],
                Some(list) => parse_label_list(list)?,
            };
            let set = MarkedSet::from_one_based(labels, *n).map_err(usage)?;
            let table = sign_table(*n, &set, *from, *to).map_err(usage)?;
            Ok(match cli.format {
                Format::Text => render::sign_table_text(&table),
                Format::Csv => render::sign_table_csv(&table),
                Format::Json => to_json(&render::SignTableJson::from(&table))?,
            })
        }
        Command::Walk {
            graph,
            steps,
            tol,
            no_trajectory,
        } => {
            let (g, marked) = resolve_graph(cli, graph)?;
            let report = verify_exceptional(&g, &marked, *steps, *tol).map_err(runtime)?;
            let walk = Walk64::new(&g, &marked).map_err(runtime)?;
            let trajectory = if *no_trajectory {
                Vec::new()
            } else {
                walk.evolve(*steps, true)
            };
            let artifact = WalkArtifact::new(&walk, &trajectory, report);
            Ok(match cli.format {
                Format::Text => render::walk_text(&artifact),
                Format::Csv => render::walk_csv(&artifact),
                Format::Json => to_json(&artifact)?,
            })
        }
        Command::Hitting { graph, trials } => {
            let (g, marked) = resolve_graph(cli, graph)?;
            let report = simulate_hitting_time(&g, &marked, *trials, cli.seed).map_err(runtime)?;
            Ok(match cli.format {
                Format::Text => render::hitting_text(&report),
                Format::Csv => render::hitting_csv(&report),
                Format::Json => to_json(&report)?,
            })
        }
        Command::Mixing {
            graph,
            start,
            epsilon,
        } => {
            let (g, _) = resolve_graph(cli, graph)?;
            if *start == 0 || *start > g.n() {
                return Err(CliError::Usage(format!(
                    "start vertex {start} outside 1..={}",
                    g.n()
                )));
            }
            let p = Matrix64::transition(&g);
            let report = cesaro_mixing_time(&p, start - 1, *epsilon).map_err(runtime)?;
            Ok(match cli.format {
                Format::Text => render::mixing_text(&report),
                Format::Csv => render::mixing_csv(&report),
                Format::Json => to_json(&report)?,
            })
        }
        Command::Separation { n, k } => {
            let pairs = zip_pairs(n, k)?;
            let reports = pairs
                .into_iter()
                .map(|(n, k)| separation_report(n, k).map_err(runtime))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(match cli.format {
                Format::Text => render::separation_text(&reports),
                Format::Csv => render::separation_csv(&reports),
                Format::Json => to_json(&reports)?,
            })
        }
        Command::GridReduce { side, steps, tol } => {
            let report = verify_grid_reduction(*side, *steps, *tol).map_err(runtime)?;
            Ok(match cli.format {
                Format::Text => render::grid_text(&report),
                Format::Csv => render::grid_csv(&report),
                Format::Json => to_json(&report)?,
            })
        }
        Command::Sample { n, k, trials } => {
            let report = sampling_search_cost(*n, *k, *trials, cli.seed).map_err(runtime)?;
            Ok(match cli.format {
                Format::Text => render::sample_text(&report),
                Format::Csv => render::sample_csv(&report),
                Format::Json => to_json(&report)?,
            })
        }
    }
}

fn parse_label_list(list: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("invalid vertex label {s:?} in --marked")))
        })
        .collect()
}

fn zip_pairs(n: &[usize], k: &[usize]) -> Result<Vec<(usize, usize)>, CliError> {
    if k.len() == 1 {
        return Ok(n.iter().map(|&nn| (nn, k[0])).collect());
    }
    if n.len() != k.len() {
        return Err(CliError::Usage(format!(
            "--n has {} values but --k has {}; give one k or matching lists",
            n.len(),
            k.len()
        )));
    }
    Ok(n.iter().copied().zip(k.iter().copied()).collect())
}

/// JSON artifact of the walk command.
#[derive(Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct WalkArtifact {
    pub edges: Vec<String>,
    pub trajectory: Vec<TrajectoryEntry>,
    pub exceptional: ExceptionalReport,
}

#[derive(Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TrajectoryEntry {
    pub stage: String,
    pub amplitudes: Vec<f64>,
}

impl WalkArtifact {
    fn new(
        walk: &Walk64,
        trajectory: &[(Stage, szwalk_core::EdgeState64)],
        exceptional: ExceptionalReport,
    ) -> Self {
        let basis = walk.basis();
        Self {
            edges: (0..basis.len()).map(|i| basis.label(i)).collect(),
            trajectory: trajectory
                .iter()
                .map(|(stage, state)| TrajectoryEntry {
                    stage: stage.to_string(),
                    amplitudes: state.amplitudes().to_vec(),
                })
                .collect(),
            exceptional,
        }
    }
}

/// Re-exported report types so integration tests can parse artifacts back.
pub mod reports {
    pub use szwalk_core::{
        ExceptionalReport, GridReductionReport, HittingReport, MixingReport, SampleReport,
        SeparationReport,
    };
}

/// Writes `artifact` to `--out` or stdout.
pub fn emit(cli: &Cli, artifact: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, artifact)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{artifact}");
            Ok(())
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.message())
    }
}
