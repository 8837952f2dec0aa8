mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact cut-cone and pair-cut-cone membership for finite metrics.
///
/// Exit codes: 0 success or member, 1 non-member or invalid, 2 inconclusive,
/// 3 usage or input error.
#[derive(Parser, Debug)]
#[command(name = "cutcone", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Report style.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Seed for randomized generators.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Override the vertex limit of the exponential-size operations.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,

    /// Write the main output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check nonnegativity and the triangle inequalities.
    Validate {
        #[command(flatten)]
        input: MetricInput,
        /// Also reject zero distances between distinct points.
        #[arg(long)]
        strict: bool,
    },
    /// Trace, star traces and diameter.
    Stats {
        #[command(flatten)]
        input: MetricInput,
    },
    /// Pair-cut cone membership: closed form for n >= 5, LP otherwise.
    Paircut {
        /// `exact` forces the LP oracle.
        mode: Option<PaircutMode>,
        #[command(flatten)]
        input: MetricInput,
    },
    /// Cut cone membership.
    Cutcone {
        mode: CutconeMode,
        #[command(flatten)]
        input: MetricInput,
        /// Write the cut decomposition here when one is found.
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
        /// Write the Farkas vector here when the LP proves non-membership.
        #[arg(long)]
        emit_farkas: Option<PathBuf>,
    },
    /// Kernel of the full cut-matrix.
    Kernel {
        what: KernelWhat,
        #[arg(long)]
        n: usize,
    },
    /// Check a cut decomposition against a metric.
    VerifyCert {
        #[arg(long)]
        cert: PathBuf,
        #[command(flatten)]
        input: MetricInput,
    },
    /// Point embeddings.
    Embed {
        #[command(subcommand)]
        kind: EmbedKind,
    },
    /// Sphere-of-influence graphs.
    Sig {
        #[command(subcommand)]
        action: SigAction,
    },
    /// Graph families.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Print one of the structured matrices.
    Matrix {
        #[command(subcommand)]
        action: MatrixAction,
    },
}

#[derive(Args, Debug, Clone)]
pub struct MetricInput {
    /// Metric document; stdin when absent or `-`.
    #[arg(long)]
    pub metric: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaircutMode {
    Exact,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutconeMode {
    Sufficient,
    Exact,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelWhat {
    Basis,
}

#[derive(Subcommand, Debug)]
pub enum EmbedKind {
    /// ℓ1 points from a cut decomposition.
    L1 {
        #[arg(long)]
        cert: PathBuf,
        /// Also check the points against this metric.
        #[arg(long)]
        metric: Option<PathBuf>,
    },
    /// ℓ∞ points whose SIG is the given graph.
    LinfSig {
        /// Graph document; stdin when absent or `-`.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SigAction {
    /// The SIG of a metric.
    Build {
        #[command(flatten)]
        input: MetricInput,
    },
    /// Check that a metric is a SIG-metric of a graph.
    Verify {
        #[command(flatten)]
        input: MetricInput,
        #[arg(long)]
        graph: PathBuf,
    },
    /// The forced metric of the star S(n) and its pair-cut verdict.
    StarObstruction {
        #[arg(long)]
        n: usize,
        /// Comma-separated center-to-leaf distances; seeded random when absent.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<String>>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamilyAction {
    /// Emit the metric of a named graph: K n, C n, Q k, B m n, L n, CP n,
    /// S n, R n k, `random n` (seeded connected graph), or `graph` (a graph
    /// document read from --input).
    Gen {
        name: String,
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Which::D1)]
        metric: Which,
        /// Emit the graph document instead of a metric.
        #[arg(long)]
        emit_graph: bool,
        /// Graph document for `graph`; stdin when absent or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Edge probability for `random`.
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    /// 1 on edges, 2 elsewhere.
    D0,
    /// Shortest-path distance.
    D1,
}

#[derive(Subcommand, Debug)]
pub enum MatrixAction {
    Dump {
        kind: MatrixKind,
        #[arg(long)]
        n: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    /// Square pair-cut matrix.
    Square,
    /// Its inverse (n >= 5).
    SquareInverse,
    /// Vertex-pair incidence matrix.
    Incidence,
    /// Full cut-matrix.
    Full,
    /// Right inverse of the full cut-matrix.
    FullRightInverse,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::USAGE } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::USAGE)
        }
    }
}
