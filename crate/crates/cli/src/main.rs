use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use scx_core::Method;

mod commands;

/// Spectral clustering of simplicial complexes by filled-triangle conductance.
///
/// Exit codes: 0 success, 1 unreadable or invalid input, 2 infeasible
/// problem (no triangles, zero-volume side), 3 internal failure.
#[derive(Parser, Debug)]
#[command(name = "scx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition the nodes of a complex into k clusters.
    Cluster(ClusterArgs),
    /// Write the conductance of every prefix of the spectral ordering.
    Sweep(SweepArgs),
    /// Triangle conductance of one node set.
    Conductance(ConductanceArgs),
    /// Normalized mutual information between two label files.
    Nmi(NmiArgs),
    /// Turn a graph into a complex by filling its 3-cliques.
    Fill(FillArgs),
    /// Write a built-in or generated complex and its planted labels.
    Synth(SynthArgs),
    /// Render a complex and optional cluster labels as GraphViz text.
    ExportDot(ExportDotArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Simplicial,
    Motif,
    Graph,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Simplicial => Method::Simplicial,
            MethodArg::Motif => Method::Motif,
            MethodArg::Graph => Method::Graph,
        }
    }
}

#[derive(Args, Debug)]
struct ClusterArgs {
    /// Complex file (`.scx`).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "simplicial")]
    method: MethodArg,
    /// Number of clusters; 2 uses the sweep cut, more uses k-means on the
    /// spectral embedding.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Seed for k-means.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Assignment CSV (`node,cluster`).
    #[arg(long)]
    output: PathBuf,
    /// Ground-truth labels; prints `nmi=` when given.
    #[arg(long)]
    truth: Option<PathBuf>,
    /// Add faces missing from the input.
    #[arg(long)]
    autoclose: bool,
    /// Scale embedding rows to unit length (k > 2).
    #[arg(long)]
    row_normalize: bool,
    /// Multiply embedding rows by D^{-1/2} (k > 2).
    #[arg(long)]
    degree_scale: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "simplicial")]
    method: MethodArg,
    /// Sweep CSV (`k,node,phi`).
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    autoclose: bool,
}

#[derive(Args, Debug)]
struct ConductanceArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated node ids, e.g. `1,5,7`.
    #[arg(long)]
    set: String,
    #[arg(long)]
    autoclose: bool,
}

#[derive(Args, Debug)]
struct NmiArgs {
    /// Predicted labels (`node,label` or `node,cluster`).
    #[arg(long)]
    pred: PathBuf,
    #[arg(long)]
    truth: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FillMode {
    All,
    None,
}

#[derive(Args, Debug)]
struct FillArgs {
    /// Complex file whose nodes and edges define the graph; triangles in it
    /// are ignored.
    #[arg(long)]
    edges: PathBuf,
    #[arg(long, value_enum)]
    mode: FillMode,
    /// Triangles to leave hollow, one `u v w` per line.
    #[arg(long)]
    remove: Option<PathBuf>,
    /// Leave every 3-clique containing this edge hollow, e.g. `9,31`.
    /// Repeatable.
    #[arg(long, value_name = "U,V")]
    remove_containing_edge: Vec<String>,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SynthKind {
    /// Eight-node two-community complex with a hollow bridge.
    HollowBridge,
    /// Random planted-partition complex.
    Planted,
    /// Zachary karate club with every 3-clique filled.
    Zachary,
}

#[derive(Args, Debug)]
struct SynthArgs {
    #[arg(long, value_enum)]
    kind: SynthKind,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Complex file to write.
    #[arg(long)]
    output: PathBuf,
    /// Planted labels to write.
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Communities (planted).
    #[arg(long, default_value_t = 2)]
    communities: usize,
    /// Nodes per community (planted).
    #[arg(long, default_value_t = 6)]
    size: usize,
    /// Probability of filling each intra-community triangle (planted).
    #[arg(long, default_value_t = 0.8)]
    p_tri: f64,
    /// Probability of each cross-community edge (planted).
    #[arg(long, default_value_t = 0.3)]
    p_inter: f64,
}

#[derive(Args, Debug)]
struct ExportDotArgs {
    #[arg(long)]
    input: PathBuf,
    /// Labels used for node colors.
    #[arg(long)]
    assignment: Option<PathBuf>,
    #[arg(long)]
    output: PathBuf,
    #[arg(long)]
    autoclose: bool,
}

fn configure_threads() -> Result<(), commands::Failure> {
    let Ok(raw) = std::env::var("SCX_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| commands::Failure::Input(format!("SCX_THREADS: `{raw}` is not a count")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| commands::Failure::Internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Cluster(a) => commands::cluster(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Conductance(a) => commands::conductance(a),
        Command::Nmi(a) => commands::nmi(a),
        Command::Fill(a) => commands::fill(a),
        Command::Synth(a) => commands::synth(a),
        Command::ExportDot(a) => commands::export_dot(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
