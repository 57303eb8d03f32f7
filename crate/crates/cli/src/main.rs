//! `grover`: exact periodicity analysis of Grover walks on graphs.

mod input;
mod report;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grover_core::census::{self, CensusOptions, CensusReport, DEFAULT_SUBDIVISION_CAP};
use grover_core::graph::{encode_graph6, format_edge_list};
use grover_core::grover::{GroverError, GroverOperator};
use grover_core::periodicity::{detect_period, oracle_period, DEFAULT_ORACLE_CAP};
use grover_core::walk::{empirical_period, evolve, EmpiricalOutcome, StateVector};
use grover_core::Execution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use input::{read_graph, InputFormat};
use report::{arc_labels, matrix_csv, to_json, AnalysisReport, MatrixDump, Timing};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("input rejected: {0}")]
    Input(String),
    #[error("internal failure: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<GroverError> for CliError {
    fn from(e: GroverError) -> Self {
        CliError::Internal(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "grover",
    version,
    about = "Periodicity of Grover walks on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide periodicity of one graph and print a JSON report.
    Analyze(AnalyzeArgs),
    /// Classify every connected graph up to a vertex count, or a graph6 stream.
    Census(CensusArgs),
    /// Run the floating-point walk from a random state.
    Simulate(SimulateArgs),
    /// Dump U or T with exact `p/q` entries.
    Matrix(MatrixArgs),
    /// Print the subdivision of a graph.
    Subdivide(SubdivideArgs),
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    format: InputFormat,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Largest power checked by the independent oracle; 0 disables it.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: u64,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct CensusArgs {
    /// Enumerate connected graphs on 2..=N vertices.
    #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(2..=7))]
    max_n: u64,
    /// Classify graph6 lines from stdin instead of enumerating.
    #[arg(long)]
    graph6_stdin: bool,
    /// Worker threads; 1 runs sequentially. Defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a `period,count,representative` summary.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long, default_value_t = 64)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random states used for the empirical return check.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    /// Write per-step arc probabilities here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "U")]
    U,
    #[value(name = "T")]
    T,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long, value_enum, default_value_t = Which::U)]
    which: Which,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SubdivideArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    emit: InputFormat,
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
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("grover: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Analyze(args) => analyze(args),
        Command::Census(args) => census(args),
        Command::Simulate(args) => simulate(args),
        Command::Matrix(args) => matrix(args),
        Command::Subdivide(args) => subdivide(args),
    }
}

fn emit_stdout(text: &str) -> Result<(), CliError> {
    io::stdout()
        .lock()
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("writing stdout: {e}")))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::Usage(format!("creating {}: {e}", path.display())))
}

fn write_err(path: &Path) -> impl Fn(io::Error) -> CliError + '_ {
    move |e| CliError::Usage(format!("writing {}: {e}", path.display()))
}

fn analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.graph.input, args.graph.format)?;
    let op = GroverOperator::new(graph);

    let started = Instant::now();
    let result = detect_period(&op)?;
    let charpoly_ms = started.elapsed().as_secs_f64() * 1e3;

    let started = Instant::now();
    let oracle =
        (args.oracle_cap > 0).then(|| (args.oracle_cap, oracle_period(&op, args.oracle_cap)));
    let oracle_ms = started.elapsed().as_secs_f64() * 1e3;

    let mut report = AnalysisReport::new(&op, &result, oracle);
    if args.timing {
        report.timing = Some(Timing {
            charpoly_ms,
            oracle_ms,
        });
    }
    emit_stdout(&to_json(&report))?;
    if report.oracle.as_ref().is_some_and(|o| !o.agrees) {
        return Err(CliError::Internal(
            "oracle disagrees with the exact period".into(),
        ));
    }
    Ok(())
}

fn census(args: CensusArgs) -> Result<(), CliError> {
    let exec = match args.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(j) => Execution::with_jobs(j),
        None => Execution::default(),
    };
    let options = CensusOptions {
        exec,
        oracle_cap: args.oracle_cap,
        subdivision_cap: DEFAULT_SUBDIVISION_CAP,
    };
    let report: CensusReport = if args.graph6_stdin {
        let ingest = census::ingest_graph6_stream(BufReader::new(io::stdin().lock()))
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        let mut report = census::classify_all(&ingest.graphs, &options);
        report.input_errors = ingest.errors;
        report.verdicts = census::verify_theorems(&report, &options);
        report
    } else {
        census::run_census(args.max_n as usize, &options)
            .map_err(|e| CliError::Usage(e.to_string()))?
    };

    let json = to_json(&report);
    match &args.out {
        Some(path) => {
            let mut out = create(path)?;
            out.write_all(json.as_bytes())
                .and_then(|_| out.flush())
                .map_err(write_err(path))?;
        }
        None => emit_stdout(&json)?,
    }
    if let Some(path) = &args.csv {
        let mut out = create(path)?;
        report
            .write_csv_summary(&mut out)
            .and_then(|_| out.flush())
            .map_err(write_err(path))?;
    }

    if !report.oracle_disagreements.is_empty() || !report.failures.is_empty() {
        return Err(CliError::Internal(format!(
            "{} oracle disagreements, {} classification failures",
            report.oracle_disagreements.len(),
            report.failures.len()
        )));
    }
    if !report.all_verdicts_pass() {
        return Err(CliError::Internal("a census verdict failed".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct SimulationSummary {
    arcs: usize,
    steps: usize,
    seed: u64,
    trials: u64,
    max_norm_drift: f64,
    /// Smallest step at which every trial state returned, if any.
    empirical_period: Option<u64>,
    final_probabilities: Vec<f64>,
}

fn simulate(args: SimulateArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.graph.input, args.graph.format)?;
    let op = GroverOperator::new(graph);
    let arcs = op.graph().arc_count();

    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let run = evolve(&op, StateVector::random(arcs, &mut rng), args.steps)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let empirical = match empirical_period(
        &op,
        args.trials as usize,
        args.steps as u64,
        args.seed,
        Execution::Sequential,
    ) {
        EmpiricalOutcome::Periodic(k) => Some(k),
        EmpiricalOutcome::Unknown => None,
    };
    if let Some(path) = &args.csv {
        let mut out = create(path)?;
        run.write_csv(op.graph(), &mut out)
            .and_then(|_| out.flush())
            .map_err(write_err(path))?;
    }
    let summary = SimulationSummary {
        arcs,
        steps: args.steps,
        seed: args.seed,
        trials: args.trials,
        max_norm_drift: run.max_norm_drift(),
        empirical_period: empirical,
        final_probabilities: run.states.last().expect("initial state").probabilities(),
    };
    emit_stdout(&to_json(&summary))
}

fn matrix(args: MatrixArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.graph.input, args.graph.format)?;
    let op = GroverOperator::new(graph);
    let (name, m, labels) = match args.which {
        Which::U => ("U", op.u(), arc_labels(op.graph())),
        Which::T => (
            "T",
            op.t(),
            (0..op.graph().vertex_count())
                .map(|v| v.to_string())
                .collect(),
        ),
    };
    if args.json {
        emit_stdout(&to_json(&MatrixDump::new(name, m, labels)))
    } else {
        emit_stdout(&matrix_csv(m))
    }
}

fn subdivide(args: SubdivideArgs) -> Result<(), CliError> {
    let graph = read_graph(&args.graph.input, args.graph.format)?;
    let sub = graph.subdivide();
    let text = match args.emit {
        InputFormat::Edgelist => format_edge_list(&sub),
        InputFormat::Graph6 => format!("{}\n", encode_graph6(&sub)),
    };
    emit_stdout(&text)
}
