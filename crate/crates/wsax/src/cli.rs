//! `wsax` subcommands.
//!
//! Exit codes: 0 on success, 1 for bad input (including usage errors),
//! 2 for internal failures.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wsax_core::pso::{self, SwarmConfig};
use wsax_core::{
    evaluate, loo_error, symbolize, train_test_error, train_weights, Protocol, SymbolicDataset,
    SymbolicDistance,
};

use crate::dataset::{parse_dataset, ParseOptions, ParsedDataset};
use crate::error::{Error, Result};
use crate::fsutil;
use crate::model::ModelFile;
use crate::report::{self, BaselineReport, RunReport, TrainReport, REPORT_FORMAT_VERSION};
use crate::symbolic::write_symbolized;

#[derive(Debug, Parser)]
#[command(
    name = "wsax",
    version,
    about = "SAX / weighted-MINDIST time series classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert a dataset to SAX words.
    Symbolize(SymbolizeArgs),
    /// 1-NN error under plain MINDIST.
    Baseline(BaselineArgs),
    /// Learn per-segment WMD weights with particle swarm optimization.
    Train(TrainArgs),
    /// Compare a trained model against MINDIST.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Loo,
    Traintest,
}

impl From<Mode> for Protocol {
    fn from(m: Mode) -> Protocol {
        match m {
            Mode::Loo => Protocol::LeaveOneOut,
            Mode::Traintest => Protocol::TrainTest,
        }
    }
}

#[derive(Debug, Args)]
struct Representation {
    #[arg(long)]
    alphabet: usize,
    #[arg(long)]
    segments: usize,
    /// Drop trailing points so the length is a multiple of --segments.
    #[arg(long)]
    truncate: bool,
}

#[derive(Debug, Args)]
struct SymbolizeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    repr: Representation,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BaselineArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    test: Option<PathBuf>,
    #[command(flatten)]
    repr: Representation,
    #[arg(long, value_enum, default_value = "loo")]
    mode: Mode,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TrainArgs {
    #[arg(long)]
    train: PathBuf,
    #[command(flatten)]
    repr: Representation,
    #[arg(long, default_value_t = pso::DEFAULT_SWARM_SIZE)]
    swarm: usize,
    #[arg(long, default_value_t = pso::DEFAULT_ITERATIONS)]
    iters: usize,
    #[arg(long = "accel-local", default_value_t = pso::DEFAULT_LOCAL_ACCELERATION)]
    accel_local: f64,
    #[arg(long = "accel-global", default_value_t = pso::DEFAULT_GLOBAL_ACCELERATION)]
    accel_global: f64,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u64).range(0..=i64::MAX as u64))]
    seed: u64,
    /// Stop once the training error is at or below this value.
    #[arg(long = "target-error")]
    target_error: Option<f64>,
    /// Do not start one particle at the all-ones (plain MINDIST) weights.
    #[arg(long = "no-corner-seed")]
    no_corner_seed: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    test: PathBuf,
    #[arg(long, value_enum, default_value = "loo")]
    mode: Mode,
    #[arg(long)]
    train: Option<PathBuf>,
    /// Drop trailing points so the length is a multiple of the model's
    /// segment count.
    #[arg(long)]
    truncate: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command) -> Result<()> {
    match cmd {
        Command::Symbolize(a) => run_symbolize(a),
        Command::Baseline(a) => run_baseline(a),
        Command::Train(a) => run_train(a),
        Command::Eval(a) => run_eval(a),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fsutil::write_atomic(path, text),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::io("<stdout>", e)),
    }
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn load(path: &Path, segments: usize, truncate: bool) -> Result<ParsedDataset> {
    let opts = ParseOptions {
        truncate_to_multiple_of: truncate.then_some(segments),
    };
    parse_dataset(path, &opts)
}

fn load_symbolic(
    path: &Path,
    alphabet: usize,
    segments: usize,
    truncate: bool,
) -> Result<(SymbolicDataset, usize)> {
    let parsed = load(path, segments, truncate)?;
    Ok((
        symbolize(&parsed.dataset, alphabet, segments)?,
        parsed.truncated_points,
    ))
}

fn run_symbolize(a: SymbolizeArgs) -> Result<()> {
    let (sd, _) = load_symbolic(&a.input, a.repr.alphabet, a.repr.segments, a.repr.truncate)?;
    emit(a.out.as_deref(), &write_symbolized(&sd))
}

fn run_baseline(a: BaselineArgs) -> Result<()> {
    let started = Instant::now();
    let r = &a.repr;
    let (train, truncated) = load_symbolic(&a.train, r.alphabet, r.segments, r.truncate)?;
    let test = match &a.test {
        Some(p) => Some(load_symbolic(p, r.alphabet, r.segments, r.truncate)?.0),
        None => None,
    };
    let error = match Protocol::from(a.mode) {
        Protocol::LeaveOneOut => {
            loo_error(test.as_ref().unwrap_or(&train), &SymbolicDistance::Mindist)?
        }
        Protocol::TrainTest => {
            let test = test
                .as_ref()
                .ok_or_else(|| Error::Usage("--mode traintest requires --test".into()))?;
            train_test_error(&train, test, &SymbolicDistance::Mindist)?
        }
    };
    let evaluated = a.test.as_deref().unwrap_or(&a.train);
    let report = BaselineReport {
        format_version: REPORT_FORMAT_VERSION,
        dataset: dataset_name(evaluated),
        alphabet_size: train.alphabet_size(),
        segment_count: train.segment_count(),
        original_length: train.original_length(),
        truncated_points: truncated,
        mode: Protocol::from(a.mode).as_str().into(),
        error_mindist: error,
        wall_clock_seconds: started.elapsed().as_secs_f64(),
    };
    emit(a.out.as_deref(), &report::to_text(&report)?)
}

fn run_train(a: TrainArgs) -> Result<()> {
    let started = Instant::now();
    let r = &a.repr;
    let (train, truncated) = load_symbolic(&a.train, r.alphabet, r.segments, r.truncate)?;
    let cfg = SwarmConfig {
        swarm_size: a.swarm,
        iterations: a.iters,
        local_acceleration: a.accel_local,
        global_acceleration: a.accel_global,
        dimension: train.segment_count(),
        lower_bound: 0.0,
        upper_bound: 1.0,
        seed: a.seed,
        seed_corner: !a.no_corner_seed,
        target_fitness: a.target_error,
    };
    log::info!(
        "training on {} series: swarm {}, {} iterations, seed {}",
        train.len(),
        cfg.swarm_size,
        cfg.iterations,
        cfg.seed
    );
    let model = train_weights(&train, &cfg)?;
    log::info!(
        "train error {} after {} evaluations",
        model.train_error,
        model.evaluations
    );
    ModelFile::from_model(&model).save(&a.out)?;
    let report = TrainReport {
        format_version: REPORT_FORMAT_VERSION,
        dataset: dataset_name(&a.train),
        alphabet_size: model.alphabet_size,
        segment_count: model.segment_count,
        original_length: model.original_length,
        truncated_points: truncated,
        train_error_mindist: loo_error(&train, &SymbolicDistance::Mindist)?,
        train_error_wmd: model.train_error,
        evaluations: model.evaluations,
        seed: a.seed,
        generator: pso::GENERATOR.into(),
        model: a.out.display().to_string(),
        wall_clock_seconds: started.elapsed().as_secs_f64(),
    };
    emit(None, &report::to_text(&report)?)
}

fn run_eval(a: EvalArgs) -> Result<()> {
    let started = Instant::now();
    let model = ModelFile::load(&a.model)?.to_model()?;
    let (a_size, n_seg) = (model.alphabet_size, model.segment_count);
    let (test, truncated) = load_symbolic(&a.test, a_size, n_seg, a.truncate)?;
    let mode = Protocol::from(a.mode);
    let train = match (&a.train, mode) {
        (Some(p), Protocol::TrainTest) => Some(load_symbolic(p, a_size, n_seg, a.truncate)?.0),
        (None, Protocol::TrainTest) => {
            return Err(Error::Usage("--mode traintest requires --train".into()))
        }
        _ => None,
    };
    let e = evaluate(&model, &test, mode, train.as_ref())?;
    let report = RunReport {
        format_version: REPORT_FORMAT_VERSION,
        dataset: dataset_name(&a.test),
        alphabet_size: a_size,
        segment_count: n_seg,
        original_length: model.original_length,
        truncated_points: truncated,
        mode: mode.as_str().into(),
        error_mindist: e.error_mindist,
        error_wmd: e.error_wmd,
        seed: model.config.seed,
        generator: pso::GENERATOR.into(),
        wall_clock_seconds: started.elapsed().as_secs_f64(),
    };
    emit(a.out.as_deref(), &report::to_text(&report)?)
}
