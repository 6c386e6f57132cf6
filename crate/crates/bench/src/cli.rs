//! Command-line front end.

use std::fs;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use neatsort_core::generators::{generate_keys, verify, Family, GeneratorSpec};
use neatsort_core::metrics::metric_report;
use neatsort_core::{Element, MergeMode, MergePolicy};

use crate::record::{summary_path, write_csv, write_csv_file};
use crate::suite::{run_suite, BenchConfig, Trials};
use crate::{Algorithm, BenchError};

const TRIALS_HELP: &str = "\
Trials per size: a positive integer, or `auto` for

  n up to 102,400        101
  n up to 409,600        501
  n up to 819,200        251
  n up to 1,638,400      101
  n up to 3,276,800       51
  larger                  31";

#[derive(Debug, Parser)]
#[command(name = "neatsort", version, about = "NeatSort benchmarks, sorting and presortedness metrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Time algorithms over generated inputs and write trial and summary CSVs.
    Bench(BenchArgs),
    /// Sort a file of newline-separated integers.
    Sort(SortArgs),
    /// Print presortedness metrics of a file of newline-separated integers.
    Metrics(MetricsArgs),
    /// Write one generated permutation as newline-separated integers.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
pub struct PolicyArgs {
    /// Merge parameter for the triple-p mode, in [1, 2].
    #[arg(long, default_value_t = MergePolicy::DEFAULT_P)]
    pub p: f64,
    /// adjacent-pairs, leftmost-always, leave-out-longest or triple-p.
    #[arg(long, default_value = "triple-p", value_parser = parse_mode)]
    pub mode: MergeMode,
}

impl PolicyArgs {
    fn policy(&self) -> Result<MergePolicy, BenchError> {
        Ok(MergePolicy::new(self.mode, self.p)?)
    }
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    /// Input family.
    #[arg(long, value_parser = parse_family, required_unless_present = "spec")]
    pub family: Option<Family>,
    /// Target disorder for the percentage families.
    #[arg(long, conflicts_with = "spec")]
    pub pct: Option<f64>,
    /// Base seed; trial k of a bench run uses seed + k.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON file holding a generator spec (family, n, target_pct, seed).
    #[arg(long, conflicts_with = "family")]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated algorithms.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "neatsort,mergesort,quicksort,introsort,melsort"
    )]
    pub algos: Vec<Algorithm>,
    /// Comma-separated input sizes.
    #[arg(long, value_delimiter = ',', required_unless_present = "spec")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value = "auto", value_parser = parse_trials, long_help = TRIALS_HELP)]
    pub trials: Trials,
    /// Reference algorithm for the relative performance column.
    #[arg(long, default_value = "introsort")]
    pub baseline: Algorithm,
    /// Trial CSV path; the summary goes next to it as *_summary.csv. Without
    /// it the summary is printed to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub input: SpecArgs,
    #[command(flatten)]
    pub policy: PolicyArgs,
}

#[derive(Debug, Args)]
pub struct SortArgs {
    #[arg(long, default_value = "neatsort")]
    pub algo: Algorithm,
    /// Input file, or `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Pivot seed for quicksort.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub policy: PolicyArgs,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    /// Input file, or `-` for stdin.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, required_unless_present = "spec", conflicts_with = "spec")]
    pub n: Option<usize>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub input: SpecArgs,
}

fn parse_mode(s: &str) -> Result<MergeMode, String> {
    match s {
        "adjacent-pairs" => Ok(MergeMode::AdjacentPairs),
        "leftmost-always" => Ok(MergeMode::LeftmostAlways),
        "leave-out-longest" => Ok(MergeMode::LeaveOutLongest),
        "triple-p" => Ok(MergeMode::TripleP),
        _ => Err(format!(
            "unknown mode {s:?} (expected adjacent-pairs, leftmost-always, leave-out-longest or triple-p)"
        )),
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family {s:?} (expected one of {})", names.join(", "))
    })
}

fn parse_trials(s: &str) -> Result<Trials, String> {
    if s == "auto" {
        return Ok(Trials::Auto);
    }
    match s.parse::<usize>() {
        Ok(t) if t >= 1 => Ok(Trials::Fixed(t)),
        _ => Err(format!("expected `auto` or a positive integer, got {s:?}")),
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> BenchError + '_ {
    move |source| BenchError::Io {
        path: path.to_owned(),
        source,
    }
}

fn read_spec(path: &Path) -> Result<GeneratorSpec, BenchError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    Ok(serde_json::from_str(&text)?)
}

fn open_input(path: &Path) -> Result<Box<dyn BufRead>, BenchError> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = fs::File::open(path).map_err(io_err(path))?;
    Ok(Box::new(BufReader::new(file)))
}

/// Reads one integer per line; blank lines are skipped.
pub fn read_integers<R: Read>(reader: R, path: &Path) -> Result<Vec<i64>, BenchError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line.map_err(io_err(path))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let v = t.parse().map_err(|e| BenchError::Parse {
            path: path.to_owned(),
            line: i + 1,
            msg: format!("{t:?}: {e}"),
        })?;
        out.push(v);
    }
    Ok(out)
}

fn write_integers<W: Write, I: IntoIterator<Item = T>, T: std::fmt::Display>(
    mut w: W,
    values: I,
) -> io::Result<()> {
    for v in values {
        writeln!(w, "{v}")?;
    }
    w.flush()
}

fn with_output<F>(out: Option<&Path>, stdout: &mut dyn Write, body: F) -> Result<(), BenchError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match out {
        Some(path) => {
            let file = fs::File::create(path).map_err(io_err(path))?;
            body(&mut BufWriter::new(file)).map_err(io_err(path))
        }
        None => body(stdout).map_err(io_err(Path::new("<stdout>"))),
    }
}

/// Executes a parsed command line, writing primary output to `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), BenchError> {
    match cli.command {
        Command::Bench(args) => bench(args, stdout),
        Command::Sort(args) => sort(args, stdout),
        Command::Metrics(args) => metrics(args, stdout),
        Command::Generate(args) => generate(args, stdout),
    }
}

fn bench(args: BenchArgs, stdout: &mut dyn Write) -> Result<(), BenchError> {
    let (family, target_pct, seed, sizes) = match &args.input.spec {
        Some(path) => {
            let spec = read_spec(path)?;
            let mut sizes = args.sizes.clone();
            if sizes.is_empty() {
                sizes.push(spec.n);
            }
            (spec.family, spec.target_pct, spec.seed, sizes)
        }
        None => (
            args.input.family.expect("clap enforces --family"),
            args.input.pct,
            args.input.seed,
            args.sizes.clone(),
        ),
    };
    let mut config = BenchConfig::new(args.algos, sizes, family);
    config.target_pct = target_pct;
    config.seed = seed;
    config.trials = args.trials;
    config.policy = args.policy.policy()?;
    config.baseline = args.baseline;
    config.out = args.out;

    let output = run_suite(&config)?;
    match &config.out {
        Some(path) => {
            write_csv_file(path, &output.trials)?;
            let summary = summary_path(path);
            write_csv_file(&summary, &output.summaries)?;
            eprintln!(
                "wrote {} trials to {} and {} summaries to {}",
                output.trials.len(),
                path.display(),
                output.summaries.len(),
                summary.display()
            );
        }
        None => write_csv(stdout, &output.summaries)?,
    }
    Ok(())
}

fn sort(args: SortArgs, stdout: &mut dyn Write) -> Result<(), BenchError> {
    let policy = args.policy.policy()?;
    let keys = read_integers(open_input(&args.input)?, &args.input)?;
    let mut buf = Element::tagged(&keys);
    let stats = args.algo.run(&mut buf, &policy, args.seed);
    if buf.windows(2).any(|w| w[0].key > w[1].key) {
        return Err(BenchError::Unsorted {
            algo: args.algo.name(),
            seed: args.seed,
            spec: None,
        });
    }
    with_output(args.out.as_deref(), stdout, |w| {
        write_integers(w, buf.iter().map(|e| e.key))
    })?;
    eprintln!(
        "comparisons={} moves={} runs_detected={} merge_passes={} aux_peak={}",
        stats.comparisons, stats.moves, stats.runs_detected, stats.merge_passes, stats.aux_peak
    );
    Ok(())
}

fn metrics(args: MetricsArgs, stdout: &mut dyn Write) -> Result<(), BenchError> {
    let keys = read_integers(open_input(&args.input)?, &args.input)?;
    let report = metric_report(&keys);
    with_output(None, stdout, |w| {
        writeln!(w, "n={}", keys.len())?;
        for (name, value) in report.fields() {
            writeln!(w, "{name}={value}")?;
        }
        w.flush()
    })
}

fn generate(args: GenerateArgs, stdout: &mut dyn Write) -> Result<(), BenchError> {
    let spec = match &args.input.spec {
        Some(path) => read_spec(path)?,
        None => GeneratorSpec::new(
            args.input.family.expect("clap enforces --family"),
            args.n.expect("clap enforces --n"),
            args.input.pct,
            args.input.seed,
        ),
    };
    let keys = generate_keys(&spec)?;
    let achieved = verify(&keys);
    with_output(args.out.as_deref(), stdout, |w| write_integers(w, keys.iter()))?;
    eprintln!(
        "inv_pct={:.3} runs_pct={:.3} maxdist_pct={:.3}",
        achieved.inv_pct, achieved.runs_pct, achieved.maxdist_pct
    );
    Ok(())
}
