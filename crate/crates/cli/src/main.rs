mod report;
mod state_file;

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qubit_plt::harness::run_selftest;
use qubit_plt::{analyze, compare_batch, sweep, Ensemble, Error, Family, RngSeed, SweepRow, Tolerances};

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;
const EXIT_CLAIM: u8 = 4;

/// An error paired with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        Self { code: EXIT_INVALID, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_INVALID };
        Self { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "qubit-plt", version, about = "Two-qubit entanglement tests: PLT, PPT, realignment and concurrence")]
struct Cli {
    #[command(flatten)]
    tol: TolFlags,

    /// Emit JSON instead of text where supported.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TolFlags {
    /// Relative half-width of the boundary band.
    #[arg(long, global = true, value_parser = positive)]
    eps_boundary: Option<f64>,
    /// Relative bound on discarded imaginary parts of B's eigenvalues.
    #[arg(long, global = true, value_parser = positive)]
    eps_imag: Option<f64>,
    /// Relative bound on negative real parts of B's eigenvalues clamped to zero.
    #[arg(long, global = true, value_parser = positive)]
    eps_neg: Option<f64>,
}

impl TolFlags {
    fn tolerances(&self) -> Tolerances<f64> {
        let mut cfg = Tolerances::default();
        if let Some(x) = self.eps_boundary {
            cfg.boundary = x;
        }
        if let Some(x) = self.eps_imag {
            cfg.imag = x;
        }
        if let Some(x) = self.eps_neg {
            cfg.neg = x;
        }
        cfg
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(format!("must be a positive finite number, got {s}"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every criterion on a state read from a JSON file.
    Analyze {
        /// JSON file with 4x4 "re" and "im" arrays and an optional "label".
        path: PathBuf,
    },
    /// Tabulate all criteria over a one-parameter family as CSV.
    Sweep(SweepArgs),
    /// Compare PLT against PPT on a batch of random states.
    Random(RandomArgs),
    /// Run the closed-form regression checks.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Werner,
    Rudolph,
    #[value(name = "singlet_polarized")]
    SingletPolarized,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long, allow_hyphen_values = true)]
    lo: f64,
    #[arg(long, allow_hyphen_values = true)]
    hi: f64,
    #[arg(long, default_value_t = 101)]
    steps: usize,
    /// r for the rudolph family.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
    /// s for the rudolph family.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<f64>,
    /// Output file; CSV goes to standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnsembleName {
    Ginibre,
    Separable,
    Pure,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, value_enum, default_value = "ginibre")]
    ensemble: EnsembleName,
    /// Number of states [default: 100000, or 10000 for pure].
    #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Product states per separable mixture.
    #[arg(long, default_value_t = Ensemble::DEFAULT_SEPARABLE_TERMS as u8, value_parser = clap::value_parser!(u8).range(1..=16))]
    terms: u8,
}

fn cmd_analyze(path: &Path, cfg: &Tolerances<f64>, json: bool) -> Result<(), Failure> {
    let file = state_file::load(path, cfg)?;
    let r = analyze(&file.rho, cfg)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report::analysis_json(file.label.as_deref(), &r)).unwrap());
    } else {
        report::analysis_text(file.label.as_deref(), &r);
    }
    Ok(())
}

fn write_csv<W: Write>(out: W, rows: &[SweepRow<f64>]) -> Result<(), Failure> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let io_err = |e: csv::Error| Failure::usage(format!("cannot write CSV: {e}"));
    w.write_record(report::CSV_HEADER).map_err(io_err)?;
    for row in rows {
        w.write_record(report::csv_record(row)).map_err(io_err)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_sweep(args: &SweepArgs, cfg: &Tolerances<f64>) -> Result<(), Failure> {
    let family = match args.family {
        FamilyName::Werner => Family::Werner,
        FamilyName::SingletPolarized => Family::SingletPolarized,
        FamilyName::Rudolph => match (args.r, args.s) {
            (Some(r), Some(s)) => Family::Rudolph { r, s },
            _ => return Err(Failure::usage("--family rudolph requires --r and --s")),
        },
    };
    if args.steps < 2 {
        return Err(Failure::usage(format!("--steps must be at least 2, got {}", args.steps)));
    }
    let rows = sweep(family, args.lo, args.hi, args.steps, cfg)?;

    let summary: Vec<String> = std::iter::once(format!("{} rows for {family} on [{}, {}]", rows.len(), args.lo, args.hi))
        .chain(rows.windows(2).filter(|w| w[0].plt_verdict != w[1].plt_verdict).map(|w| {
            format!(
                "PLT verdict changes from {} to {} between {} and {}",
                w[0].plt_verdict, w[1].plt_verdict, w[0].param, w[1].param
            )
        }))
        .collect();

    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::usage(format!("cannot create {}: {e}", path.display())))?;
            write_csv(io::BufWriter::new(file), &rows)?;
            println!("wrote {}", path.display());
            for line in summary {
                println!("{line}");
            }
        }
        None => {
            write_csv(io::stdout().lock(), &rows)?;
            for line in summary {
                eprintln!("{line}");
            }
        }
    }
    Ok(())
}

fn cmd_random(args: &RandomArgs, cfg: &Tolerances<f64>, json: bool) -> Result<(), Failure> {
    let ensemble = match args.ensemble {
        EnsembleName::Ginibre => Ensemble::Ginibre,
        EnsembleName::Separable => Ensemble::Separable { k: usize::from(args.terms) },
        EnsembleName::Pure => Ensemble::Pure,
    };
    let n = args.n.unwrap_or(match ensemble {
        Ensemble::Pure => 10_000,
        _ => 100_000,
    });
    let stats = compare_batch(ensemble, n, RngSeed(args.seed), cfg)?;
    let doc = serde_json::to_string_pretty(&report::stats_json(&stats)).unwrap();
    if json {
        println!("{doc}");
    } else {
        report::stats_text(&stats);
        println!("{doc}");
    }
    if stats.claims_hold() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_CLAIM,
            message: format!(
                "{} disagreements and {} positivity violations",
                stats.disagree, stats.positivity_violations
            ),
        })
    }
}

fn cmd_selftest(json: bool) -> Result<(), Failure> {
    let results = run_selftest();
    let failed = results.iter().filter(|r| !r.passed).count();
    if json {
        let doc: Vec<_> = results
            .iter()
            .map(|r| serde_json::json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
            .collect();
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        for r in &results {
            println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
        }
        println!("{} of {} checks passed", results.len() - failed, results.len());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure { code: EXIT_CLAIM, message: format!("{failed} checks failed") })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let cfg = cli.tol.tolerances();
    let outcome = match &cli.command {
        Command::Analyze { path } => cmd_analyze(path, &cfg, cli.json),
        Command::Sweep(args) => cmd_sweep(args, &cfg),
        Command::Random(args) => cmd_random(args, &cfg, cli.json),
        Command::Selftest => cmd_selftest(cli.json),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
