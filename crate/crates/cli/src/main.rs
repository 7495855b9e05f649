use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qmono::measures::RoofConfig;
use qmono::LhsMode;
use qmono_cli::csv::write_text;
use qmono_cli::{CliError, ComputeArgs, Family, Measure, RunConfig};

/// Entanglement measures and weighted monogamy checks for qubit W-class states.
#[derive(Parser)]
#[command(name = "qmono", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one measure on a state file.
    Compute(ComputeCli),
    /// CSV of the four-qubit W-state curve and its concurrence bounds.
    Fig1(RunArgs),
    /// CSV of the five-qubit W-state curve and its negativity bounds.
    Fig2(RunArgs),
    /// Randomized sweep of the monogamy bounds over sampled W-class states.
    Verify(RunArgs),
    /// Compare closed forms against the convex-roof optimizer.
    OracleCheck(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Analytic,
    Oracle,
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Concurrence,
    Negativity,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Concurrence,
    Negativity,
    ConcurrenceAssist,
    Cren,
    Crenoa,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of sampled instances.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    x_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    x_max: f64,
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    x_step: f64,
    /// Explicit comma-separated exponents; overrides the x-min/x-max grid.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    x_values: Option<Vec<f64>>,
    /// Random starts per roof optimization.
    #[arg(long, default_value_t = 200)]
    restarts: usize,
    /// Rotation sweeps per restart.
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
    /// Comma-separated register sizes.
    #[arg(long, value_delimiter = ',', default_value = "4,5,6")]
    qubits: Vec<usize>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "chain")]
    lhs_mode: ModeArg,
    #[arg(long, value_enum, default_value = "both")]
    family: FamilyArg,
    /// Four-qubit instances additionally checked with the roof oracle.
    #[arg(long, default_value_t = 20)]
    oracle_samples: usize,
    /// Oracle deviation tolerance (default 1e-3).
    #[arg(long)]
    tolerance: Option<f64>,
    /// Margins below minus this value are violations.
    #[arg(long, default_value_t = qmono::monogamy::MARGIN_TOL)]
    margin_tol: f64,
    /// Use the symmetric W state instead of sampled coefficients.
    #[arg(long)]
    uniform_w: bool,
    /// One CSV row per subset, bound and exponent.
    #[arg(long)]
    full: bool,
}

impl RunArgs {
    fn into_config(self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            samples: self.samples,
            x_min: self.x_min,
            x_max: self.x_max,
            x_step: self.x_step,
            x_values: self.x_values,
            restarts: self.restarts,
            max_iters: self.max_iters,
            qubits: self.qubits,
            out: self.out,
            lhs_mode: match self.lhs_mode {
                ModeArg::Analytic => LhsMode::Analytic,
                ModeArg::Oracle => LhsMode::Oracle,
                ModeArg::Chain => LhsMode::Chain,
            },
            family: match self.family {
                FamilyArg::Concurrence => Family::Concurrence,
                FamilyArg::Negativity => Family::Negativity,
                FamilyArg::Both => Family::Both,
            },
            oracle_samples: self.oracle_samples,
            tolerance: self.tolerance,
            margin_tol: self.margin_tol,
            uniform_w: self.uniform_w,
            full: self.full,
        }
    }
}

#[derive(Args)]
struct ComputeCli {
    /// State file: `qubits <n>` then one `<index> <re> <im>` line per amplitude.
    state: PathBuf,
    #[arg(long, value_enum, default_value = "concurrence")]
    measure: MeasureArg,
    /// Comma-separated qubits forming side A.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    split: Vec<usize>,
    /// Reduce to these qubits first; the split then indexes the reduced register.
    #[arg(long, value_delimiter = ',')]
    keep: Option<Vec<usize>>,
    #[arg(long, default_value_t = 200)]
    restarts: usize,
    #[arg(long, default_value_t = 2000)]
    max_iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the optimal decomposition after the value.
    #[arg(long)]
    ensemble: bool,
}

/// Writes to `--out` when given, otherwise to standard output.
fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_text(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

/// `Ok(true)` when the command's checks passed.
fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Compute(c) => {
            if c.restarts == 0 || c.max_iters == 0 {
                return Err(CliError::Usage("restarts and max-iters must be at least 1".into()));
            }
            let args = ComputeArgs {
                state: c.state,
                measure: match c.measure {
                    MeasureArg::Concurrence => Measure::Concurrence,
                    MeasureArg::Negativity => Measure::Negativity,
                    MeasureArg::ConcurrenceAssist => Measure::ConcurrenceAssist,
                    MeasureArg::Cren => Measure::Cren,
                    MeasureArg::Crenoa => Measure::Crenoa,
                },
                split: c.split,
                keep: c.keep,
                roof: RoofConfig {
                    restarts: c.restarts,
                    max_iters: c.max_iters,
                    rng_seed: c.seed,
                    ..RoofConfig::default()
                },
                show_ensemble: c.ensemble,
            };
            print!("{}", qmono_cli::run_compute(&args)?);
            Ok(true)
        }
        Command::Fig1(a) => figure(a.into_config(), qmono_cli::fig1),
        Command::Fig2(a) => figure(a.into_config(), qmono_cli::fig2),
        Command::Verify(a) => {
            let cfg = a.into_config();
            let summary = qmono_cli::run_verify(&cfg)?;
            if cfg.out.is_some() {
                emit(&cfg.out, &summary.render_csv(cfg.full))?;
            }
            eprint!("{}", summary.render_summary());
            Ok(summary.passed())
        }
        Command::OracleCheck(a) => {
            let cfg = a.into_config();
            let report = qmono_cli::run_oracle_check(&cfg)?;
            print!("{}", report.render());
            Ok(report.passed())
        }
    }
}

fn figure(
    cfg: RunConfig,
    f: fn(&RunConfig) -> Result<qmono_cli::FigureReport, CliError>,
) -> Result<bool, CliError> {
    let report = f(&cfg)?;
    emit(&cfg.out, &report.curve.render())?;
    for v in &report.violations {
        eprintln!("ordering violated: {v}");
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
