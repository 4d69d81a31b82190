use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use triloc::cli::{self, exit_code, FigurePreset, OutputFormat, ValidateOptions};
use triloc::dynamics::{tau_grid, MetricSet, SweepSpec, ZenoSchedule};
use triloc::nonlocality::{Matricization, OptimizerConfig};
use triloc::{Error, StateFamily};

#[derive(Parser)]
#[command(name = "triloc", version, about = "Tripartite nonlocality and entanglement of three-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All metrics for one state, as JSON on stdout.
    Compute {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        opt: OptimizerArgs,
    },
    /// Free evolution of the W state in a Lorentzian reservoir.
    Dynamics(SweepArgs),
    /// Evolution under repeated nonselective measurement.
    Zeno {
        /// Measurement interval λT.
        #[arg(long)]
        measure_interval: f64,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Regenerate a preset: fig1..fig5 or table1.
    Figure {
        name: String,
        #[arg(long, default_value = "out")]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        opt: OptimizerArgs,
    },
    /// Run the golden suite; exit 1 on any failure.
    Validate {
        #[command(flatten)]
        opt: OptimizerArgs,
        /// Use the third-party matricization for the bound (negative control).
        #[arg(long, hide = true)]
        perturb_bound: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    W,
    Ghz,
    Ground,
    Custom,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct StateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Mixing weight of the GHZ-class state.
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// Radians or a multiple of pi such as `pi/3`.
    #[arg(long, default_value = "pi/4", value_parser = angle)]
    theta: f64,
    #[arg(long, default_value = "pi/2", value_parser = angle)]
    theta3: f64,
    /// JSON density matrix with fields dim, re, im.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl StateArgs {
    fn family(&self) -> Result<StateFamily, Error> {
        Ok(match self.family {
            Family::W => StateFamily::W,
            Family::Ground => StateFamily::Ground,
            Family::Ghz => StateFamily::GhzClass {
                p: self.p,
                theta: self.theta,
                theta3: self.theta3,
            },
            Family::Custom => StateFamily::Custom {
                file: self
                    .file
                    .clone()
                    .ok_or_else(|| Error::InvalidConfig("--family custom needs --file".into()))?,
            },
        })
    }
}

#[derive(Args)]
struct OptimizerArgs {
    #[arg(long, default_value_t = OptimizerConfig::default().starts)]
    starts: usize,
    #[arg(long, default_value_t = OptimizerConfig::default().tol)]
    tol: f64,
    #[arg(long, default_value_t = OptimizerConfig::default().seed)]
    seed: u64,
}

impl OptimizerArgs {
    fn config(&self) -> OptimizerConfig {
        OptimizerConfig {
            starts: self.starts,
            tol: self.tol,
            seed: self.seed,
            ..OptimizerConfig::default()
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Coupling ratios R, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "20")]
    r: Vec<f64>,
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    #[arg(long, default_value_t = 2.0)]
    tau_max: f64,
    #[arg(long, default_value_t = 200)]
    steps: usize,
    /// Comma-separated subset of svetlichny, chsh, pi_tangle, survival, or all.
    #[arg(long, default_value = "all")]
    metrics: String,
    #[arg(long, default_value = "out")]
    output: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Base name of the output files.
    #[arg(long)]
    name: Option<String>,
    #[command(flatten)]
    opt: OptimizerArgs,
}

impl SweepArgs {
    fn run(&self, schedule: ZenoSchedule, default_name: &str) -> Result<(), Error> {
        let spec = SweepSpec {
            r_values: self.r.clone(),
            taus: tau_grid(self.tau_max, self.steps)?,
            delta: self.delta,
            schedule,
            metrics: self.metrics.parse::<MetricSet>()?,
            optimizer: self.opt.config(),
        };
        let name = self.name.as_deref().unwrap_or(default_name);
        let (rows, files) = cli::run_sweep_to_dir(name, &spec, &self.output, self.format.into())?;
        let errors = rows.iter().filter(|r| r.error.is_some()).count();
        for f in files {
            println!("{}", f.display());
        }
        if errors > 0 {
            log::warn!("{errors} of {} rows failed; see the error column", rows.len());
        }
        Ok(())
    }
}

fn angle(s: &str) -> Result<f64, String> {
    cli::parse_angle(s).map_err(|e| e.to_string())
}

fn configure_threads() {
    let Ok(value) = std::env::var("TRILOC_THREADS") else {
        return;
    };
    match value.parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                log::warn!("could not size the thread pool: {e}");
            }
        }
        _ => log::warn!("ignoring TRILOC_THREADS={value}: expected a positive integer"),
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Compute { state, opt } => {
            let report = cli::compute(&state.family()?, &opt.config())?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Dynamics(sweep) => sweep.run(ZenoSchedule::free(), "dynamics")?,
        Command::Zeno {
            measure_interval,
            sweep,
        } => sweep.run(ZenoSchedule::every(measure_interval)?, "zeno")?,
        Command::Figure {
            name,
            output,
            format,
            opt,
        } => {
            let preset: FigurePreset = name.parse()?;
            for f in cli::run_figure(preset, &output, format.into(), &opt.config())? {
                println!("{}", f.display());
            }
        }
        Command::Validate { opt, perturb_bound } => {
            let opts = ValidateOptions {
                optimizer: opt.config(),
                matricization: if perturb_bound {
                    Matricization::ThirdParty
                } else {
                    Matricization::FirstParty
                },
            };
            let summary = cli::validate(&opts)?;
            println!("{}", serde_json::to_string_pretty(&summary)?);
            if !summary.passed {
                for c in summary.failures() {
                    eprintln!(
                        "FAIL {}: expected {} ± {}, got {}",
                        c.name, c.expected, c.tolerance, c.actual
                    );
                }
                return Ok(exit_code::VALIDATION_FAILED);
            }
        }
    }
    Ok(exit_code::OK)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    configure_threads();
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            cli::exit_code_for(&e)
        }
    };
    ExitCode::from(code as u8)
}
