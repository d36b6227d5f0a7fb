//! `radprop`: evaluate Γ, plate RCS and received-power models, and run
//! the multi-lane radar success-probability simulation. Every table is CSV;
//! every CSV file gets a `<file>.manifest.json` that can replay it.

mod commands;
mod manifest;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use radprop::config::{ModelChoice, Settings};
use radprop::netsim::SwerlingKind;

use crate::commands::RcsSweep;
use crate::manifest::{with_output, RunManifest};

/// Invalid command-line usage; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Debug, Parser)]
#[command(
    name = "radprop",
    version,
    about = "Electromagnetism-based radar propagation models"
)]
struct Cli {
    /// Worker threads for simulations and quadrature (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Γ(x) on a log-spaced grid, with its modulus approximation.
    Gamma(GammaArgs),
    /// Exact and approximate plate RCS versus distance.
    Rcs(RcsArgs),
    /// Received power of the ray-tracing, constant-RCS and plate models.
    Power(SettingsArgs),
    /// Monte Carlo success probability versus target distance.
    Simulate(SimulateArgs),
    /// Closed-form scattered fields against physical-optics quadrature.
    Oracle(OracleArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Args)]
struct OutputArg {
    /// CSV destination; a manifest is written next to it. Default: stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SettingsArgs {
    /// Preset the config file is applied over.
    #[arg(long, default_value = "table1")]
    preset: String,
    /// Flat `key = value` config file with unit-suffixed keys.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Debug, Args)]
struct GammaArgs {
    /// Evaluate at a single point instead of a grid.
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["x_min", "x_max", "points"])]
    x: Option<f64>,
    #[arg(long, default_value_t = 1e-2, allow_negative_numbers = true)]
    x_min: f64,
    #[arg(long, default_value_t = 1e2, allow_negative_numbers = true)]
    x_max: f64,
    #[arg(long, default_value_t = 200)]
    points: usize,
    /// Order of the modulus approximation.
    #[arg(long, default_value_t = 4)]
    n: u32,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Debug, Args)]
struct RcsArgs {
    #[command(flatten)]
    settings: SettingsArgs,
    #[arg(long, default_value_t = 1.0)]
    r_min: f64,
    #[arg(long, default_value_t = 1000.0)]
    r_max: f64,
    #[arg(long, default_value_t = 200)]
    points: usize,
    /// Carrier frequencies, one block each.
    #[arg(long, value_delimiter = ',', default_value = "5,24,76.5")]
    frequencies_ghz: Vec<f64>,
    /// Curvature radii `Cy:Cz` in metres (`inf` for flat), one block each.
    #[arg(long, value_delimiter = ',', default_value = "inf:inf,inf:5,5:5")]
    curvatures: Vec<String>,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[command(flatten)]
    settings: SettingsArgs,
    /// raytracing, const_rcs, new, new_approx, or fig5 for the full comparison.
    #[arg(long, value_parser = parse_model)]
    model: Option<ModelChoice>,
    /// I, III or V.
    #[arg(long, value_parser = parse_swerling)]
    swerling: Option<SwerlingKind>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    settings: SettingsArgs,
    /// Initial quadrature density (at least 10).
    #[arg(long, default_value_t = 10.0)]
    points_per_wavelength: f64,
}

#[derive(Debug, Args)]
struct ReplayArgs {
    manifest: PathBuf,
    /// Where to write the reproduced CSV (default: the recorded path).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn parse_model(s: &str) -> std::result::Result<ModelChoice, String> {
    s.parse().map_err(|e: radprop::Error| e.to_string())
}

fn parse_swerling(s: &str) -> std::result::Result<SwerlingKind, String> {
    s.parse().map_err(|e: radprop::Error| e.to_string())
}

/// Where settings come from: the command line, or a replayed manifest.
enum ConfigSource {
    Args,
    Text(String),
}

fn load_settings(args: &SettingsArgs, source: &ConfigSource) -> Result<Settings> {
    Ok(match source {
        ConfigSource::Text(text) => text.parse()?,
        ConfigSource::Args => {
            let base = Settings::preset(&args.preset)?;
            match &args.config {
                None => base,
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| radprop::Error::Config {
                        key: "--config".into(),
                        reason: format!("cannot read {}: {e}", path.display()),
                    })?;
                    base.apply_text(&text)?
                }
            }
        }
    })
}

struct Output {
    csv: String,
    config: String,
    seed: Option<u64>,
}

fn execute(command: &Command, source: &ConfigSource) -> Result<Output> {
    let with_settings = |csv: String, s: &Settings, seed: Option<u64>| Output {
        csv,
        config: s.to_config_string(),
        seed,
    };
    Ok(match command {
        Command::Gamma(a) => Output {
            csv: commands::gamma(a.x, a.x_min, a.x_max, a.points, a.n)?,
            config: String::new(),
            seed: None,
        },
        Command::Rcs(a) => {
            let s = load_settings(&a.settings, source)?;
            let sweep = RcsSweep {
                r_min: a.r_min,
                r_max: a.r_max,
                points: a.points,
                frequencies_ghz: a.frequencies_ghz.clone(),
                curvatures: a.curvatures.clone(),
            };
            with_settings(commands::rcs(&s, &sweep)?, &s, None)
        }
        Command::Power(a) => {
            let s = load_settings(a, source)?;
            with_settings(commands::power(&s)?, &s, None)
        }
        Command::Simulate(a) => {
            let mut s = load_settings(&a.settings, source)?;
            if let Some(m) = a.model {
                s.model = m;
            }
            if let Some(k) = a.swerling {
                s.swerling = k;
            }
            if let Some(t) = a.trials {
                s.trials = t;
            }
            if let Some(seed) = a.seed {
                s.seed = seed;
            }
            s.validate()?;
            with_settings(commands::simulate(&s)?, &s, Some(s.seed))
        }
        Command::Oracle(a) => {
            let s = load_settings(&a.settings, source)?;
            with_settings(commands::oracle(&s, a.points_per_wavelength)?, &s, None)
        }
        Command::Replay(_) => unreachable!("replay is resolved before execution"),
    })
}

fn output_path(command: &Command) -> Option<&Path> {
    match command {
        Command::Gamma(a) => a.out.output.as_deref(),
        Command::Rcs(a) => a.settings.out.output.as_deref(),
        Command::Power(a) => a.out.output.as_deref(),
        Command::Simulate(a) => a.settings.out.output.as_deref(),
        Command::Oracle(a) => a.settings.out.output.as_deref(),
        Command::Replay(_) => None,
    }
}

fn run_recorded(argv: Vec<String>, command: &Command, source: &ConfigSource) -> Result<()> {
    let out = execute(command, source)?;
    match output_path(command) {
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(out.csv.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    return Err(e).context("writing to stdout")
                }
                _ => {}
            }
        }
        Some(path) => {
            fs::write(path, &out.csv).with_context(|| format!("writing {}", path.display()))?;
            let manifest = RunManifest::new(argv, out.config, out.seed, path, &out.csv);
            let mpath = manifest.write()?;
            eprintln!("wrote {} and {}", path.display(), mpath.display());
        }
    }
    Ok(())
}

fn run(argv: Vec<String>) -> Result<()> {
    let cli = Cli::try_parse_from(&argv)?;
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match &cli.command {
        Command::Replay(r) => {
            let m = RunManifest::read(&r.manifest)?;
            let output = r.output.clone().unwrap_or_else(|| m.output.clone());
            let replay_argv = with_output(&m.command_line, &output);
            let replayed = Cli::try_parse_from(&replay_argv).with_context(|| {
                format!(
                    "manifest {} holds an invalid command line",
                    r.manifest.display()
                )
            })?;
            if matches!(replayed.command, Command::Replay(_)) {
                anyhow::bail!(UsageError("a manifest cannot record a replay".into()));
            }
            if output_path(&replayed.command).is_none() {
                anyhow::bail!(UsageError("the recorded command has no --output".into()));
            }
            run_recorded(
                replay_argv,
                &replayed.command,
                &ConfigSource::Text(m.effective_config),
            )
        }
        command => run_recorded(argv, command, &ConfigSource::Args),
    }
}

/// 2: usage or config error, 3: numerical failure, 1: anything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<clap::Error>() {
        return e.exit_code() as u8;
    }
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<radprop::Error>() {
        Some(radprop::Error::Config { .. }) => 2,
        Some(radprop::Error::InvalidParameter { .. } | radprop::Error::Domain { .. }) => 2,
        Some(
            radprop::Error::NotANumber { .. }
            | radprop::Error::NoConvergence { .. }
            | radprop::Error::UnderResolved { .. },
        ) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    match run(std::env::args().collect()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if let Some(e) = err.downcast_ref::<clap::Error>() {
                let _ = e.print();
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
