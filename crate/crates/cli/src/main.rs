use std::path::PathBuf;
use std::process::ExitCode;

use anneal_threshold::bounds::Verdict;
use anneal_threshold::harness::{
    emit, load_config, run, ConfigError, HarnessError, OutputFormat, RunOverrides, DEFAULT_OUT_DIR,
    OUT_DIR_ENV,
};
use anneal_threshold::oracle::selftest;
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

/// Exit status when any point or check fails.
const EXIT_FAIL: u8 = 1;
/// Exit status for unusable input or runtime errors.
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "anneal-threshold",
    version,
    about = "Simulate annealing under control errors and check the error bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every sweep point of a config and write the results.
    Run {
        config: PathBuf,
        /// Output directory [default: config output.dir, then $ANNEAL_THRESHOLD_OUT_DIR, then ./anneal-out].
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fixed integrator step count for every point.
        #[arg(long)]
        steps: Option<usize>,
        /// Base sampling seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Check a config without running it.
    Validate { config: PathBuf },
    /// Compare the propagator against closed-form solutions.
    OracleSelftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Report,
    Both,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Report => OutputFormat::Report,
            Format::Both => OutputFormat::Both,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run {
            config,
            out,
            steps,
            seed,
            format,
        } => cmd_run(config, out, RunOverrides { steps, seed }, format),
        Command::Validate { config } => cmd_validate(config),
        Command::OracleSelftest => cmd_selftest(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            match e.downcast_ref::<HarnessError>() {
                Some(HarnessError::Config(c)) => report_config_error(c),
                _ => eprintln!("error: {e:#}"),
            }
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn report_config_error(e: &ConfigError) {
    match e.path() {
        Some(path) => eprintln!("error[{}] at {path}: {}", e.code(), e.message()),
        None => eprintln!("error[{}]: {e}", e.code()),
    }
}

fn cmd_run(
    config: PathBuf,
    out: Option<PathBuf>,
    overrides: RunOverrides,
    format: Option<Format>,
) -> anyhow::Result<u8> {
    let loaded = load_config(&config).map_err(HarnessError::from)?;
    let report = run(&loaded, overrides)?;

    let dir = out
        .or_else(|| loaded.config.output.dir.as_ref().map(PathBuf::from))
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR));
    let format = format
        .map(Into::into)
        .unwrap_or(loaded.config.output.format);
    let files = emit(&report, &dir, format).context("writing results")?;

    for p in &report.points {
        let b = &p.bounds;
        println!(
            "point {:>3}  T={:<8} scale={:<6} v={:.6e} d={:.6e} {}",
            p.index,
            p.total_time,
            p.error_scale,
            b.v,
            b.distance_measured,
            b.verdict.as_str()
        );
    }
    let c = report.verdict_counts;
    println!(
        "{} verified, {} inconclusive, {} condition violated, {} failed",
        c.verified, c.inconclusive, c.condition_violated, c.fail
    );
    for path in [files.summary, files.report].into_iter().flatten() {
        println!("wrote {}", path.display());
    }
    let failed = report
        .points
        .iter()
        .any(|p| p.bounds.verdict == Verdict::Fail);
    Ok(if failed { EXIT_FAIL } else { 0 })
}

fn cmd_validate(config: PathBuf) -> anyhow::Result<u8> {
    let loaded = load_config(&config).map_err(HarnessError::from)?;
    let c = &loaded.config;
    println!(
        "ok: {} qubits, {} sweep point(s)",
        c.system.n_qubits,
        c.horizons().len() * c.scales().len()
    );
    for d in &loaded.defaults_applied {
        println!("default: {d}");
    }
    Ok(0)
}

fn cmd_selftest() -> anyhow::Result<u8> {
    let checks = selftest()?;
    let mut failed = false;
    for c in &checks {
        println!(
            "{} {}: worst {:.3e} (tolerance {:.0e})",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.worst,
            c.tolerance
        );
        failed |= !c.passed;
    }
    Ok(if failed { EXIT_FAIL } else { 0 })
}
