use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ergoloss::distances::axioms::DEFAULT_SEED;
use ergoloss::distances::DistanceMeasure;
use ergoloss::ergometrics::SearchOptions;
use ergoloss_cli::verify::{self, VerifyReport};
use ergoloss_cli::{run_dynamics, run_uncertainty, Preset, SweepConfig, SweepResult};

#[derive(Parser)]
#[command(name = "ergoloss", version, about = "Information loss and non-ergodicity of open qubit dynamics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Polar grid points for state-space searches.
    #[arg(long, global = true, default_value_t = 64)]
    grid_theta: usize,
    /// Azimuthal grid points for state-space searches.
    #[arg(long, global = true, default_value_t = 128)]
    grid_phi: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Instantaneous trace-distance loss over a time grid.
    Dynamics(SweepArgs),
    /// Average loss, maximal non-ergodicity and relation slack over a
    /// parameter grid.
    Uncertainty(SweepArgs),
    /// Run a verification suite and print a JSON report.
    Verify {
        scope: Scope,
        /// Samples per measure (axioms) or configurations (relations).
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized P1–P5 check of the distance measures.
    Axioms {
        /// Restrict to one measure.
        #[arg(long)]
        measure: Option<DistanceMeasure>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// JSON sweep configuration.
    #[arg(long, required_unless_present = "preset", conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Built-in figure parameters: fig1, fig2, fig3 (dynamics), fig5, fig6,
    /// fig6a (uncertainty).
    #[arg(long)]
    preset: Option<Preset>,
    /// Output file, or directory for presets. Defaults to the config's
    /// `output`, then stdout (the current directory for presets).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Axioms,
    Oracle,
    Relations,
    Saturation,
}

/// Distinguishes bad input (exit 2) from failed checks (exit 1).
enum Outcome {
    Pass,
    Violation,
}

fn write_text(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit(result: &SweepResult, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            result.write_path(path).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => write_text(None, &result.to_csv_string()),
    }
}

fn run_sweep(args: &SweepArgs, dynamics: bool, opts: &SearchOptions) -> anyhow::Result<()> {
    let run = |cfg: &SweepConfig| {
        if dynamics {
            run_dynamics(cfg, opts)
        } else {
            run_uncertainty(cfg, opts)
        }
    };
    if let Some(preset) = args.preset {
        if preset.is_dynamics() != dynamics {
            bail!(
                "preset {} belongs to `{}`",
                preset.name(),
                if preset.is_dynamics() { "dynamics" } else { "uncertainty" }
            );
        }
        let dir = args.out.clone().unwrap_or_else(|| PathBuf::from("."));
        for r in preset.runs() {
            let result = run(&r.config)?;
            emit(&result, Some(&dir.join(format!("{}.csv", r.name))))?;
        }
        return Ok(());
    }
    let path = args.config.as_ref().expect("clap requires --config or --preset");
    let cfg = SweepConfig::load(path)?;
    let result = run(&cfg)?;
    emit(&result, args.out.as_deref().or(cfg.output.as_deref()))
}

fn report(r: &VerifyReport, out: Option<&Path>) -> anyhow::Result<Outcome> {
    write_text(out, &(serde_json::to_string_pretty(r)? + "\n"))?;
    for c in r.checks.iter().filter(|c| !c.pass) {
        eprintln!("FAIL {}: {} (expected {:?}, tol {})", c.name, c.value, c.expected, c.tolerance);
    }
    Ok(if r.pass { Outcome::Pass } else { Outcome::Violation })
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let opts = SearchOptions::default().with_grid(cli.grid_theta, cli.grid_phi);
    match cli.command {
        Command::Dynamics(args) => run_sweep(&args, true, &opts).map(|_| Outcome::Pass),
        Command::Uncertainty(args) => run_sweep(&args, false, &opts).map(|_| Outcome::Pass),
        Command::Verify { scope, samples, out } => {
            let r = match scope {
                Scope::Axioms => verify::verify_axioms(samples.unwrap_or(10_000), cli.seed),
                Scope::Oracle => verify::verify_oracle(cli.seed)?,
                Scope::Relations => verify::verify_relations(samples.unwrap_or(10_000), cli.seed)?,
                Scope::Saturation => verify::verify_saturation()?,
            };
            report(&r, out.as_deref())
        }
        Command::Axioms { measure, samples, out } => {
            let measures = measure.map_or(DistanceMeasure::ALL.to_vec(), |m| vec![m]);
            let reports = verify::axiom_reports(&measures, samples, cli.seed);
            write_text(out.as_deref(), &(serde_json::to_string_pretty(&reports)? + "\n"))?;
            for r in &reports {
                let row: Vec<String> = r
                    .checks()
                    .iter()
                    .map(|(name, c)| format!("{name}={}", if c.pass { "pass" } else { "fail" }))
                    .collect();
                eprintln!("{:<18}{}", r.measure.name(), row.join(" "));
            }
            Ok(if reports.iter().all(|r| r.matches_metadata()) {
                Outcome::Pass
            } else {
                Outcome::Violation
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
