//! `beamcov`: experiment driver for the beam coverage toolkit.
//!
//! Subcommands evaluate a single point analytically or by simulation, run
//! the predefined figure sweeps, or cross-validate the two pipelines.
//! Exit codes: 0 success, 1 comparison failure, 2 config error,
//! 3 quadrature non-convergence.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use beamcov_core::coverage::total_coverage_with_mode;
use beamcov_core::error::CoverageError;
use beamcov_core::geometry::PolarPoint;
use beamcov_core::harness::compare::run_compare;
use beamcov_core::harness::config::{ExperimentConfig, Preset};
use beamcov_core::harness::figures::{run_fig3, run_fig4, run_fig5, run_fig6};
use beamcov_core::harness::output::{write_fig4_rows, write_result_rows, OutputFormat};
use beamcov_core::sim::mc_coverage;

#[derive(Parser)]
#[command(name = "beamcov", version, about = "Beam coverage under stochastic blockage: analytic model and Monte Carlo simulation")]
struct Cli {
    /// TOML experiment config; defaults come from BEAMCOV_CONFIG or the
    /// built-in reference parameters.
    #[arg(long, global = true, env = "BEAMCOV_CONFIG", value_name = "PATH")]
    config: Option<PathBuf>,

    /// Override the simulation base seed.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_name = "csv|json")]
    format: Option<String>,

    /// Override the number of Monte Carlo drops.
    #[arg(long, global = true, value_name = "N")]
    drops: Option<usize>,

    /// Reflected-range bound: the stated d0/σ or the Friis-derived d0/√σ.
    #[arg(long, global = true, value_name = "paper|friis")]
    range_mode: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analytic coverage of the first configured (beam, user) point.
    Analytic,
    /// Monte Carlo coverage of the first configured (beam, user) point.
    Simulate,
    /// Run a figure sweep preset.
    Sweep {
        #[arg(long, value_name = "fig3|fig4|fig5|fig6")]
        preset: String,
    },
    /// Cross-validate analytic and MC coverage at every configured point.
    Compare,
}

/// An error annotated with the process exit code it maps to.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoverageError> for CliError {
    fn from(e: CoverageError) -> Self {
        let code = match e {
            CoverageError::QuadratureNotConverged { .. } => 3,
            CoverageError::InvalidInput(_) => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn load_config(cli: &Cli) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => ExperimentConfig::from_path(path)
            .map_err(|e| CliError::config(format!("{}: {e}", path.display())))?,
        None => ExperimentConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.sim.base_seed = seed;
    }
    if let Some(drops) = cli.drops {
        if drops == 0 {
            return Err(CliError::config("--drops must be positive"));
        }
        cfg.sim.n_drops = drops;
    }
    if let Some(mode) = &cli.range_mode {
        cfg.sim.range_mode = match mode.as_str() {
            "paper" => beamcov_core::coverage::RangeMode::Paper,
            "friis" => beamcov_core::coverage::RangeMode::Friis,
            other => {
                return Err(CliError::config(format!(
                    "unknown range mode {other:?}, expected paper|friis"
                )))
            }
        };
    }
    if let Some(fmt) = &cli.format {
        cfg.outputs.format = fmt.parse().map_err(|e: CoverageError| CliError::config(e.to_string()))?;
    }
    if let Some(out) = &cli.out {
        cfg.outputs.out = Some(out.display().to_string());
    }
    Ok(cfg)
}

fn first_point(cfg: &ExperimentConfig) -> Result<([f64; 2], [f64; 2]), CliError> {
    let beam = *cfg
        .beams
        .list
        .first()
        .ok_or_else(|| CliError::config("config has no beams"))?;
    let user = *cfg
        .users
        .list
        .first()
        .ok_or_else(|| CliError::config("config has no users"))?;
    Ok((beam, user))
}

fn emit(cfg: &ExperimentConfig, text: &str) -> Result<(), CliError> {
    match &cfg.outputs.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::config(format!("{path}: {e}")))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let cfg = load_config(cli)?;
    match &cli.command {
        Command::Analytic => {
            let ([theta_j, mu_j], [theta_u, d_u]) = first_point(&cfg)?;
            let radio = cfg.radio.to_radio_params();
            let beam = cfg.radio.beam(theta_j, mu_j)?;
            let env = cfg.env.to_env_params();
            let user = PolarPoint::new(theta_u.to_radians(), d_u);
            let b = total_coverage_with_mode(&radio, &beam, &env, &user, &cfg.quad, cfg.sim.range_mode)?;
            let text = match cfg.outputs.format {
                OutputFormat::Json => serde_json::to_string_pretty(&b).expect("serialize") + "\n",
                OutputFormat::Csv => format!(
                    "theta_j_deg,mu_j_deg,theta_u_deg,d_u_m,lambda,p_direct,p_reflected,p_total\n\
                     {theta_j},{mu_j},{theta_u},{d_u},{},{},{},{}\n",
                    cfg.env.lambda, b.p_direct, b.p_reflected, b.p_total
                ),
            };
            emit(&cfg, &text)?;
            Ok(0)
        }
        Command::Simulate => {
            let ([theta_j, mu_j], [theta_u, d_u]) = first_point(&cfg)?;
            let radio = cfg.radio.to_radio_params();
            let beam = cfg.radio.beam(theta_j, mu_j)?;
            let env = cfg.env.to_env_params();
            let user = PolarPoint::new(theta_u.to_radians(), d_u);
            let est = mc_coverage(&env, &radio, &beam, &user, &cfg.sim);
            let text = match cfg.outputs.format {
                OutputFormat::Json => serde_json::to_string_pretty(&est).expect("serialize") + "\n",
                OutputFormat::Csv => format!(
                    "theta_j_deg,mu_j_deg,theta_u_deg,d_u_m,lambda,p_hat,ci_low,ci_high,stderr,n,n_direct,n_reflected\n\
                     {theta_j},{mu_j},{theta_u},{d_u},{},{},{},{},{},{},{},{}\n",
                    cfg.env.lambda,
                    est.p_hat,
                    est.ci95.0,
                    est.ci95.1,
                    est.stderr,
                    est.n,
                    est.n_direct,
                    est.n_reflected
                ),
            };
            emit(&cfg, &text)?;
            Ok(0)
        }
        Command::Sweep { preset } => {
            let preset: Preset = preset
                .parse()
                .map_err(|e: CoverageError| CliError::config(e.to_string()))?;
            let text = match preset {
                Preset::Fig3 => write_result_rows(&run_fig3(&cfg)?, cfg.outputs.format),
                Preset::Fig4 => write_fig4_rows(&run_fig4(&cfg)?, cfg.outputs.format),
                Preset::Fig5 => write_result_rows(&run_fig5(&cfg)?, cfg.outputs.format),
                Preset::Fig6 => write_result_rows(&run_fig6(&cfg)?, cfg.outputs.format),
            };
            emit(&cfg, &text)?;
            Ok(0)
        }
        Command::Compare => {
            let report = run_compare(&cfg)?;
            emit(&cfg, &report.render())?;
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
