//! Sweep drivers reproducing the reference evaluation tables: beam
//! orientation sweep, cell-coverage distance sweep, per-beam distance sweep
//! and density sweep.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coverage::total_coverage_with_mode;
use crate::error::CoverageError;
use crate::geometry::PolarPoint;
use crate::harness::config::ExperimentConfig;
use crate::sim::{mc_cell_coverage, mc_coverage};

/// One analytic-vs-MC comparison point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub experiment: String,
    pub theta_j_deg: f64,
    pub mu_j_deg: f64,
    pub theta_u_deg: f64,
    pub d_u_m: f64,
    pub lambda: f64,
    pub analytic_p_direct: f64,
    pub analytic_p_reflected: f64,
    pub analytic_p_total: f64,
    pub mc_p_hat: f64,
    pub mc_ci_low: f64,
    pub mc_ci_high: f64,
    pub mc_stderr: f64,
    pub mc_n: usize,
    pub abs_gap: f64,
}

/// Analytic and MC coverage of a single (beam, user, λ) point.
pub fn evaluate_point(
    cfg: &ExperimentConfig,
    experiment: &str,
    theta_j_deg: f64,
    mu_j_deg: f64,
    theta_u_deg: f64,
    d_u_m: f64,
    lambda: f64,
) -> Result<ResultRow, CoverageError> {
    let radio = cfg.radio.to_radio_params();
    let beam = cfg.radio.beam(theta_j_deg, mu_j_deg)?;
    let env = cfg.env.with_lambda(lambda);
    let user = PolarPoint::new(theta_u_deg.to_radians(), d_u_m);

    let analytic = total_coverage_with_mode(
        &radio,
        &beam,
        &env,
        &user,
        &cfg.quad,
        cfg.sim.range_mode,
    )?;
    let mc = mc_coverage(&env, &radio, &beam, &user, &cfg.sim);

    Ok(ResultRow {
        experiment: experiment.to_string(),
        theta_j_deg,
        mu_j_deg,
        theta_u_deg,
        d_u_m,
        lambda,
        analytic_p_direct: analytic.p_direct,
        analytic_p_reflected: analytic.p_reflected,
        analytic_p_total: analytic.p_total,
        mc_p_hat: mc.p_hat,
        mc_ci_low: mc.ci95.0,
        mc_ci_high: mc.ci95.1,
        mc_stderr: mc.stderr,
        mc_n: mc.n,
        abs_gap: (analytic.p_total - mc.p_hat).abs(),
    })
}

fn collect_points(
    cfg: &ExperimentConfig,
    experiment: &str,
    points: &[(f64, f64, f64, f64, f64)],
) -> Result<Vec<ResultRow>, CoverageError> {
    // Points run in parallel; rows come back in sweep order.
    points
        .par_iter()
        .map(|&(theta_j, mu_j, theta_u, d_u, lambda)| {
            evaluate_point(cfg, experiment, theta_j, mu_j, theta_u, d_u, lambda)
        })
        .collect()
}

/// Beam-orientation sweep: fixed user, all tiling beams of the configured
/// width, analytic and MC columns per beam.
pub fn run_fig3(cfg: &ExperimentConfig) -> Result<Vec<ResultRow>, CoverageError> {
    let [theta_u, d_u] = cfg.users.list.first().copied().unwrap_or([90.0, 50.0]);
    let mu = cfg.beams.tiling_mu_deg;
    let points: Vec<_> = cfg
        .beams
        .tiling_centers_deg()
        .into_iter()
        .map(|theta_j| (theta_j, mu, theta_u, d_u, cfg.env.lambda))
        .collect();
    collect_points(cfg, "fig3", &points)
}

/// One distance point of the cell-coverage comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig4Row {
    pub experiment: String,
    pub d_u_m: f64,
    pub lambda: f64,
    pub direct_only_p_hat: f64,
    pub direct_only_ci_low: f64,
    pub direct_only_ci_high: f64,
    pub combined_p_hat: f64,
    pub combined_ci_low: f64,
    pub combined_ci_high: f64,
    pub combined_stderr: f64,
    pub n: usize,
}

/// Cell-coverage distance sweep over the full beam tiling: direct-only
/// versus with-reflections, same scenes shared across beams.
pub fn run_fig4(cfg: &ExperimentConfig) -> Result<Vec<Fig4Row>, CoverageError> {
    let radio = cfg.radio.to_radio_params();
    let mu = cfg.beams.tiling_mu_deg;
    let beams: Vec<_> = cfg
        .beams
        .tiling_centers_deg()
        .into_iter()
        .map(|theta_j| cfg.radio.beam(theta_j, mu))
        .collect::<Result<_, _>>()?;
    let env = cfg.env.to_env_params();
    let theta_u = cfg.users.d_sweep_theta_deg.to_radians();

    let rows: Vec<Fig4Row> = cfg
        .users
        .sweep_distances()
        .par_iter()
        .map(|&d_u| {
            let user = PolarPoint::new(theta_u, d_u);
            let est = mc_cell_coverage(&env, &radio, &beams, &user, &cfg.sim);
            Fig4Row {
                experiment: "fig4".to_string(),
                d_u_m: d_u,
                lambda: cfg.env.lambda,
                direct_only_p_hat: est.direct_only.p_hat,
                direct_only_ci_low: est.direct_only.ci95.0,
                direct_only_ci_high: est.direct_only.ci95.1,
                combined_p_hat: est.combined.p_hat,
                combined_ci_low: est.combined.ci95.0,
                combined_ci_high: est.combined.ci95.1,
                combined_stderr: est.combined.stderr,
                n: est.combined.n,
            }
        })
        .collect();
    Ok(rows)
}

/// The three reference beams: the direct beam on the user axis, a narrow
/// reflected beam at +5° and a wide reflected beam at +15°.
pub fn reference_beams(theta_u_deg: f64) -> [(f64, f64); 3] {
    [
        (theta_u_deg, 10.0),
        (theta_u_deg + 5.0, 10.0),
        (theta_u_deg + 15.0, 30.0),
    ]
}

/// Per-beam distance sweep: direct beam plus the two reflected beams,
/// analytic and MC columns.
pub fn run_fig5(cfg: &ExperimentConfig) -> Result<Vec<ResultRow>, CoverageError> {
    let theta_u = cfg.users.d_sweep_theta_deg;
    let mut points = Vec::new();
    for (theta_j, mu_j) in reference_beams(theta_u) {
        for d_u in cfg.users.sweep_distances() {
            points.push((theta_j, mu_j, theta_u, d_u, cfg.env.lambda));
        }
    }
    collect_points(cfg, "fig5", &points)
}

/// Density sweep at a fixed user: the same three beams over the configured
/// λ range.
pub fn run_fig6(cfg: &ExperimentConfig) -> Result<Vec<ResultRow>, CoverageError> {
    let [theta_u, d_u] = cfg.users.list.first().copied().unwrap_or([90.0, 50.0]);
    let mut points = Vec::new();
    for (theta_j, mu_j) in reference_beams(theta_u) {
        for lambda in cfg.env.lambda_values() {
            points.push((theta_j, mu_j, theta_u, d_u, lambda));
        }
    }
    collect_points(cfg, "fig6", &points)
}
