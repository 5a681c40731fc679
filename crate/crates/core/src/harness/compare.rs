//! Model-versus-simulation gate: per-point verdicts with documented
//! tolerances and a summary suitable for an exit code.

use serde::{Deserialize, Serialize};

use crate::error::CoverageError;
use crate::geometry::{sector_interior, PolarPoint};
use crate::harness::config::ExperimentConfig;
use crate::harness::figures::{evaluate_point, ResultRow};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub result: ResultRow,
    /// The absolute tolerance selected for this point.
    pub tol_abs: f64,
    /// The effective threshold max(tol_abs, 3·stderr).
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub rows: Vec<CompareRow>,
    pub n_pass: usize,
    pub n_fail: usize,
}

impl CompareReport {
    pub fn all_pass(&self) -> bool {
        self.n_fail == 0
    }

    /// Per-row verdict lines plus a summary, for terminal output.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let r = &row.result;
            out.push_str(&format!(
                "{} beam({}, {}°) user({}, {} m) λ={}: analytic={:.5} mc={:.5} gap={:.5} \
                 threshold={:.5} ... {}\n",
                if row.pass { "PASS" } else { "FAIL" },
                r.theta_j_deg,
                r.mu_j_deg,
                r.theta_u_deg,
                r.d_u_m,
                r.lambda,
                r.analytic_p_total,
                r.mc_p_hat,
                r.abs_gap,
                row.threshold,
                if row.pass { "ok" } else { "EXCEEDED" },
            ));
        }
        out.push_str(&format!(
            "compare: {} passed, {} failed\n",
            self.n_pass, self.n_fail
        ));
        out
    }
}

/// Compare analytic and MC coverage at every configured (beam, user) point.
///
/// Direct points (user inside the sector) get the tight tolerance; reflected
/// points get the near tolerance for narrow beams at near distances and the
/// relaxed one otherwise. A point passes when the gap stays within
/// max(tolerance, 3·stderr).
pub fn run_compare(cfg: &ExperimentConfig) -> Result<CompareReport, CoverageError> {
    let mut rows = Vec::new();
    for &[theta_j_deg, mu_j_deg] in &cfg.beams.list {
        for &[theta_u_deg, d_u] in &cfg.users.list {
            let result = evaluate_point(
                cfg,
                "compare",
                theta_j_deg,
                mu_j_deg,
                theta_u_deg,
                d_u,
                cfg.env.lambda,
            )?;
            let beam = cfg.radio.beam(theta_j_deg, mu_j_deg)?;
            let user = PolarPoint::new(theta_u_deg.to_radians(), d_u);
            let tol_abs = if sector_interior(&beam, &user) {
                cfg.compare.tol_direct
            } else if mu_j_deg <= cfg.compare.narrow_mu_deg + 1e-9
                && d_u <= cfg.compare.near_distance_m
            {
                cfg.compare.tol_reflected_near
            } else {
                cfg.compare.tol_reflected_far
            };
            let threshold = tol_abs.max(3.0 * result.mc_stderr);
            let pass = result.abs_gap <= threshold;
            rows.push(CompareRow {
                result,
                tol_abs,
                threshold,
                pass,
            });
        }
    }
    let n_pass = rows.iter().filter(|r| r.pass).count();
    let n_fail = rows.len() - n_pass;
    Ok(CompareReport {
        rows,
        n_pass,
        n_fail,
    })
}
