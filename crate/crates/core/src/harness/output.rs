//! Table serialization: CSV with a fixed column order, or JSON mirroring
//! the same fields. Output is deterministic byte for byte for a fixed
//! config and seed.

use serde::{Deserialize, Serialize};

use crate::error::CoverageError;
use crate::harness::figures::{Fig4Row, ResultRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = CoverageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CoverageError::InvalidInput(format!(
                "unknown format {other:?}, expected csv|json"
            ))),
        }
    }
}

const RESULT_HEADER: &str = "experiment,theta_j_deg,mu_j_deg,theta_u_deg,d_u_m,lambda,\
analytic_p_direct,analytic_p_reflected,analytic_p_total,\
mc_p_hat,mc_ci_low,mc_ci_high,mc_stderr,mc_n,abs_gap";

pub fn write_result_rows(rows: &[ResultRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from(RESULT_HEADER);
            out.push('\n');
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.experiment,
                    r.theta_j_deg,
                    r.mu_j_deg,
                    r.theta_u_deg,
                    r.d_u_m,
                    r.lambda,
                    r.analytic_p_direct,
                    r.analytic_p_reflected,
                    r.analytic_p_total,
                    r.mc_p_hat,
                    r.mc_ci_low,
                    r.mc_ci_high,
                    r.mc_stderr,
                    r.mc_n,
                    r.abs_gap,
                ));
            }
            out
        }
    }
}

const FIG4_HEADER: &str = "experiment,d_u_m,lambda,\
direct_only_p_hat,direct_only_ci_low,direct_only_ci_high,\
combined_p_hat,combined_ci_low,combined_ci_high,combined_stderr,n";

pub fn write_fig4_rows(rows: &[Fig4Row], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
        }
        OutputFormat::Csv => {
            let mut out = String::from(FIG4_HEADER);
            out.push('\n');
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.experiment,
                    r.d_u_m,
                    r.lambda,
                    r.direct_only_p_hat,
                    r.direct_only_ci_low,
                    r.direct_only_ci_high,
                    r.combined_p_hat,
                    r.combined_ci_low,
                    r.combined_ci_high,
                    r.combined_stderr,
                    r.n,
                ));
            }
            out
        }
    }
}
