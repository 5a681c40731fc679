//! Reproducible experiment driver.
//!
//! Parses experiment configuration, runs the analytic and Monte Carlo
//! pipelines over parameter sweeps, emits CSV/JSON tables and compares the
//! two routes with pass/fail tolerances.

pub mod compare;
pub mod config;
pub mod figures;
pub mod output;
pub mod units;

pub use compare::{run_compare, CompareReport, CompareRow};
pub use config::{ExperimentConfig, Preset};
pub use figures::{run_fig3, run_fig4, run_fig5, run_fig6, Fig4Row, ResultRow};
pub use output::{write_fig4_rows, write_result_rows, OutputFormat};
