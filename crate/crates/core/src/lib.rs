//! Coverage probability of directional mm-wave beams under a stochastic
//! rectangular-obstacle environment.
//!
//! Two independent routes compute the same quantity:
//!
//! - an analytic engine ([`coverage`]): closed-form direct-beam term plus
//!   numeric integration of the first-order-reflection term, built on the
//!   blockage statistics in [`env_stats`];
//! - a Monte Carlo simulator ([`sim`]): Poisson building drops scored by
//!   exact geometry from [`geometry`], with image-method enumeration of all
//!   first-order specular paths.
//!
//! The [`harness`] module drives parameter sweeps over both routes and
//! cross-validates them.

pub mod coverage;
pub mod env_stats;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod sim;

pub use coverage::{
    direct_coverage, reflected_coverage, snr_direct, threshold_distance_direct,
    threshold_distance_reflected, total_coverage, CoverageBreakdown, QuadratureConfig,
    RadioParams, RangeMode,
};
pub use env_stats::{blockage_params, p_los, BlockageParams, EnvParams, SizeDist};
pub use error::CoverageError;
pub use geometry::{BeamSpec, CartesianPoint, OrientedRect, PolarPoint};
pub use sim::{mc_cell_coverage, mc_coverage, MCEstimate, Scene, SimConfig};
