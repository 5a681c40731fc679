//! Experiment configuration: TOML-facing blocks with dB/degree units,
//! converted to the linear/radian internal types at the boundary.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coverage::{QuadratureConfig, RadioParams};
use crate::env_stats::{EnvParams, SizeDist};
use crate::error::CoverageError;
use crate::geometry::{BeamSpec, PolarPoint};
use crate::harness::units::{db_to_linear, dbm_to_watts};
use crate::sim::SimConfig;

/// Figure preset selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

impl std::str::FromStr for Preset {
    type Err = CoverageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fig3" => Ok(Preset::Fig3),
            "fig4" => Ok(Preset::Fig4),
            "fig5" => Ok(Preset::Fig5),
            "fig6" => Ok(Preset::Fig6),
            other => Err(CoverageError::InvalidInput(format!(
                "unknown preset {other:?}, expected fig3|fig4|fig5|fig6"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RadioConfig {
    pub p_t_dbm: f64,
    pub g_u_dbi: f64,
    pub f_ghz: f64,
    pub p_n_dbm: f64,
    pub gamma_db: f64,
    pub sigma_db: f64,
    /// Force σ = 2.0 linear instead of 10^0.3 for strict half-power runs.
    pub sigma_exact_half: bool,
    /// Beamforming gain per beam width, keyed by width in degrees.
    pub gain_table_dbi: BTreeMap<String, f64>,
}

impl Default for RadioConfig {
    fn default() -> Self {
        let mut gain_table_dbi = BTreeMap::new();
        gain_table_dbi.insert("10".to_string(), 36.0);
        gain_table_dbi.insert("30".to_string(), 12.0);
        Self {
            p_t_dbm: 30.0,
            g_u_dbi: 1.0,
            f_ghz: 30.0,
            p_n_dbm: -85.0,
            gamma_db: 0.0,
            sigma_db: 3.0,
            sigma_exact_half: false,
            gain_table_dbi,
        }
    }
}

impl RadioConfig {
    pub fn to_radio_params(&self) -> RadioParams {
        let sigma = if self.sigma_exact_half {
            2.0
        } else {
            db_to_linear(self.sigma_db)
        };
        RadioParams::new(
            dbm_to_watts(self.p_t_dbm),
            db_to_linear(self.g_u_dbi),
            self.f_ghz * 1e9,
            dbm_to_watts(self.p_n_dbm),
            db_to_linear(self.gamma_db),
            sigma,
        )
    }

    /// Linear gain for a beam width. The gain pattern is a lookup, not an
    /// interpolation: unknown widths must be configured explicitly.
    pub fn gain_for_width(&self, mu_deg: f64) -> Result<f64, CoverageError> {
        for (key, dbi) in &self.gain_table_dbi {
            let key_deg: f64 = key.parse().map_err(|_| {
                CoverageError::InvalidInput(format!("gain table key {key:?} is not a number"))
            })?;
            if (key_deg - mu_deg).abs() < 1e-9 {
                return Ok(db_to_linear(*dbi));
            }
        }
        Err(CoverageError::InvalidInput(format!(
            "no beamforming gain configured for width {mu_deg}°"
        )))
    }

    pub fn beam(&self, theta_deg: f64, mu_deg: f64) -> Result<BeamSpec, CoverageError> {
        Ok(BeamSpec::new(
            theta_deg.to_radians(),
            mu_deg.to_radians(),
            self.gain_for_width(mu_deg)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EnvConfig {
    /// Building density λ in buildings/m².
    pub lambda: f64,
    /// Uniform bounds of the building length, meters.
    pub len_bounds: [f64; 2],
    /// Uniform bounds of the building width, meters.
    pub wid_bounds: [f64; 2],
    /// λ sweep for the density figure: start, stop, step.
    pub lambda_sweep: [f64; 3],
}

impl Default for EnvConfig {
    fn default() -> Self {
        Self {
            lambda: 2e-4,
            len_bounds: [40.0, 60.0],
            wid_bounds: [30.0, 50.0],
            lambda_sweep: [0.0, 1e-3, 5e-5],
        }
    }
}

impl EnvConfig {
    pub fn to_env_params(&self) -> EnvParams {
        self.with_lambda(self.lambda)
    }

    pub fn with_lambda(&self, lambda: f64) -> EnvParams {
        EnvParams::new(
            lambda,
            SizeDist::uniform(self.len_bounds[0], self.len_bounds[1]),
            SizeDist::uniform(self.wid_bounds[0], self.wid_bounds[1]),
        )
    }

    pub fn lambda_values(&self) -> Vec<f64> {
        let [start, stop, step] = self.lambda_sweep;
        let mut v = Vec::new();
        let mut i = 0u32;
        loop {
            let x = start + i as f64 * step;
            if x > stop + step * 1e-9 {
                break;
            }
            v.push(x);
            i += 1;
        }
        v
    }
}

/// Beam set: either an explicit list of (θ_j°, μ_j°) pairs or a generator
/// of `tiling_count` equal non-overlapping beams of width `tiling_mu_deg`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BeamsConfig {
    pub list: Vec<[f64; 2]>,
    pub tiling_count: usize,
    pub tiling_mu_deg: f64,
}

impl Default for BeamsConfig {
    fn default() -> Self {
        Self {
            list: vec![[90.0, 10.0]],
            tiling_count: 36,
            tiling_mu_deg: 10.0,
        }
    }
}

impl BeamsConfig {
    /// The tiling beam centers in degrees, chosen so one beam points at 90°.
    pub fn tiling_centers_deg(&self) -> Vec<f64> {
        let step = 360.0 / self.tiling_count as f64;
        (0..self.tiling_count).map(|i| i as f64 * step).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct UsersConfig {
    /// Explicit user positions as (θ_u°, d_u m) pairs.
    pub list: Vec<[f64; 2]>,
    /// Distance sweep: user angle in degrees plus start, stop, step meters.
    pub d_sweep_theta_deg: f64,
    pub d_sweep: [f64; 3],
}

impl Default for UsersConfig {
    fn default() -> Self {
        Self {
            list: vec![[90.0, 50.0]],
            d_sweep_theta_deg: 90.0,
            d_sweep: [25.0, 200.0, 25.0],
        }
    }
}

impl UsersConfig {
    pub fn sweep_distances(&self) -> Vec<f64> {
        let [start, stop, step] = self.d_sweep;
        let mut v = Vec::new();
        let mut x = start;
        while x <= stop + step * 1e-9 {
            v.push(x);
            x += step;
        }
        v
    }

    pub fn points(&self) -> Vec<PolarPoint> {
        self.list
            .iter()
            .map(|[theta_deg, d]| PolarPoint::new(theta_deg.to_radians(), *d))
            .collect()
    }
}

/// Comparison tolerances for the model-vs-simulation gate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CompareConfig {
    pub tol_direct: f64,
    /// Reflected-beam tolerance for narrow beams at near distances.
    pub tol_reflected_near: f64,
    /// Relaxed tolerance beyond `near_distance_m` or for wide beams, where
    /// the single-wall assumption degrades.
    pub tol_reflected_far: f64,
    pub near_distance_m: f64,
    pub narrow_mu_deg: f64,
}

impl Default for CompareConfig {
    fn default() -> Self {
        Self {
            tol_direct: 0.02,
            tol_reflected_near: 0.05,
            tol_reflected_far: 0.08,
            near_distance_m: 100.0,
            narrow_mu_deg: 10.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct OutputsConfig {
    pub out: Option<String>,
    pub format: crate::harness::output::OutputFormat,
}

impl Default for OutputsConfig {
    fn default() -> Self {
        Self {
            out: None,
            format: crate::harness::output::OutputFormat::Csv,
        }
    }
}

/// The full experiment configuration. All defaults reproduce the reference
/// evaluation setup; every field can be overridden from a TOML file.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    pub radio: RadioConfig,
    pub env: EnvConfig,
    pub beams: BeamsConfig,
    pub users: UsersConfig,
    pub sim: SimConfig,
    pub quad: QuadratureConfig,
    pub compare: CompareConfig,
    pub outputs: OutputsConfig,
}

impl ExperimentConfig {
    pub fn from_toml_str(text: &str) -> Result<Self, CoverageError> {
        toml::from_str(text)
            .map_err(|e| CoverageError::InvalidInput(format!("config parse error: {e}")))
    }

    pub fn from_path(path: &Path) -> Result<Self, CoverageError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CoverageError::InvalidInput(format!("cannot read config {}: {e}", path.display()))
        })?;
        Self::from_toml_str(&text)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }
}
