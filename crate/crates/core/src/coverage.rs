//! Analytic coverage engine.
//!
//! Friis SNR and threshold distances, direct-beam coverage in closed form,
//! the virtual-user construction, and the reflected-beam coverage double
//! integral with its atom at r = 0, assembled into the total coverage
//! probability.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::env_stats::{blockage_params, p_los, p_los_after_reflection, EnvParams};
use crate::error::CoverageError;
use crate::geometry::{
    mirror_point, ray_line_distance, sector_contains_angle, sector_interior, BeamSpec, MirrorLine,
    PolarPoint,
};

/// Speed of light in m/s.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Link-budget parameters, all linear units (watts, Hz, dimensionless).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadioParams {
    /// Transmit power P_t in watts.
    pub p_t: f64,
    /// User antenna gain G_u, linear.
    pub g_u: f64,
    /// Carrier frequency f in Hz.
    pub f: f64,
    /// Noise power P_N in watts.
    pub p_n: f64,
    /// SNR threshold Γ, linear.
    pub gamma: f64,
    /// Reflection loss σ, linear, >= 1.
    pub sigma: f64,
}

impl RadioParams {
    pub fn new(p_t: f64, g_u: f64, f: f64, p_n: f64, gamma: f64, sigma: f64) -> Self {
        assert!(
            p_t > 0.0 && g_u > 0.0 && f > 0.0 && p_n > 0.0 && gamma > 0.0,
            "radio parameters must be strictly positive"
        );
        assert!(sigma >= 1.0, "a reflection never amplifies");
        Self {
            p_t,
            g_u,
            f,
            p_n,
            gamma,
            sigma,
        }
    }
}

/// Which reflected-range bound to use for d_0^v.
///
/// `Paper` reproduces the stated d_0/σ verbatim; `Friis` solves the
/// reflected link budget for the threshold, giving d_0/√σ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RangeMode {
    #[default]
    Paper,
    Friis,
}

/// Free-space SNR of the direct link at distance `d`.
pub fn snr_direct(radio: &RadioParams, beam: &BeamSpec, d: f64) -> Result<f64, CoverageError> {
    if d <= 0.0 {
        return Err(CoverageError::InvalidInput(format!(
            "direct-link distance must be positive, got {d}"
        )));
    }
    let denom = 4.0 * PI * d * radio.f;
    Ok(radio.p_t * beam.gain_linear * radio.g_u * SPEED_OF_LIGHT * SPEED_OF_LIGHT
        / (denom * denom * radio.p_n))
}

/// The unique distance d_0 at which the direct SNR equals the threshold.
pub fn threshold_distance_direct(radio: &RadioParams, beam: &BeamSpec) -> f64 {
    SPEED_OF_LIGHT / (4.0 * PI * radio.f)
        * (radio.p_t * beam.gain_linear * radio.g_u / (radio.gamma * radio.p_n)).sqrt()
}

/// Maximum total path length d_0^v for which a once-reflected link still
/// meets the threshold.
pub fn threshold_distance_reflected(
    radio: &RadioParams,
    beam: &BeamSpec,
    mode: RangeMode,
) -> f64 {
    let d0 = threshold_distance_direct(radio, beam);
    match mode {
        RangeMode::Paper => d0 / radio.sigma,
        RangeMode::Friis => d0 / radio.sigma.sqrt(),
    }
}

/// Direct-beam coverage: sector membership times range check times LOS
/// probability.
///
/// The user must be strictly interior to the sector; a user exactly on the
/// half-width is served by the reflected branch instead.
pub fn direct_coverage(
    radio: &RadioParams,
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
) -> f64 {
    debug_assert!(user.d > 0.0);
    let d0 = threshold_distance_direct(radio, beam);
    if !sector_interior(beam, user) || user.d > d0 {
        return 0.0;
    }
    let bp = blockage_params(env);
    p_los(&bp, user.d)
}

/// The virtual-user construction for an obstacle at distance `r` along the
/// beam axis with wall orientation `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VirtualUser {
    /// Direction of the mirrored user, radians in [0, 2π).
    pub theta_v: f64,
    /// BS to mirrored-user distance (the total specular path length).
    pub d_v: f64,
    /// BS to wall distance along `theta_v`, when the ray meets the line.
    pub d_rv: Option<f64>,
}

/// Mirror the user across the wall line anchored at distance `r` along the
/// beam axis with orientation `alpha`.
pub fn virtual_user(user: &PolarPoint, beam: &BeamSpec, r: f64, alpha: f64) -> VirtualUser {
    debug_assert!(r >= 0.0);
    let anchor = PolarPoint::new(beam.theta_j, r).to_cartesian();
    let line = MirrorLine::new(anchor, alpha);
    let mirrored = mirror_point(&line, user.to_cartesian());
    let theta_v = mirrored.angle();
    let d_v = mirrored.norm();
    let d_rv = ray_line_distance(theta_v, &line);
    VirtualUser { theta_v, d_v, d_rv }
}

/// Reflection angle ψ at the wall between the directions toward the BS and
/// toward the user, from the incoming direction `theta_in` and the wall
/// orientation `alpha`: ψ = π - 2γ with γ the acute incidence angle.
pub fn reflection_angle(theta_in: f64, alpha: f64) -> f64 {
    let diff = (theta_in - alpha).rem_euclid(PI);
    let gamma = diff.min(PI - diff);
    PI - 2.0 * gamma
}

/// Quadrature settings for the reflected-coverage integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadratureConfig {
    /// Cells per axis of the first midpoint grid.
    pub initial_grid: usize,
    /// How many grid doublings to attempt before giving up.
    pub max_refinements: u32,
    /// Successive-estimate relative tolerance.
    pub rel_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            initial_grid: 256,
            max_refinements: 7,
            rel_tol: 1e-4,
        }
    }
}

/// The reflected-coverage integrand without the density weight: the
/// indicator of a valid specular configuration times the LOS-after-
/// reflection probability. Exposed for oracle cross-checks.
pub fn reflected_integrand(
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
    d0v: f64,
    r: f64,
    alpha: f64,
) -> f64 {
    let vu = virtual_user(user, beam, r, alpha);
    if !sector_contains_angle(beam, vu.theta_v) {
        return 0.0;
    }
    let Some(d_rv) = vu.d_rv else {
        // The ray toward the virtual user misses the wall line entirely.
        return 0.0;
    };
    if vu.d_v < d_rv || vu.d_v > d0v {
        return 0.0;
    }
    let bp = blockage_params(env);
    let d_ru = vu.d_v - d_rv;
    let psi = reflection_angle(beam.theta_j, alpha);
    p_los_after_reflection(&bp, env, r, d_ru, psi).expect("psi construction keeps it in [0, π]")
}

/// Disjoint, ascending angular intervals.
type Intervals = Vec<(f64, f64)>;

const TAU: f64 = 2.0 * PI;

/// Intervals of t in [0, 2π) where cos(t - center) >= c.
fn arc_cos_ge(center: f64, c: f64) -> Intervals {
    if c > 1.0 {
        return Vec::new();
    }
    if c <= -1.0 {
        return vec![(0.0, TAU)];
    }
    let w = c.acos();
    let lo = (center - w).rem_euclid(TAU);
    let hi = lo + 2.0 * w;
    if hi <= TAU {
        vec![(lo, hi)]
    } else {
        vec![(0.0, hi - TAU), (lo, TAU)]
    }
}

/// Intersection of two disjoint ascending interval lists.
fn intersect_intervals(a: &Intervals, b: &Intervals) -> Intervals {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = a[i].0.max(b[j].0);
        let hi = a[i].1.min(b[j].1);
        if lo < hi {
            out.push((lo, hi));
        }
        if a[i].1 < b[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

/// Padding applied to the analytic support before node placement, radians.
/// Covers any float mismatch between the arc algebra here and the direct
/// indicator tests in [`reflected_integrand`]; nodes inside the padding
/// that fail the indicator simply evaluate to zero.
const SUPPORT_PAD: f64 = 1e-7;

/// The α-intervals on [0, π) where the specular-configuration indicator of
/// the reflected integrand can be nonzero, for a wall anchored at distance
/// `r` along the beam axis.
///
/// As the wall orientation α turns, the mirrored user traces the circle of
/// radius ρ = |u − A| around the anchor A, at circle parameter t = 2α − φ
/// with φ the direction of u − A. Every indicator condition is an arc in t:
///
/// - each sector half-plane n·v ≥ 0 becomes cos(t − arg n) ≥ −(A·n)/ρ;
/// - the range bound |v| ≤ d0v becomes cos(t − θ_j) ≤ (d0v²−r²−ρ²)/(2rρ);
/// - the mirrored ray crosses the wall iff the BS and the user sit on the
///   same side of it, which reduces to cos(t − θ_j) ≥ cos(φ − θ_j).
///
/// The intersection of those arcs, mapped back through α = (t + φ)/2 mod π
/// and padded by [`SUPPORT_PAD`], is returned.
fn alpha_support(beam: &BeamSpec, user: &PolarPoint, r: f64, d0v: f64) -> Intervals {
    let theta = beam.theta_j;
    let half = beam.mu_j / 2.0;
    let u = user.to_cartesian();
    let (ax, ay) = (r * theta.cos(), r * theta.sin());
    let (wx, wy) = (u.x - ax, u.y - ay);
    let rho = wx.hypot(wy);
    if rho < 1e-9 {
        // User on the anchor: the mirrored user never leaves the (excluded)
        // user position.
        return Vec::new();
    }
    let phi = wy.atan2(wx);

    // Wedge: inward normals of the two sector edges; A·n = r·sin(μ/2) for
    // both by symmetry.
    let c_wedge = -r * half.sin() / rho;
    let mut set = arc_cos_ge(theta - half + PI / 2.0, c_wedge);
    set = intersect_intervals(&set, &arc_cos_ge(theta + half - PI / 2.0, c_wedge));
    if r > 0.0 {
        let c_disk = (d0v * d0v - r * r - rho * rho) / (2.0 * r * rho);
        set = intersect_intervals(&set, &arc_cos_ge(theta + PI, -c_disk));
        set = intersect_intervals(&set, &arc_cos_ge(theta, (phi - theta).cos()));
    } else if user.d > d0v {
        return Vec::new();
    }

    // Map t-intervals to α = (t + φ)/2 mod π, pad, merge.
    let mut alphas: Intervals = Vec::new();
    for (t0, t1) in set {
        let len = (t1 - t0) / 2.0;
        let start = ((t0 + phi) / 2.0).rem_euclid(PI);
        let (lo, hi) = (start - SUPPORT_PAD, start + len + SUPPORT_PAD);
        if hi > PI {
            alphas.push((0.0, hi - PI));
            alphas.push((lo.max(0.0), PI));
        } else {
            alphas.push((lo.max(0.0), hi));
        }
    }
    alphas.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Intervals = Vec::new();
    for iv in alphas {
        match merged.last_mut() {
            Some(last) if iv.0 <= last.1 => last.1 = last.1.max(iv.1),
            _ => merged.push(iv),
        }
    }
    merged
}

/// Midpoint integration of the integrand over the support intervals of one
/// row, with node density matching a full-circle resolution of `n_alpha`.
fn row_integral(
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
    d0v: f64,
    r: f64,
    n_alpha: usize,
) -> f64 {
    let mut acc = 0.0;
    for (lo, hi) in alpha_support(beam, user, r, d0v) {
        let len = hi - lo;
        let m = ((len / PI * n_alpha as f64).ceil() as usize).max(4);
        let h = len / m as f64;
        let mut s = 0.0;
        for k in 0..m {
            let a = lo + (k as f64 + 0.5) * h;
            s += reflected_integrand(beam, env, user, d0v, r, a);
        }
        acc += s * h;
    }
    acc
}

/// One midpoint-rule pass at the given resolution: `n_r` rows over
/// r ∈ (0, d0v], each integrated in α over the analytically-resolved
/// support of the indicator (see [`alpha_support`]), so the quadrature
/// only ever samples the smooth part of the integrand.
///
/// The r rows are placed uniformly in the first-obstacle CDF
/// s = 1 − e^{−βr} rather than in r itself. The substitution absorbs the
/// density weight exactly and concentrates nodes where the obstacle mass
/// lives; in particular it resolves the cusp of the α-integral at
/// r = d_u (walls anchored right at the user) that a uniform r grid
/// aliases badly.
///
/// The atom at r = 0 is integrated separately over α. Row sums are reduced
/// in a fixed order so the result is identical under any thread count.
pub fn reflected_estimate_on_grid(
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
    d0v: f64,
    n_r: usize,
    n_alpha: usize,
) -> f64 {
    let bp = blockage_params(env);

    // Atom at r = 0: weight (1 - e^{-p}) / π.
    let atom = row_integral(beam, env, user, d0v, 0.0, n_alpha) * (1.0 - (-bp.p).exp()) / PI;

    // Continuous part: ∫ R(r) β e^{-(βr+p)}/π dr over r in (0, d0v]
    //               = (e^{-p}/π) ∫₀^S R(r(s)) ds with s = 1 - e^{-βr}.
    let s_max = -(-bp.beta * d0v).exp_m1();
    let h_s = s_max / n_r as f64;
    let row_sums: Vec<f64> = (0..n_r)
        .into_par_iter()
        .map(|i| {
            let s = (i as f64 + 0.5) * h_s;
            let r = -(1.0 - s).ln() / bp.beta;
            row_integral(beam, env, user, d0v, r, n_alpha)
        })
        .collect();
    let continuous: f64 = row_sums.iter().sum::<f64>() * h_s * (-bp.p).exp() / PI;

    atom + continuous
}

/// Reflected-beam coverage probability via refined midpoint quadrature.
///
/// Returns 0 immediately when the user sits strictly inside the beam
/// sector (the model's exclusivity) or when the environment has no
/// obstacles. A user exactly on the sector boundary is a reflected-branch
/// configuration and gets a full evaluation.
pub fn reflected_coverage(
    radio: &RadioParams,
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
    quad: &QuadratureConfig,
) -> Result<f64, CoverageError> {
    reflected_coverage_with_mode(radio, beam, env, user, quad, RangeMode::default())
}

pub fn reflected_coverage_with_mode(
    radio: &RadioParams,
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
    quad: &QuadratureConfig,
    mode: RangeMode,
) -> Result<f64, CoverageError> {
    if user.d <= 0.0 {
        return Err(CoverageError::InvalidInput(
            "user distance must be positive".into(),
        ));
    }
    if sector_interior(beam, user) {
        return Ok(0.0);
    }
    let bp = blockage_params(env);
    if bp.beta == 0.0 && bp.p == 0.0 {
        return Ok(0.0);
    }
    let d0v = threshold_distance_reflected(radio, beam, mode);

    let mut n = quad.initial_grid.max(2);
    let mut previous = reflected_estimate_on_grid(beam, env, user, d0v, n, n);
    let mut latest = previous;
    for _ in 0..quad.max_refinements.max(1) {
        n *= 2;
        let next = reflected_estimate_on_grid(beam, env, user, d0v, n, n);
        (previous, latest) = (latest, next);
        if (latest - previous).abs() <= quad.rel_tol * latest.abs() + 1e-12 {
            return Ok(latest.clamp(0.0, 1.0));
        }
    }
    Err(CoverageError::QuadratureNotConverged {
        previous,
        latest,
        rel_tol: quad.rel_tol,
    })
}

/// Decomposition of the total coverage probability into the two mutually
/// exclusive routes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverageBreakdown {
    pub p_direct: f64,
    pub p_reflected: f64,
    pub p_total: f64,
}

/// Total coverage probability: direct term plus reflected term, exactly one
/// of which is nonzero for any given beam/user pair.
pub fn total_coverage(
    radio: &RadioParams,
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
    quad: &QuadratureConfig,
) -> Result<CoverageBreakdown, CoverageError> {
    total_coverage_with_mode(radio, beam, env, user, quad, RangeMode::default())
}

pub fn total_coverage_with_mode(
    radio: &RadioParams,
    beam: &BeamSpec,
    env: &EnvParams,
    user: &PolarPoint,
    quad: &QuadratureConfig,
    mode: RangeMode,
) -> Result<CoverageBreakdown, CoverageError> {
    let p_direct = direct_coverage(radio, beam, env, user);
    let p_reflected = if sector_interior(beam, user) {
        0.0
    } else {
        reflected_coverage_with_mode(radio, beam, env, user, quad, mode)?
    };
    Ok(CoverageBreakdown {
        p_direct,
        p_reflected,
        p_total: p_direct + p_reflected,
    })
}
