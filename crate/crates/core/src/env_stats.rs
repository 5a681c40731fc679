//! Stochastic-environment statistics for the rectangular-obstacle process.
//!
//! Blockage parameters (β, p), line-of-sight probability, the mixed density
//! of the first-obstacle distance along a ray, and the approximate
//! probability of staying in LOS after a specular reflection.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::CoverageError;

/// A bounded length distribution reduced to its first two moments.
///
/// Uniform bounds are supported natively; anything else can be supplied
/// through the moments directly since the analytic model consumes nothing
/// beyond E[X] and E[X²].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SizeDist {
    /// Lower bound in meters (uniform case).
    pub lo: f64,
    /// Upper bound in meters (uniform case).
    pub hi: f64,
}

impl SizeDist {
    pub fn uniform(lo: f64, hi: f64) -> Self {
        assert!(lo > 0.0 && hi >= lo, "uniform bounds must satisfy 0 < lo <= hi");
        Self { lo, hi }
    }

    /// E[X] for U[lo, hi].
    pub fn mean(&self) -> f64 {
        (self.lo + self.hi) / 2.0
    }

    /// E[X²] for U[lo, hi]: (a² + ab + b²)/3.
    pub fn second_moment(&self) -> f64 {
        (self.lo * self.lo + self.lo * self.hi + self.hi * self.hi) / 3.0
    }
}

/// Obstacle process parameters: density plus the size moments the analytic
/// model needs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvParams {
    /// Building density λ in buildings/m², >= 0.
    pub lambda: f64,
    /// Length distribution of buildings.
    pub len_dist: SizeDist,
    /// Width distribution of buildings.
    pub wid_dist: SizeDist,
}

impl EnvParams {
    pub fn new(lambda: f64, len_dist: SizeDist, wid_dist: SizeDist) -> Self {
        assert!(lambda >= 0.0, "density must be non-negative");
        Self {
            lambda,
            len_dist,
            wid_dist,
        }
    }

    pub fn mean_len(&self) -> f64 {
        self.len_dist.mean()
    }

    pub fn mean_wid(&self) -> f64 {
        self.wid_dist.mean()
    }

    pub fn second_moment_len(&self) -> f64 {
        self.len_dist.second_moment()
    }

    pub fn second_moment_wid(&self) -> f64 {
        self.wid_dist.second_moment()
    }
}

/// Blockage parameters of the Boolean rectangle process: the mean obstacle
/// count crossing a path of length d is βd + p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlockageParams {
    /// β in 1/m.
    pub beta: f64,
    /// p, dimensionless.
    pub p: f64,
}

/// β = 2λ(E[L] + E[W])/π and p = λ·E[L]·E[W].
pub fn blockage_params(env: &EnvParams) -> BlockageParams {
    let beta = 2.0 * env.lambda * (env.mean_len() + env.mean_wid()) / PI;
    let p = env.lambda * env.mean_len() * env.mean_wid();
    BlockageParams { beta, p }
}

/// Probability that a path of length `d` from the BS is unobstructed:
/// e^{-(βd + p)}.
pub fn p_los(bp: &BlockageParams, d: f64) -> f64 {
    debug_assert!(d >= 0.0);
    (-(bp.beta * d + bp.p)).exp()
}

/// Mixed law of the distance from the BS to the first obstacle along a ray:
/// an atom at zero (an obstacle overlapping the BS) plus an exponential
/// continuous part.
///
/// With λ = 0 the law is defective (total mass 0); callers treat "no
/// obstacle" as the complementary event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedDensity {
    bp: BlockageParams,
}

impl MixedDensity {
    /// P(D_r = 0) = 1 - e^{-p}.
    pub fn atom_at_zero(&self) -> f64 {
        1.0 - (-self.bp.p).exp()
    }

    /// Density β e^{-(βr + p)} for r > 0.
    pub fn continuous_part(&self, r: f64) -> f64 {
        debug_assert!(r >= 0.0);
        self.bp.beta * (-(self.bp.beta * r + self.bp.p)).exp()
    }

    /// F(r) = 1 - e^{-(βr + p)} for r >= 0.
    pub fn cdf(&self, r: f64) -> f64 {
        debug_assert!(r >= 0.0);
        1.0 - (-(self.bp.beta * r + self.bp.p)).exp()
    }
}

pub fn first_obstacle_density(bp: &BlockageParams) -> MixedDensity {
    MixedDensity { bp: *bp }
}

/// Approximate probability that the user stays in LOS of the reflection
/// point, given the BS-obstacle distance `d_r`, the obstacle-user distance
/// `d_ru` and the reflection angle `psi` at the obstacle (angle between the
/// directions toward the BS and toward the user).
///
/// Three-branch piecewise form; `psi` near 0 means fold-back (the outgoing
/// segment retraces the cleared incoming corridor), `psi` near π means
/// grazing (the outgoing segment is independent of the incoming one).
pub fn p_los_after_reflection(
    bp: &BlockageParams,
    env: &EnvParams,
    d_r: f64,
    d_ru: f64,
    psi: f64,
) -> Result<f64, CoverageError> {
    if !(0.0..=PI).contains(&psi) {
        return Err(CoverageError::InvalidInput(format!(
            "reflection angle psi = {psi} outside [0, π]"
        )));
    }
    debug_assert!(d_r >= 0.0 && d_ru >= 0.0);
    let beta = bp.beta;
    let value = if psi > PI / 2.0 {
        (-beta * d_ru).exp()
    } else {
        // cot(ψ) diverges at ψ = 0; q = +inf then makes the min pick the
        // other operand, which is finite.
        let cot = if psi == 0.0 {
            f64::INFINITY
        } else {
            psi.cos() / psi.sin()
        };
        let q = env.lambda * cot * (env.second_moment_len() + env.second_moment_wid()) / 2.0;
        let capped = (-beta * d_ru + q).exp();
        if d_r >= d_ru {
            1.0_f64.min(capped)
        } else {
            (-beta * (d_ru - d_r)).exp().min(capped)
        }
    };
    Ok(value.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn iv_env(lambda: f64) -> EnvParams {
        EnvParams::new(lambda, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0))
    }

    #[test]
    fn uniform_moments() {
        let d = SizeDist::uniform(40.0, 60.0);
        assert_relative_eq!(d.mean(), 50.0, max_relative = 1e-12);
        assert_relative_eq!(d.second_moment(), 7600.0 / 3.0, max_relative = 1e-12);
        let w = SizeDist::uniform(30.0, 50.0);
        assert_relative_eq!(w.mean(), 40.0, max_relative = 1e-12);
        assert_relative_eq!(w.second_moment(), 4900.0 / 3.0, max_relative = 1e-12);
    }

    #[test]
    fn blockage_params_reference_values() {
        let bp = blockage_params(&iv_env(2e-4));
        assert_relative_eq!(bp.beta, 0.011459155902616466, max_relative = 1e-12);
        assert_relative_eq!(bp.beta, 0.0114592, max_relative = 1e-5);
        assert_relative_eq!(bp.p, 0.4, max_relative = 1e-12);

        let bp0 = blockage_params(&iv_env(0.0));
        assert_eq!(bp0.beta, 0.0);
        assert_eq!(bp0.p, 0.0);

        // Linear in λ
        let bp5 = blockage_params(&iv_env(1e-3));
        assert_relative_eq!(bp5.beta, 0.0572958, max_relative = 1e-5);
        assert_relative_eq!(bp5.p, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn p_los_reference_values() {
        let bp = blockage_params(&iv_env(2e-4));
        assert_relative_eq!(p_los(&bp, 50.0), 0.37795, max_relative = 1e-4);
        assert_relative_eq!(p_los(&bp, 100.0), (-(bp.beta * 100.0 + 0.4)).exp(), epsilon = 1e-15);
        assert_relative_eq!(p_los(&bp, 100.0), 0.2131, max_relative = 1e-3);
        let free = BlockageParams { beta: 0.0, p: 0.0 };
        assert_eq!(p_los(&free, 123.0), 1.0);
    }

    #[test]
    fn first_obstacle_density_values() {
        let bp = blockage_params(&iv_env(2e-4));
        let fd = first_obstacle_density(&bp);
        assert_relative_eq!(fd.atom_at_zero(), 0.32968, max_relative = 1e-4);
        assert_relative_eq!(fd.continuous_part(0.0), 0.0076809, max_relative = 1e-4);

        // Atom plus continuous mass integrates to one (tail beyond 3500 m
        // is below 1e-16).
        let integral = simpson(|r| fd.continuous_part(r), 0.0, 3500.0, 200_000);
        assert_relative_eq!(fd.atom_at_zero() + integral, 1.0, epsilon = 1e-10);
    }

    fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        assert!(n % 2 == 0);
        let h = (b - a) / n as f64;
        let mut sum = f(a) + f(b);
        for i in 1..n {
            sum += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        sum * h / 3.0
    }

    #[test]
    fn first_obstacle_density_defective_at_zero_density() {
        let bp = BlockageParams { beta: 0.0, p: 0.0 };
        let fd = first_obstacle_density(&bp);
        assert_eq!(fd.atom_at_zero(), 0.0);
        assert_eq!(fd.continuous_part(10.0), 0.0);
        assert_eq!(fd.cdf(1e9), 0.0);
    }

    #[test]
    fn reflection_los_branches() {
        let env = iv_env(2e-4);
        let bp = blockage_params(&env);

        // Grazing branch: plain LOS over d_ru.
        let p3 = p_los_after_reflection(&bp, &env, 50.0, 30.0, 3.0 * PI / 4.0).unwrap();
        assert_relative_eq!(p3, (-0.0114592_f64 * 30.0).exp(), max_relative = 1e-4);
        assert_relative_eq!(p3, 0.70910, max_relative = 1e-4);

        // First branch with the cap active: q = 0.416667 at ψ = π/4.
        let p1 = p_los_after_reflection(&bp, &env, 50.0, 30.0, PI / 4.0).unwrap();
        assert_relative_eq!(p1, 1.0, max_relative = 1e-12);

        // Second branch with cot divergence handled by the min cap.
        let p2 = p_los_after_reflection(&bp, &env, 10.0, 30.0, 1e-12).unwrap();
        assert_relative_eq!(p2, (-bp.beta * 20.0).exp(), max_relative = 1e-9);
        assert_relative_eq!(p2, 0.7952, max_relative = 1e-3);
        let p2_exact_zero = p_los_after_reflection(&bp, &env, 10.0, 30.0, 0.0).unwrap();
        assert_relative_eq!(p2_exact_zero, p2, max_relative = 1e-9);
    }

    #[test]
    fn reflection_los_rejects_bad_psi() {
        let env = iv_env(2e-4);
        let bp = blockage_params(&env);
        assert!(p_los_after_reflection(&bp, &env, 1.0, 1.0, -0.1).is_err());
        assert!(p_los_after_reflection(&bp, &env, 1.0, 1.0, PI + 0.1).is_err());
    }

    #[test]
    fn reflection_los_continuous_at_right_angle() {
        let env = iv_env(2e-4);
        let bp = blockage_params(&env);
        for (d_r, d_ru) in [(50.0, 30.0), (10.0, 30.0), (30.0, 30.0)] {
            let below = p_los_after_reflection(&bp, &env, d_r, d_ru, PI / 2.0 - 1e-9).unwrap();
            let above = p_los_after_reflection(&bp, &env, d_r, d_ru, PI / 2.0 + 1e-9).unwrap();
            assert_relative_eq!(below, above, epsilon = 1e-7);
        }
    }

    proptest! {
        #[test]
        fn p_los_monotone_in_distance(
            lambda in 0.0f64..1e-3, d1 in 0.0f64..500.0, d2 in 0.0f64..500.0,
        ) {
            let bp = blockage_params(&iv_env(lambda));
            let (lo, hi) = if d1 < d2 { (d1, d2) } else { (d2, d1) };
            prop_assert!(p_los(&bp, lo) >= p_los(&bp, hi));
            prop_assert!(p_los(&bp, hi) > 0.0 && p_los(&bp, lo) <= 1.0);
        }

        #[test]
        fn cdf_decomposes_into_atom_plus_integral(
            lambda in 1e-5f64..1e-3, r_end in 1.0f64..500.0,
        ) {
            let bp = blockage_params(&iv_env(lambda));
            let fd = first_obstacle_density(&bp);
            let integral = simpson(|r| fd.continuous_part(r), 0.0, r_end, 20_000);
            prop_assert!((fd.atom_at_zero() + integral - fd.cdf(r_end)).abs() < 1e-10);
        }

        #[test]
        fn reflection_los_is_probability(
            lambda in 0.0f64..1e-3,
            d_r in 0.0f64..500.0, d_ru in 0.0f64..500.0,
            psi in 0.0f64..PI,
        ) {
            let env = iv_env(lambda);
            let bp = blockage_params(&env);
            let v = p_los_after_reflection(&bp, &env, d_r, d_ru, psi).unwrap();
            prop_assert!((0.0..=1.0).contains(&v));
        }

        #[test]
        fn reflection_los_continuous_at_equal_distances(
            lambda in 1e-5f64..1e-3, d in 1.0f64..300.0, psi in 0.01f64..1.5707,
        ) {
            let env = iv_env(lambda);
            let bp = blockage_params(&env);
            let a = p_los_after_reflection(&bp, &env, d - 1e-7, d, psi).unwrap();
            let b = p_los_after_reflection(&bp, &env, d + 1e-7, d, psi).unwrap();
            prop_assert!((a - b).abs() < 1e-6);
        }

        #[test]
        fn degenerate_reflection_at_bs_reduces_to_plain_los(
            lambda in 1e-5f64..1e-3, d_ru in 1.0f64..300.0, psi in 0.01f64..1.5707,
        ) {
            let env = iv_env(lambda);
            let bp = blockage_params(&env);
            // q >= 0 on this branch, so the plain-LOS operand wins the min.
            let v = p_los_after_reflection(&bp, &env, 0.0, d_ru, psi).unwrap();
            prop_assert!((v - (-bp.beta * d_ru).exp()).abs() < 1e-12);
        }
    }
}
