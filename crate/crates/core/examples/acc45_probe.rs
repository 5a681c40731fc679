use std::f64::consts::PI;

use beamcov_core::coverage::{
    direct_coverage, reflected_coverage_with_mode, reflected_estimate_on_grid,
    reflected_integrand, threshold_distance_reflected, RangeMode,
};
use beamcov_core::env_stats::{blockage_params, EnvParams};
use beamcov_core::geometry::{sector_interior, BeamSpec, PolarPoint};
use beamcov_core::harness::config::ExperimentConfig;
use beamcov_core::harness::figures::reference_beams;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn riemann_oracle(beam: &BeamSpec, env: &EnvParams, user: &PolarPoint, d0v: f64, n: usize) -> f64 {
    let bp = blockage_params(env);
    let h_a = PI / n as f64;
    let atom: f64 = (0..n)
        .map(|k| reflected_integrand(beam, env, user, d0v, 0.0, (k as f64 + 0.5) * h_a))
        .sum::<f64>()
        * h_a;
    let h_r = d0v / n as f64;
    let rows: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let r = (i as f64 + 0.5) * h_r;
            let row: f64 = (0..n)
                .map(|k| reflected_integrand(beam, env, user, d0v, r, (k as f64 + 0.5) * h_a))
                .sum();
            row * (-bp.beta * r).exp()
        })
        .collect();
    let continuous = rows.iter().sum::<f64>() * bp.beta * h_r * h_a;
    ((1.0 - (-bp.p).exp()) * atom + (-bp.p).exp() * continuous) / PI
}

fn main() {
    let cfg = ExperimentConfig::default();
    let env = cfg.env.to_env_params();
    let radio = cfg.radio.to_radio_params();
    let user_ref = PolarPoint::new(90f64.to_radians(), 50.0);

    println!("== criterion 5 ==");
    let bp = blockage_params(&env);
    let beam_direct = cfg.radio.beam(90.0, 10.0).unwrap();
    let expected_ratio = (-bp.beta * 50.0).exp();
    for d in [25.0, 50.0, 75.0, 100.0, 125.0, 150.0] {
        let p1 = direct_coverage(&radio, &beam_direct, &env, &PolarPoint::new(90f64.to_radians(), d));
        let p2 = direct_coverage(
            &radio,
            &beam_direct,
            &env,
            &PolarPoint::new(90f64.to_radians(), d + 50.0),
        );
        println!("d={d}: ratio={} expected={} diff={:e}", p2 / p1, expected_ratio, (p2 / p1 - expected_ratio).abs());
    }
    for (theta_j, mu_j) in [(95.0, 10.0), (105.0, 30.0)] {
        let beam = cfg.radio.beam(theta_j, mu_j).unwrap();
        for d in cfg.users.sweep_distances() {
            let r = reflected_coverage_with_mode(
                &radio,
                &beam,
                &env,
                &PolarPoint::new(90f64.to_radians(), d),
                &cfg.quad,
                RangeMode::Paper,
            );
            println!("beam ({theta_j},{mu_j}) d={d}: {r:?}");
        }
    }

    println!("== criterion 4 doubling ==");
    let mut configs: Vec<(BeamSpec, PolarPoint, EnvParams, String)> = Vec::new();
    for theta_j in cfg.beams.tiling_centers_deg() {
        let beam = cfg.radio.beam(theta_j, cfg.beams.tiling_mu_deg).unwrap();
        configs.push((beam, user_ref, env, format!("fig3 {theta_j}")));
    }
    for (theta_j, mu_j) in reference_beams(90.0) {
        let beam = cfg.radio.beam(theta_j, mu_j).unwrap();
        for d in cfg.users.sweep_distances() {
            configs.push((
                beam,
                PolarPoint::new(90f64.to_radians(), d),
                env,
                format!("fig5 {theta_j}/{mu_j} d={d}"),
            ));
        }
        for lambda in cfg.env.lambda_values() {
            if lambda > 0.0 {
                configs.push((
                    beam,
                    user_ref,
                    cfg.env.with_lambda(lambda),
                    format!("fig6 {theta_j}/{mu_j} l={lambda}"),
                ));
            }
        }
    }
    for (beam, user, env, label) in &configs {
        if sector_interior(beam, user) {
            continue;
        }
        let d0v = threshold_distance_reflected(&radio, beam, RangeMode::Paper);
        let coarse = reflected_estimate_on_grid(beam, env, user, d0v, 512, 512);
        let fine = reflected_estimate_on_grid(beam, env, user, d0v, 1024, 1024);
        let ok = (fine - coarse).abs() <= 1e-4 * fine.abs() + 1e-12;
        if !ok {
            println!("DOUBLING FAIL {label}: 512={coarse:e} 1024={fine:e} rel={:e}", ((fine - coarse) / fine).abs());
        }
    }
    println!("doubling scan done");

    println!("== criterion 4 riemann ==");
    let mut rng = ChaCha8Rng::seed_from_u64(0x0401);
    for i in 0..5 {
        let lambda = rng.gen_range(1e-4..5e-4);
        let mu: f64 = if rng.gen_bool(0.5) { 10.0 } else { 30.0 };
        let theta_j = 90.0 + rng.gen_range(mu / 2.0 + 1.0..mu / 2.0 + 20.0);
        let d_u = rng.gen_range(30.0..120.0);
        let beam = cfg.radio.beam(theta_j, mu).unwrap();
        let env_i = cfg.env.with_lambda(lambda);
        let user = PolarPoint::new(90f64.to_radians(), d_u);
        let production = reflected_coverage_with_mode(&radio, &beam, &env_i, &user, &cfg.quad, RangeMode::Paper);
        let d0v = threshold_distance_reflected(&radio, &beam, RangeMode::Paper);
        let brute = riemann_oracle(&beam, &env_i, &user, d0v, 4000);
        println!(
            "cfg {i}: l={lambda:.3e} beam=({theta_j:.2},{mu}) d_u={d_u:.1}: production={production:?} riemann={brute}"
        );
    }
}
