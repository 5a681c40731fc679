use beamcov_core::coverage::{
    reflected_estimate_on_grid, threshold_distance_reflected, RangeMode,
};
use beamcov_core::geometry::PolarPoint;
use beamcov_core::harness::config::ExperimentConfig;

fn main() {
    let cfg = ExperimentConfig::default();
    let radio = cfg.radio.to_radio_params();
    let user50 = PolarPoint::new(90f64.to_radians(), 50.0);

    let cases = [
        (95.0, 10.0, 50.0, 1e-3),
        (95.0, 10.0, 50.0, 9.5e-4),
        (95.0, 10.0, 200.0, 2e-4),
        (105.0, 30.0, 200.0, 2e-4),
        (105.0, 30.0, 25.0, 2e-4),
        (105.0, 30.0, 50.0, 1e-3),
    ];
    for (theta_j, mu_j, d_u, lambda) in cases {
        let beam = cfg.radio.beam(theta_j, mu_j).unwrap();
        let env = cfg.env.with_lambda(lambda);
        let user = if d_u == 50.0 {
            user50
        } else {
            PolarPoint::new(90f64.to_radians(), d_u)
        };
        let d0v = threshold_distance_reflected(&radio, &beam, RangeMode::Paper);
        println!("case beam=({theta_j},{mu_j}) d={d_u} l={lambda}");
        let mut prev = f64::NAN;
        let mut n = 256;
        while n <= 16384 {
            let v = reflected_estimate_on_grid(&beam, &env, &user, d0v, n, n);
            println!("  n={n}: {v:.10e} rel_diff={:.3e}", ((v - prev) / v).abs());
            prev = v;
            n *= 2;
        }
    }
}
