use beamcov_core::coverage::*;
use beamcov_core::env_stats::{EnvParams, SizeDist};
use beamcov_core::geometry::{BeamSpec, PolarPoint};
use beamcov_core::sim::{mc_coverage, SimConfig};
use std::time::Instant;

fn db(x: f64) -> f64 { 10f64.powf(x / 10.0) }

fn main() {
    let radio = RadioParams::new(1.0, db(1.0), 30e9, db(-85.0) * 1e-3, 1.0, db(3.0));
    let env = EnvParams::new(2e-4, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0));
    let user = PolarPoint::new(90f64.to_radians(), 50.0);
    let quad = QuadratureConfig::default();
    for (tj, mu, g) in [(95.0, 10.0, 36.0), (100.0, 10.0, 36.0), (105.0, 10.0, 36.0), (105.0, 30.0, 12.0)] {
        let beam = BeamSpec::new((tj as f64).to_radians(), (mu as f64).to_radians(), db(g));
        let t0 = Instant::now();
        let analytic = reflected_coverage(&radio, &beam, &env, &user, &quad);
        let t_an = t0.elapsed();
        let cfg = SimConfig { n_drops: 20_000, base_seed: 1, ..SimConfig::default() };
        let t1 = Instant::now();
        let mc = mc_coverage(&env, &radio, &beam, &user, &cfg);
        let t_mc = t1.elapsed();
        println!(
            "beam {tj}/{mu}: analytic {:?} ({:.2?})  mc {:.5} +- {:.5} ({:.2?})",
            analytic, t_an, mc.p_hat, mc.stderr, t_mc
        );
    }
}
