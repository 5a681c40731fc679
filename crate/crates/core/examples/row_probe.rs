use beamcov_core::coverage::*;
use beamcov_core::env_stats::*;
use beamcov_core::geometry::*;
use std::f64::consts::PI;

fn db(x: f64) -> f64 { 10f64.powf(x / 10.0) }

fn main() {
    let radio = RadioParams::new(1.0, db(1.0), 30e9, db(-85.0) * 1e-3, 1.0, db(3.0));
    let env = EnvParams::new(2e-4, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0));
    let user = PolarPoint::new(90f64.to_radians(), 50.0);
    let beam = BeamSpec::new(95f64.to_radians(), 10f64.to_radians(), db(36.0));
    let d0v = threshold_distance_reflected(&radio, &beam, RangeMode::Paper);
    let n_a = 40000;
    let h = PI / n_a as f64;
    for i in 0..60 {
        let r = 30.0 + i as f64 * 0.7;
        let mut s = 0.0;
        for k in 0..n_a {
            let a = (k as f64 + 0.5) * h;
            s += reflected_integrand(&beam, &env, &user, d0v, r, a);
        }
        println!("r={r:.1}  R(r)={:.6}", s * h);
    }
}
