use beamcov_core::env_stats::{EnvParams, SizeDist};
use beamcov_core::geometry::{segment_intersects_rect, CartesianPoint, PolarPoint};
use beamcov_core::sim::{generate_scene, SimConfig};

fn main() {
    let env = EnvParams::new(2e-4, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0));
    let cfg = SimConfig { base_seed: 17, ..SimConfig::default() };
    let user = PolarPoint::new(90f64.to_radians(), 50.0);
    let uc = user.to_cartesian();
    let n = 20000u64;
    let mut clear = 0;
    let mut swallowed = 0;
    for i in 0..n {
        let s = generate_scene(&env, &cfg, i);
        if !s.rects.iter().any(|r| segment_intersects_rect(CartesianPoint::ORIGIN, uc, r)) {
            clear += 1;
        }
        if s.rects.iter().any(|r| r.contains_strict(CartesianPoint::ORIGIN) || r.contains_strict(uc)) {
            swallowed += 1;
        }
    }
    println!("raw LOS freq = {}", clear as f64 / n as f64);
    println!("swallow freq = {}", swallowed as f64 / n as f64);
}
