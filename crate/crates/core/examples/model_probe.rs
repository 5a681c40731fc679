use beamcov_core::coverage::*;
use beamcov_core::env_stats::*;
use beamcov_core::geometry::*;
use beamcov_core::sim::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use std::f64::consts::PI;

fn db(x: f64) -> f64 { 10f64.powf(x / 10.0) }

fn main() {
    let radio = RadioParams::new(1.0, db(1.0), 30e9, db(-85.0) * 1e-3, 1.0, db(3.0));
    let env = EnvParams::new(2e-4, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0));
    let user = PolarPoint::new(100f64.to_radians(), 50.0); // swap: beam at 90, user off-axis
    let beam = BeamSpec::new(90f64.to_radians(), 10f64.to_radians(), db(36.0));
    // Equivalent by rotation to beam 100 / user 90.
    let d0v = threshold_distance_reflected(&radio, &beam, RangeMode::Paper);
    let bp = blockage_params(&env);

    // Probe A: Monte Carlo integration of the model integral itself.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 4_000_000usize;
    let mut acc = 0.0f64;
    for _ in 0..n {
        let alpha = rng.gen_range(0.0..PI);
        // draw r from the mixed first-obstacle law
        let u: f64 = rng.gen();
        let r = if u < 1.0 - (-bp.p).exp() {
            0.0
        } else {
            // conditional on r>0: Exp(beta)
            let e: f64 = rng.gen();
            -(1.0 - e).ln() / bp.beta
        };
        acc += reflected_integrand(&beam, &env, &user, d0v, r, alpha);
    }
    println!("probe A (MC of model integral): {:.5} +- {:.5}", acc / n as f64,
        (acc / n as f64 / n as f64).sqrt());

    // Probe B: geometric MC under model assumptions (first obstacle along the
    // beam axis only, infinite wall line, real blockage for the bounce leg).
    let cfg = SimConfig { base_seed: 11, ..SimConfig::default() };
    let uc = user.to_cartesian();
    let mut n_scene = 0; let mut n_cov = 0;
    for i in 0..100_000u64 {
        let scene = generate_scene(&env, &cfg, i);
        n_scene += 1;
        // first edge hit along the beam axis ray
        let Some((ri, ei, _q, r)) = first_edge_hit(CartesianPoint::ORIGIN, beam.theta_j, &scene.rects) else { continue };
        let (a, b) = scene.rects[ri].edge(ei);
        let seg_line = MirrorLine::through_segment(a, b);
        let alpha = {
            let (ux, uy) = seg_line.direction();
            uy.atan2(ux).rem_euclid(PI)
        };
        let vu = virtual_user(&user, &beam, r, alpha);
        if !sector_contains_angle(&beam, vu.theta_v) { continue; }
        let Some(d_rv) = vu.d_rv else { continue; };
        if vu.d_v < d_rv || vu.d_v > d0v { continue; }
        // reflection point on the infinite line along theta_v
        let q = CartesianPoint::new(d_rv * vu.theta_v.cos(), d_rv * vu.theta_v.sin());
        let dirx = (uc.x - q.x); let diry = (uc.y - q.y);
        let len = dirx.hypot(diry);
        let start = CartesianPoint::new(q.x + dirx / len * 1e-6, q.y + diry / len * 1e-6);
        let blocked = scene.rects.iter().enumerate().any(|(k, rect)| {
            k != ri && segment_intersects_rect(start, uc, rect)
        });
        if !blocked { n_cov += 1; }
    }
    println!("probe B (model-mimicking geometric MC): {:.5}", n_cov as f64 / n_scene as f64);
}
