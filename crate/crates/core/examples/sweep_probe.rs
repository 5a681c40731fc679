use beamcov_core::coverage::*;
use beamcov_core::env_stats::{EnvParams, SizeDist};
use beamcov_core::geometry::*;
use beamcov_core::sim::*;

fn db(x: f64) -> f64 { 10f64.powf(x / 10.0) }

fn sweep_reflected(scene: &Scene, beam: &BeamSpec, user: CartesianPoint, d0v: f64, n_rays: usize, capture: f64) -> bool {
    let lo = beam.theta_j - beam.mu_j / 2.0;
    for i in 0..n_rays {
        let theta = lo + beam.mu_j * (i as f64 + 0.5) / n_rays as f64;
        let Some((ri, ei, q, t)) = first_edge_hit(CartesianPoint::ORIGIN, theta, &scene.rects) else { continue };
        let (a, b) = scene.rects[ri].edge(ei);
        let line = MirrorLine::through_segment(a, b);
        let (ux, uy) = line.direction();
        let (dx, dy) = (theta.cos(), theta.sin());
        let dot = dx * ux + dy * uy;
        let (rx, ry) = (2.0 * dot * ux - dx, 2.0 * dot * uy - dy);
        let (wx, wy) = (user.x - q.x, user.y - q.y);
        let s = wx * rx + wy * ry;
        if s <= 0.0 { continue; }
        let miss = (wx - s * rx).hypot(wy - s * ry);
        if miss > capture { continue; }
        if t + s > d0v { continue; }
        let start = CartesianPoint::new(q.x + rx * 1e-6, q.y + ry * 1e-6);
        let blocked = scene.rects.iter().any(|r| segment_intersects_rect(start, user, r));
        if !blocked { return true; }
    }
    false
}

fn main() {
    let radio = RadioParams::new(1.0, db(1.0), 30e9, db(-85.0) * 1e-3, 1.0, db(3.0));
    let env = EnvParams::new(2e-4, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0));
    let user = PolarPoint::new(90f64.to_radians(), 50.0);
    let uc = user.to_cartesian();
    let cfg = SimConfig { base_seed: 3, ..SimConfig::default() };

    for (tj, mu) in [(95.0, 10.0), (100.0, 10.0), (105.0, 10.0)] {
        let beam = BeamSpec::new((tj as f64).to_radians(), (mu as f64).to_radians(), db(36.0));
        let d0v = threshold_distance_reflected(&radio, &beam, RangeMode::Paper);
        let mut n = 0; let mut n_img = 0; let mut n_swp = 0; let mut dis = 0;
        for i in 0..2000u64 {
            let scene = generate_scene(&env, &cfg, i);
            if scene.rects.iter().any(|r| r.contains_strict(uc)) { continue; }
            n += 1;
            let img = reflected_covered(&scene, &radio, &beam, &user, RangeMode::Paper);
            let swp = sweep_reflected(&scene, &beam, uc, d0v, 200_000, 0.1);
            if img { n_img += 1; }
            if swp { n_swp += 1; }
            if img != swp { dis += 1; }
        }
        println!("beam {tj}/{mu}: n={n} image={n_img} ({:.4}) sweep={n_swp} ({:.4}) disagree={dis}",
            n_img as f64 / n as f64, n_swp as f64 / n as f64);
    }
}
