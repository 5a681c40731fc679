use beamcov_core::coverage::*;
use beamcov_core::env_stats::*;
use beamcov_core::geometry::*;
use beamcov_core::sim::*;

fn db(x: f64) -> f64 { 10f64.powf(x / 10.0) }

fn main() {
    let radio = RadioParams::new(1.0, db(1.0), 30e9, db(-85.0) * 1e-3, 1.0, db(3.0));
    let env = EnvParams::new(2e-4, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0));
    let user = PolarPoint::new(90f64.to_radians(), 50.0);
    let uc = user.to_cartesian();
    let cfg = SimConfig { base_seed: 5, ..SimConfig::default() };
    let n = 50_000u64;

    for (tj, mu, g) in [(95.0, 10.0, 36.0), (100.0, 10.0, 36.0), (105.0, 10.0, 36.0), (105.0, 30.0, 12.0)] {
        let beam = BeamSpec::new((tj as f64).to_radians(), (mu as f64).to_radians(), db(g));
        let mut n_refl = 0u64;       // image-method covered, user not swallowed
        let mut n_refl_bsout = 0u64; // same, but BS also outside all buildings
        let mut n_bs_in = 0u64;
        for i in 0..n {
            let scene = generate_scene(&env, &cfg, i);
            if scene.rects.iter().any(|r| r.contains_strict(uc)) { continue; }
            let bs_in = scene.rects.iter().any(|r| r.contains_strict(CartesianPoint::ORIGIN));
            if bs_in { n_bs_in += 1; }
            if reflected_covered(&scene, &radio, &beam, &user, RangeMode::Paper) {
                n_refl += 1;
                if !bs_in { n_refl_bsout += 1; }
            }
        }
        println!("beam {tj}/{mu}: refl={:.4} refl_bs_out={:.4} (bs_in freq {:.3})",
            n_refl as f64 / n as f64, n_refl_bsout as f64 / n as f64, n_bs_in as f64 / n as f64);
    }
}
