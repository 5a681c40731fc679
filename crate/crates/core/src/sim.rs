//! Monte Carlo ground truth.
//!
//! Generates Poisson building scenes, decides per-scene beam coverage by
//! exact geometry (direct LOS plus image-method first-order reflections off
//! every building edge) and aggregates estimates with binomial confidence
//! intervals. Every drop derives its own RNG stream from (base seed, drop
//! index), so results are identical under any thread scheduling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coverage::{threshold_distance_direct, threshold_distance_reflected, RadioParams, RangeMode};
use crate::env_stats::EnvParams;
use crate::error::CoverageError;
use crate::geometry::{
    first_edge_hit, mirror_point, ray_segment_hit, sector_contains_angle, sector_interior,
    segment_intersects_rect, BeamSpec, CartesianPoint, MirrorLine, OrientedRect, PolarPoint,
};

/// What to do with scenes where a building swallows the BS or the user.
///
/// `CountBlocked` is the default: it keeps every raw scene, so coverage
/// estimates stay unconditional and comparable to the closed-form blockage
/// statistics. `RejectOverlap` conditions on outdoor endpoints, which
/// visibly inflates LOS frequency at realistic densities; it is kept for
/// sensitivity runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacementPolicy {
    /// Redraw the scene from a fresh sub-seed while a building strictly
    /// contains the BS or the user.
    RejectOverlap,
    /// Keep the scene; a drop with the user strictly inside a building is
    /// scored as not covered.
    #[default]
    CountBlocked,
}

/// Simulation settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SimConfig {
    /// Side of the square simulation area in meters; the BS sits at its
    /// center.
    pub area_side: f64,
    /// Number of independent scene drops.
    pub n_drops: usize,
    pub base_seed: u64,
    pub range_mode: RangeMode,
    pub placement_policy: PlacementPolicy,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            area_side: 500.0,
            n_drops: 10_000,
            base_seed: 0,
            range_mode: RangeMode::Paper,
            placement_policy: PlacementPolicy::default(),
        }
    }
}

/// One realized building drop.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub rects: Vec<OrientedRect>,
    pub base_seed: u64,
    pub index: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn drop_rng(base_seed: u64, index: u64, attempt: u64) -> ChaCha8Rng {
    let mixed = splitmix64(base_seed ^ splitmix64(index ^ splitmix64(attempt)));
    ChaCha8Rng::seed_from_u64(mixed)
}

fn generate_rects(env: &EnvParams, cfg: &SimConfig, rng: &mut ChaCha8Rng) -> Vec<OrientedRect> {
    let mean_count = env.lambda * cfg.area_side * cfg.area_side;
    let count = if mean_count > 0.0 {
        Poisson::new(mean_count).expect("positive mean").sample(rng) as usize
    } else {
        0
    };
    let half = cfg.area_side / 2.0;
    let sample = |rng: &mut ChaCha8Rng, lo: f64, hi: f64| {
        if hi > lo {
            rng.gen_range(lo..hi)
        } else {
            lo
        }
    };
    (0..count)
        .map(|_| {
            let cx = rng.gen_range(-half..half);
            let cy = rng.gen_range(-half..half);
            let l = sample(rng, env.len_dist.lo, env.len_dist.hi);
            let w = sample(rng, env.wid_dist.lo, env.wid_dist.hi);
            let phi = rng.gen_range(0.0..std::f64::consts::PI);
            OrientedRect::new(CartesianPoint::new(cx, cy), l, w, phi)
        })
        .collect()
}

/// Generate the scene for the given drop index. Deterministic: the same
/// (base seed, index, environment, config) always yields the same scene,
/// field for field.
pub fn generate_scene(env: &EnvParams, cfg: &SimConfig, index: u64) -> Scene {
    let mut rng = drop_rng(cfg.base_seed, index, 0);
    Scene {
        rects: generate_rects(env, cfg, &mut rng),
        base_seed: cfg.base_seed,
        index,
    }
}

/// Scene for a drop with the placement policy applied against the user
/// position. Under `RejectOverlap`, redraw from successive sub-seeds until
/// neither the BS nor the user is strictly inside a building.
pub fn scene_for_drop(env: &EnvParams, cfg: &SimConfig, index: u64, user: &PolarPoint) -> Scene {
    let user_c = user.to_cartesian();
    for attempt in 0u64.. {
        let mut rng = drop_rng(cfg.base_seed, index, attempt);
        let rects = generate_rects(env, cfg, &mut rng);
        let blocked = rects.iter().any(|r| {
            r.contains_strict(CartesianPoint::ORIGIN) || r.contains_strict(user_c)
        });
        if !blocked || cfg.placement_policy == PlacementPolicy::CountBlocked {
            return Scene {
                rects,
                base_seed: cfg.base_seed,
                index,
            };
        }
    }
    unreachable!("an empty redraw always terminates the loop")
}

fn user_swallowed(scene: &Scene, user_c: CartesianPoint) -> bool {
    scene.rects.iter().any(|r| r.contains_strict(user_c))
}

/// Direct coverage of one scene: strict sector membership, range, and a
/// clear BS-user segment. A user exactly on the sector boundary is served
/// by the reflected route, never the direct one.
pub fn direct_covered(scene: &Scene, radio: &RadioParams, beam: &BeamSpec, user: &PolarPoint) -> bool {
    if !sector_interior(beam, user) {
        return false;
    }
    if user.d > threshold_distance_direct(radio, beam) {
        return false;
    }
    let user_c = user.to_cartesian();
    !scene
        .rects
        .iter()
        .any(|r| segment_intersects_rect(CartesianPoint::ORIGIN, user_c, r))
}

/// First-order reflected coverage by exhaustive image-method enumeration
/// over every edge of every building.
///
/// An edge yields coverage iff the mirrored user lies within range, the
/// specular point Q falls on the edge itself, the launch direction is inside
/// the beam sector, Q is the first boundary hit along that direction, and
/// the bounce segment Q-user is unobstructed.
pub fn reflected_covered(
    scene: &Scene,
    radio: &RadioParams,
    beam: &BeamSpec,
    user: &PolarPoint,
    range_mode: RangeMode,
) -> bool {
    let d0v = threshold_distance_reflected(radio, beam, range_mode);
    let user_c = user.to_cartesian();
    for rect in &scene.rects {
        for ei in 0..4 {
            let (a, b) = rect.edge(ei);
            let line = MirrorLine::through_segment(a, b);
            let image = mirror_point(&line, user_c);
            let d_v = image.norm();
            if d_v > d0v || d_v < 1e-9 {
                continue;
            }
            let theta_q = image.angle();
            if !sector_contains_angle(beam, theta_q) {
                continue;
            }
            // Q must lie on this edge and within the BS-image segment.
            let Some((t_q, q)) = ray_segment_hit(CartesianPoint::ORIGIN, theta_q, a, b) else {
                continue;
            };
            if t_q > d_v + 1e-9 {
                continue;
            }
            // Q must be the first building boundary along the launch ray.
            if let Some((_, _, _, t_first)) = first_edge_hit(CartesianPoint::ORIGIN, theta_q, &scene.rects)
            {
                if t_first < t_q - 1e-9 {
                    continue;
                }
            }
            // The bounce leg must be clear of every building. Q itself sits
            // on the reflecting wall, so nudge the start off the boundary.
            let leg = q.distance_to(user_c);
            if leg > 1e-6 {
                let q_off = CartesianPoint::new(
                    q.x + (user_c.x - q.x) / leg * 1e-6,
                    q.y + (user_c.y - q.y) / leg * 1e-6,
                );
                if scene
                    .rects
                    .iter()
                    .any(|r| segment_intersects_rect(q_off, user_c, r))
                {
                    continue;
                }
            }
            return true;
        }
    }
    false
}

/// A Monte Carlo probability estimate with its binomial error bars.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub p_hat: f64,
    pub stderr: f64,
    pub ci95: (f64, f64),
    pub n: usize,
    pub n_direct: usize,
    pub n_reflected: usize,
}

impl MCEstimate {
    fn from_counts(n_direct: usize, n_reflected: usize, n: usize) -> Self {
        let p_hat = (n_direct + n_reflected) as f64 / n as f64;
        let stderr = (p_hat * (1.0 - p_hat) / n as f64).sqrt();
        Self {
            p_hat,
            stderr,
            ci95: (
                (p_hat - 1.96 * stderr).max(0.0),
                (p_hat + 1.96 * stderr).min(1.0),
            ),
            n,
            n_direct,
            n_reflected,
        }
    }
}

fn drop_outcome(
    env: &EnvParams,
    radio: &RadioParams,
    beam: &BeamSpec,
    user: &PolarPoint,
    cfg: &SimConfig,
    index: u64,
) -> (bool, bool) {
    let scene = scene_for_drop(env, cfg, index, user);
    if cfg.placement_policy == PlacementPolicy::CountBlocked
        && user_swallowed(&scene, user.to_cartesian())
    {
        return (false, false);
    }
    let direct = direct_covered(&scene, radio, beam, user);
    // Reflections only count when the direct route fails, mirroring the
    // model's mutual exclusivity.
    let reflected = !direct && reflected_covered(&scene, radio, beam, user, cfg.range_mode);
    (direct, reflected)
}

/// Coverage probability of one beam at one user position over `n_drops`
/// independent scenes.
pub fn mc_coverage(
    env: &EnvParams,
    radio: &RadioParams,
    beam: &BeamSpec,
    user: &PolarPoint,
    cfg: &SimConfig,
) -> MCEstimate {
    let outcomes: Vec<(bool, bool)> = (0..cfg.n_drops as u64)
        .into_par_iter()
        .map(|i| drop_outcome(env, radio, beam, user, cfg, i))
        .collect();
    let n_direct = outcomes.iter().filter(|o| o.0).count();
    let n_reflected = outcomes.iter().filter(|o| o.1).count();
    MCEstimate::from_counts(n_direct, n_reflected, cfg.n_drops)
}

/// Cell coverage: combined (any beam, direct or reflected) and direct-only
/// estimates over the same shared scenes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellEstimate {
    pub combined: MCEstimate,
    pub direct_only: MCEstimate,
}

/// Probability that at least one beam of the set covers the user.
pub fn mc_cell_coverage(
    env: &EnvParams,
    radio: &RadioParams,
    beams: &[BeamSpec],
    user: &PolarPoint,
    cfg: &SimConfig,
) -> CellEstimate {
    assert!(!beams.is_empty(), "beam set must be non-empty");
    let outcomes: Vec<(bool, bool)> = (0..cfg.n_drops as u64)
        .into_par_iter()
        .map(|i| {
            let scene = scene_for_drop(env, cfg, i, user);
            if cfg.placement_policy == PlacementPolicy::CountBlocked
                && user_swallowed(&scene, user.to_cartesian())
            {
                return (false, false);
            }
            let direct_any = beams.iter().any(|b| direct_covered(&scene, radio, b, user));
            let reflected_any = !direct_any
                && beams
                    .iter()
                    .any(|b| reflected_covered(&scene, radio, b, user, cfg.range_mode));
            (direct_any, reflected_any)
        })
        .collect();
    let n_direct = outcomes.iter().filter(|o| o.0).count();
    let n_reflected = outcomes.iter().filter(|o| o.1).count();
    CellEstimate {
        combined: MCEstimate::from_counts(n_direct, n_reflected, cfg.n_drops),
        direct_only: MCEstimate::from_counts(n_direct, 0, cfg.n_drops),
    }
}

/// Scene dump: one rectangle per line, `cx cy length width phi`,
/// space-separated decimal.
pub fn scene_to_text(scene: &Scene) -> String {
    let mut out = String::new();
    for r in &scene.rects {
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            r.center.x, r.center.y, r.length, r.width, r.phi
        ));
    }
    out
}

/// Parse a scene dump produced by [`scene_to_text`].
pub fn scene_from_text(text: &str) -> Result<Vec<OrientedRect>, CoverageError> {
    let mut rects = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<f64> = line
            .split_whitespace()
            .map(|f| {
                f.parse::<f64>().map_err(|e| {
                    CoverageError::InvalidInput(format!(
                        "scene line {}: bad number {f:?}: {e}",
                        lineno + 1
                    ))
                })
            })
            .collect::<Result<_, _>>()?;
        if fields.len() != 5 {
            return Err(CoverageError::InvalidInput(format!(
                "scene line {}: expected 5 fields, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        rects.push(OrientedRect::new(
            CartesianPoint::new(fields[0], fields[1]),
            fields[2],
            fields[3],
            fields[4],
        ));
    }
    Ok(rects)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::env_stats::SizeDist;
    use approx::assert_relative_eq;

    fn deg(x: f64) -> f64 {
        x.to_radians()
    }

    fn db(x: f64) -> f64 {
        10f64.powf(x / 10.0)
    }

    fn radio() -> RadioParams {
        RadioParams::new(1.0, db(1.0), 30e9, db(-85.0) * 1e-3, 1.0, db(3.0))
    }

    fn env(lambda: f64) -> EnvParams {
        EnvParams::new(lambda, SizeDist::uniform(40.0, 60.0), SizeDist::uniform(30.0, 50.0))
    }

    #[test]
    fn scene_determinism() {
        let cfg = SimConfig {
            base_seed: 7,
            ..SimConfig::default()
        };
        let a = generate_scene(&env(2e-4), &cfg, 3);
        let b = generate_scene(&env(2e-4), &cfg, 3);
        assert_eq!(a, b);
        let c = generate_scene(&env(2e-4), &cfg, 4);
        assert_ne!(a, c);
    }

    #[test]
    fn empty_environment_gives_empty_scene() {
        let cfg = SimConfig::default();
        assert!(generate_scene(&env(0.0), &cfg, 0).rects.is_empty());
    }

    #[test]
    fn building_count_matches_poisson_mean() {
        let cfg = SimConfig {
            base_seed: 11,
            ..SimConfig::default()
        };
        let e = env(2e-4);
        let n_scenes = 2000;
        let total: usize = (0..n_scenes)
            .map(|i| generate_scene(&e, &cfg, i).rects.len())
            .sum();
        let mean = total as f64 / n_scenes as f64;
        // Poisson(50): sigma of the sample mean over 2000 scenes
        let sigma = (50.0f64 / n_scenes as f64).sqrt();
        assert!((mean - 50.0).abs() < 3.0 * sigma, "mean {mean}");
    }

    #[test]
    fn direct_covered_basics() {
        let beam = BeamSpec::new(deg(90.0), deg(10.0), db(36.0));
        let user = PolarPoint::new(deg(90.0), 50.0);
        let empty = Scene {
            rects: vec![],
            base_seed: 0,
            index: 0,
        };
        assert!(direct_covered(&empty, &radio(), &beam, &user));

        let blocking = Scene {
            rects: vec![OrientedRect::new(CartesianPoint::new(0.0, 25.0), 40.0, 10.0, 0.0)],
            base_seed: 0,
            index: 0,
        };
        assert!(!direct_covered(&blocking, &radio(), &beam, &user));
    }

    #[test]
    fn reflected_covered_worked_example() {
        // Wall y = 30 for x in [-20, 20]; user at (10, 20); image at
        // (10, 40); launch direction 75.96°, Q = (7.5, 30), path 41.23 m.
        let building = OrientedRect::new(CartesianPoint::new(0.0, 45.0), 40.0, 30.0, 0.0);
        let scene = Scene {
            rects: vec![building],
            base_seed: 0,
            index: 0,
        };
        let beam = BeamSpec::new(deg(75.96), deg(10.0), db(36.0));
        let user = CartesianPoint::new(10.0, 20.0).to_polar();
        assert!(reflected_covered(&scene, &radio(), &beam, &user, RangeMode::Paper));

        // A second building across the bounce leg kills it.
        let blocker = OrientedRect::new(CartesianPoint::new(8.75, 25.0), 4.0, 2.0, 0.0);
        let blocked = Scene {
            rects: vec![building, blocker],
            base_seed: 0,
            index: 0,
        };
        assert!(!reflected_covered(&blocked, &radio(), &beam, &user, RangeMode::Paper));
    }

    #[test]
    fn reflected_covered_empty_scene() {
        let empty = Scene {
            rects: vec![],
            base_seed: 0,
            index: 0,
        };
        let beam = BeamSpec::new(deg(95.0), deg(10.0), db(36.0));
        let user = PolarPoint::new(deg(90.0), 50.0);
        assert!(!reflected_covered(&empty, &radio(), &beam, &user, RangeMode::Paper));
    }

    #[test]
    fn mc_coverage_free_space() {
        let cfg = SimConfig {
            n_drops: 200,
            ..SimConfig::default()
        };
        let beam = BeamSpec::new(deg(90.0), deg(10.0), db(36.0));
        let user = PolarPoint::new(deg(90.0), 50.0);
        let est = mc_coverage(&env(0.0), &radio(), &beam, &user, &cfg);
        assert_eq!(est.p_hat, 1.0);
        assert_eq!(est.stderr, 0.0);
        assert_eq!(est.n_direct, 200);
        assert_eq!(est.n_reflected, 0);
    }

    #[test]
    fn mc_coverage_deterministic() {
        let cfg = SimConfig {
            n_drops: 300,
            base_seed: 42,
            ..SimConfig::default()
        };
        let beam = BeamSpec::new(deg(95.0), deg(10.0), db(36.0));
        let user = PolarPoint::new(deg(90.0), 50.0);
        let a = mc_coverage(&env(2e-4), &radio(), &beam, &user, &cfg);
        let b = mc_coverage(&env(2e-4), &radio(), &beam, &user, &cfg);
        assert_eq!(a, b);
    }

    #[test]
    fn cell_coverage_single_beam_degenerates() {
        let cfg = SimConfig {
            n_drops: 500,
            base_seed: 9,
            ..SimConfig::default()
        };
        let beam = BeamSpec::new(deg(90.0), deg(10.0), db(36.0));
        let user = PolarPoint::new(deg(90.0), 50.0);
        let single = mc_cell_coverage(&env(2e-4), &radio(), &[beam], &user, &cfg);
        let solo = mc_coverage(&env(2e-4), &radio(), &beam, &user, &cfg);
        assert_eq!(single.combined, solo);
        assert!(single.combined.p_hat >= single.direct_only.p_hat);
    }

    #[test]
    fn scene_text_round_trip() {
        let cfg = SimConfig {
            base_seed: 5,
            ..SimConfig::default()
        };
        let scene = generate_scene(&env(2e-4), &cfg, 1);
        let text = scene_to_text(&scene);
        let parsed = scene_from_text(&text).unwrap();
        assert_eq!(parsed, scene.rects);
        assert!(scene_from_text("1 2 3").is_err());
        assert!(scene_from_text("a b c d e").is_err());
    }

    #[test]
    fn empirical_los_matches_blockage_formula() {
        let cfg = SimConfig {
            n_drops: 4000,
            base_seed: 17,
            ..SimConfig::default()
        };
        let e = env(2e-4);
        let user = PolarPoint::new(deg(90.0), 50.0);
        let user_c = user.to_cartesian();
        // Raw scenes: LOS frequency is unconditional here.
        let clear: usize = (0..cfg.n_drops as u64)
            .filter(|&i| {
                let scene = generate_scene(&e, &cfg, i);
                !scene
                    .rects
                    .iter()
                    .any(|r| segment_intersects_rect(CartesianPoint::ORIGIN, user_c, r))
            })
            .count();
        let p_emp = clear as f64 / cfg.n_drops as f64;
        let expected = 0.37795;
        let sigma = (expected * (1.0 - expected) / cfg.n_drops as f64).sqrt();
        assert!(
            (p_emp - expected).abs() < 3.0 * sigma,
            "empirical {p_emp} vs {expected}"
        );
        assert_relative_eq!(p_emp, expected, epsilon = 3.0 * sigma);
    }
}
