use beamcov_core::harness::compare::run_compare;
use beamcov_core::harness::config::ExperimentConfig;
use beamcov_core::harness::figures::{run_fig3, run_fig4, run_fig5, run_fig6};
use std::time::Instant;

fn main() {
    let cfg = ExperimentConfig::default();
    let t = Instant::now();
    let report = run_compare(&cfg).unwrap();
    print!("{}", report.render());
    println!("compare [{:.2?}]", t.elapsed());

    let t = Instant::now();
    let f3 = run_fig3(&cfg).unwrap();
    println!("fig3: {} rows [{:.2?}]", f3.len(), t.elapsed());
    let t = Instant::now();
    let f4 = run_fig4(&cfg).unwrap();
    println!("fig4: {} rows [{:.2?}]", f4.len(), t.elapsed());
    let t = Instant::now();
    let f5 = run_fig5(&cfg).unwrap();
    println!("fig5: {} rows [{:.2?}]", f5.len(), t.elapsed());
    let t = Instant::now();
    let f6 = run_fig6(&cfg).unwrap();
    println!("fig6: {} rows [{:.2?}]", f6.len(), t.elapsed());
    for r in &f5 {
        println!("fig5 {} {}°/{}° d={}: analytic {:.5} mc {:.5} gap {:.5}",
            r.experiment, r.theta_j_deg, r.mu_j_deg, r.d_u_m, r.analytic_p_total, r.mc_p_hat, r.abs_gap);
    }
}
