//! Run the 2D coexistence scenario on a coarse grid and watch the fields
//! converge to the analytic steady state.
//!
//! The shipped scenario file uses 102 nodes per axis and takes minutes;
//! this example coarsens it to 32 nodes so it finishes in seconds while
//! showing the same asymptotics.
//!
//! Run with: cargo run --release --example coexistence_2d

use cats::config::parse_config;
use cats::diagnostics::{convergence_verdict, DEFAULT_VERDICT_TOL};
use cats::model::equilibrium;
use cats::solver::simulate;

fn main() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../configs/example5_1.cfg"
    ))
    .expect("scenario file is shipped in configs/");
    let mut cfg = parse_config(&text).expect("shipped scenario parses");
    cfg.grid.nodes_per_axis = 32;
    cfg.record_every = 1.0;

    let target = equilibrium(&cfg.params, cfg.target.unwrap()).unwrap();
    println!(
        "target steady state: ({:.6}, {:.6}, {:.6}, {:.6})",
        target.u_e, target.v_e, target.w_e, target.z_e
    );

    let traj = simulate(&cfg).expect("run is stable");
    println!("steps: {}, clamped values: {}", traj.steps, traj.clamp_count);
    println!("\n   t    max sup distance to target");
    for s in traj.samples.iter().step_by(5) {
        let d = s.dist.unwrap().iter().fold(0.0f64, |m, x| m.max(*x));
        println!("{:>5.1}  {d:.6e}", s.t);
    }

    let verdict = convergence_verdict(&traj, &target, DEFAULT_VERDICT_TOL).unwrap();
    println!("\n{verdict}");
}
