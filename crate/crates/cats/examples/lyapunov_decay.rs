//! Record the coexistence energy functional along a run and check that it
//! decays monotonically.
//!
//! Run with: cargo run --release --example lyapunov_decay

use cats::config::parse_config;
use cats::lyapunov::{decay_monitor, eval_energy, EnergyKind, EnergyTag};
use cats::solver::{simulate_observed, State};

fn main() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../configs/example5_1.cfg"
    ))
    .expect("scenario file is shipped in configs/");
    let mut cfg = parse_config(&text).expect("shipped scenario parses");
    cfg.grid.nodes_per_axis = 28;
    cfg.t_end = 15.0;
    cfg.record_every = 0.5;

    let energy = EnergyKind::for_params(EnergyTag::Coexistence, &cfg.params)
        .expect("coexistence state is admissible for this scenario");
    let p = cfg.params;
    let ek = energy.clone();
    let mut observe = move |s: &State| eval_energy(s, &ek, &p).expect("state stays nonnegative");

    let traj = simulate_observed(&cfg, Some(&mut observe)).expect("run is stable");

    println!("   t      energy");
    for s in &traj.samples {
        println!("{:>6.2}  {:.6e}", s.t, s.energy.unwrap());
    }

    let report = decay_monitor(&traj, &energy).unwrap();
    println!("\n{report}");
}
