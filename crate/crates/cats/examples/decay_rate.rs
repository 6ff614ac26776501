//! Fit an empirical exponential convergence rate from a trajectory's
//! distance series.
//!
//! Run with: cargo run --release --example decay_rate

use cats::config::parse_config;
use cats::diagnostics::fit_decay_rate;
use cats::solver::simulate;

fn main() {
    // Prey-vanishing scenario, coarsened for speed.
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../configs/example5_3.cfg"
    ))
    .expect("scenario file is shipped in configs/");
    let mut cfg = parse_config(&text).expect("shipped scenario parses");
    cfg.grid.nodes_per_axis = 28;

    let traj = simulate(&cfg).expect("run is stable");
    let series = traj.max_distance_series();
    println!(
        "{} samples, distance {:.3e} -> {:.3e}",
        series.len(),
        series.first().unwrap().1,
        series.last().unwrap().1
    );

    // Fit over the trailing half, past the initial transient.
    let fit = fit_decay_rate(&series, 0.5).unwrap();
    println!(
        "fitted rate {:.4}/time over t in [{:.1}, {:.1}], r^2 = {:.6}",
        fit.rate, fit.window.0, fit.window.1, fit.r_squared
    );
    println!(
        "distance halves every {:.2} time units",
        std::f64::consts::LN_2 / fit.rate
    );
}
