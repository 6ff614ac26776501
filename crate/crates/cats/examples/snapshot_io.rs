//! Write a field snapshot and a timeseries, then read the snapshot back
//! bit-exactly.
//!
//! Run with: cargo run --example snapshot_io

use cats::config::parse_config;
use cats::output::{read_snapshot, write_snapshot, write_timeseries};
use cats::solver::simulate;

fn main() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../configs/example5_4.cfg"
    ))
    .expect("scenario file is shipped in configs/");
    let mut cfg = parse_config(&text).expect("shipped scenario parses");
    cfg.grid.nodes_per_axis = 12;
    cfg.t_end = 1.0;

    let traj = simulate(&cfg).expect("run is stable");

    let dir = std::env::temp_dir().join("cats_snapshot_io");
    std::fs::create_dir_all(&dir).unwrap();

    let ts = dir.join("timeseries.csv");
    write_timeseries(&traj, &ts).unwrap();
    println!("wrote {} ({} samples)", ts.display(), traj.samples.len());

    let snap = dir.join("final_w.snap");
    write_snapshot(&traj.final_state, "w", &snap).unwrap();
    let (restored, t, name) = read_snapshot(&snap).unwrap();
    println!(
        "wrote and re-read {}: field `{name}` at t = {t}, {} nodes",
        snap.display(),
        restored.values().len()
    );

    let identical = restored
        .values()
        .iter()
        .zip(traj.final_state.w.values())
        .all(|(a, b)| a.to_bits() == b.to_bits());
    println!("bit-exact round trip: {identical}");
    assert!(identical);
}
