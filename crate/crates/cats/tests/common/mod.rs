//! Shared helpers for the integration suites: scenario loading, the
//! standalone kinetics oracle, and random parameter draws.

#![allow(dead_code)]

use cats::config::parse_config;
use cats::model::Params;
use cats::solver::SimConfig;
use rand::Rng;
use std::path::PathBuf;

pub fn scenario_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../configs/{name}"))
}

pub fn load_scenario(name: &str) -> SimConfig {
    let text = std::fs::read_to_string(scenario_path(name))
        .unwrap_or_else(|e| panic!("cannot read shipped scenario {name}: {e}"));
    parse_config(&text).unwrap_or_else(|e| panic!("shipped scenario {name} must parse: {e}"))
}

/// Forward-Euler integration of the plain kinetics, written independently
/// of the library's reaction code. Returns the state after each step.
pub fn euler_kinetics_oracle(p: &Params, start: [f64; 4], dt: f64, steps: usize) -> Vec<[f64; 4]> {
    let mut y = start;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(y);
    for _ in 0..steps {
        let du = p.mu1 * y[0] * (1.0 - y[0] + p.a1 * y[1] + p.a2 * y[2]);
        let dv = p.mu2 * y[1] * (1.0 - y[1] - p.a3 * y[0] + p.a4 * y[2]);
        let dw = p.mu3 * y[2] * (1.0 - y[2] - p.a5 * y[0] - p.a6 * y[1]);
        let dz = p.alpha * y[1] + p.beta * y[2] - p.gamma * y[3];
        y = [
            y[0] + dt * du,
            y[1] + dt * dv,
            y[2] + dt * dw,
            y[3] + dt * dz,
        ];
        out.push(y);
    }
    out
}

fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// A random strictly positive parameter set. Draws whose coexistence
/// denominator is nearly singular (or whose steady-state components leave
/// the well-conditioned range) are rejected and redrawn, since the
/// closed forms lose all absolute accuracy there.
pub fn random_params(rng: &mut impl Rng) -> Params {
    loop {
        let p = Params {
            d1: log_uniform(rng, 0.2, 3.0),
            d2: log_uniform(rng, 0.2, 3.0),
            d3: log_uniform(rng, 0.2, 3.0),
            d4: log_uniform(rng, 0.2, 3.0),
            chi1: log_uniform(rng, 0.2, 3.0),
            chi2: log_uniform(rng, 0.2, 3.0),
            xi: log_uniform(rng, 0.2, 3.0),
            mu1: log_uniform(rng, 0.2, 3.0),
            mu2: log_uniform(rng, 0.2, 3.0),
            mu3: log_uniform(rng, 0.2, 3.0),
            a1: log_uniform(rng, 0.05, 1.5),
            a2: log_uniform(rng, 0.05, 1.5),
            a3: log_uniform(rng, 0.05, 1.5),
            a4: log_uniform(rng, 0.05, 1.5),
            a5: log_uniform(rng, 0.05, 1.5),
            a6: log_uniform(rng, 0.05, 1.5),
            alpha: log_uniform(rng, 0.2, 3.0),
            beta: log_uniform(rng, 0.2, 3.0),
            gamma: log_uniform(rng, 0.2, 3.0),
        };
        let denominator =
            1.0 + p.a1 * (p.a3 + p.a4 * p.a5) + p.a4 * p.a6 + p.a2 * (p.a5 - p.a3 * p.a6);
        if denominator.abs() < 0.05 {
            continue;
        }
        if let Ok(points) = cats::model::enumerate_equilibria(&p) {
            if points
                .iter()
                .all(|e| e.components().iter().all(|c| c.abs() <= 20.0))
            {
                return p;
            }
        }
    }
}
