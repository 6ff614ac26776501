//! Enumerate the eight spatially constant steady states for one parameter
//! set and show which are biologically admissible.
//!
//! Run with: cargo run --example equilibria

use cats::model::{enumerate_equilibria, Params};

fn main() {
    let params = Params {
        d1: 1.0,
        d2: 1.0,
        d3: 1.0,
        d4: 1.0,
        chi1: 1.0,
        chi2: 1.0,
        xi: 1.0,
        mu1: 1.0,
        mu2: 1.0,
        mu3: 1.0,
        a1: 0.5,
        a2: 0.5,
        a3: 0.5,
        a4: 0.5,
        a5: 0.5,
        a6: 0.5,
        alpha: 1.0,
        beta: 1.0,
        gamma: 2.0,
    };

    println!("interaction coefficients all 0.5, production 1/1, decay 2\n");
    for point in enumerate_equilibria(&params).expect("denominators are regular here") {
        let [u, v, w, z] = point.components();
        let residual = point
            .residual(&params)
            .iter()
            .fold(0.0f64, |m, r| m.max(r.abs()));
        println!(
            "{:<22} ({u:.6}, {v:.6}, {w:.6}, {z:.6})  admissible: {:<3}  residual {residual:.2e}",
            point.kind.to_string(),
            if point.admissible { "yes" } else { "no" },
        );
    }
}
