//! Evaluate the feasibility and stability condition sets on two parameter
//! regimes: one where all three species persist and one where only the
//! secondary predator survives.
//!
//! Run with: cargo run --example stability_conditions

use cats::model::{
    check_coexistence_conditions, check_stability_conditions, EquilibriumKind, Params,
};

fn with_interactions(a: [f64; 6]) -> Params {
    Params {
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
        a1: a[0],
        a2: a[1],
        a3: a[2],
        a4: a[3],
        a5: a[4],
        a6: a[5],
        alpha: 1.0,
        beta: 1.0,
        gamma: 2.0,
    }
}

fn main() {
    // Weak symmetric interactions: the coexistence state is feasible.
    let coexisting = with_interactions([0.5; 6]);
    println!("== weak symmetric interactions ==");
    println!("{}\n", check_coexistence_conditions(&coexisting));

    // Strong predation on v and w: feasibility fails and the system
    // settles at (1, 0, 0, 0) instead.
    let trivial = with_interactions([0.01, 1.0, 1.5, 0.01, 2.0, 2.0]);
    println!("== strong interspecific pressure ==");
    println!("{}\n", check_coexistence_conditions(&trivial));

    // The sup-norm stand-ins are the bell initial peaks.
    let report =
        check_stability_conditions(&trivial, EquilibriumKind::SecondaryOnly, 3.0, 2.0)
            .expect("the secondary-only state always exists");
    println!("{report}");
}
