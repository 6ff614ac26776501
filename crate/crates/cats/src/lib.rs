//! Finite-difference simulator and stability toolkit for a two-predator /
//! one-prey chemo-alarm-taxis reaction-diffusion system.
//!
//! Four fields evolve on a box with zero-flux boundaries: a secondary
//! predator `u` drawn towards the gradient of the combined density `v*w`
//! (the alarm signal), a primary predator `v` attracted to a chemical `z`,
//! a prey `w` repelled by the same chemical, and the chemical itself,
//! produced by `v` and `w` and subject to linear decay. Logistic kinetics
//! couple the three species.
//!
//! The crate provides:
//!
//! * [`model`] — coefficients, reaction kinetics, the eight spatially
//!   constant steady states, and numeric checkers for the feasibility and
//!   stability condition sets, with per-clause margins;
//! * [`grid`] — node-centered box grids and the conservative stencil
//!   operators (zero-flux Laplacian, taxis flux divergence, quadrature);
//! * [`solver`] — explicit time integration with an automatic parabolic
//!   step bound, nonnegativity monitoring and trajectory recording;
//! * [`lyapunov`] — the four energy functionals certifying convergence,
//!   plus a monotone-decay monitor;
//! * [`diagnostics`] — distance series post-processing: exponential
//!   decay-rate fitting and convergence verdicts;
//! * [`config`] / [`output`] / [`cli`] — the `key = value` scenario format,
//!   deterministic CSV/snapshot writers, and the command-line entry point.
//!
//! Quick start: run a coarse coexistence scenario and print the final
//! distances to the analytic steady state.
//!
//! ```
//! use cats::model::EquilibriumKind;
//! use cats::solver::{simulate, GridSpec, SimConfig};
//!
//! let cfg = SimConfig {
//!     params: cats::config::parse_config(
//!         &std::fs::read_to_string("../../configs/example5_1.cfg").unwrap(),
//!     )
//!     .unwrap()
//!     .params,
//!     grid: GridSpec { ndim: 2, nodes_per_axis: 22, lo: -0.5, hi: 0.5 },
//!     t_end: 1.0,
//!     dt: 0.0,
//!     record_every: 0.5,
//!     target: Some(EquilibriumKind::Coexistence),
//!     stop_tol: None,
//! };
//! let traj = simulate(&cfg).unwrap();
//! assert!(traj.samples.len() >= 2);
//! ```

pub mod cli;
pub mod config;
pub mod diagnostics;
pub mod grid;
pub mod lyapunov;
pub mod model;
pub mod output;
pub mod solver;
