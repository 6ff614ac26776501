//! Explicit time integration of the four-field system on a box grid with
//! zero-flux boundaries, from bell-shaped initial data.
//!
//! The update is forward Euler; the step size obeys a safety-factored
//! parabolic bound that treats the taxis terms as effective diffusion
//! scaled by current field maxima. Small negative undershoots are clamped
//! to zero and counted; anything below −1e-6 aborts the run.

mod kernel;

use crate::grid::{
    build_grid, integrate_slice, laplacian, linf_distance_slice, product_field, taxis_divergence,
    Field, Grid, GridError, TaxisSign,
};
use crate::model::{equilibrium, reaction_terms, EquilibriumKind, EquilibriumPoint, ModelError, Params};
use kernel::Engine;
use serde::Serialize;
use thiserror::Error;

/// Values below this floor abort the step as a numerical blow-up.
pub const NEGATIVE_FLOOR: f64 = -1e-6;

const DT_SAFETY: f64 = 0.4;
const DT_CAP: f64 = 1e-2;
const DT_REFRESH_EVERY: u64 = 100;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("field {field} dropped to {value:.3e} at t = {t:.6e}; the update is unstable, reduce dt")]
    NegativeBlowup { t: f64, field: &'static str, value: f64 },
    #[error("field {field} became non-finite at t = {t:.6e}")]
    NonFiniteState { t: f64, field: &'static str },
    #[error("distance target is not computable: {0}")]
    InvalidTarget(#[from] ModelError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("invalid simulation config: {0}")]
    BadConfig(String),
}

/// The four fields at one time, all on the same grid.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    pub t: f64,
    pub u: Field,
    pub v: Field,
    pub w: Field,
    pub z: Field,
}

impl State {
    pub fn new(t: f64, u: Field, v: Field, w: Field, z: Field) -> Result<Self, GridError> {
        if u.grid() != v.grid() || u.grid() != w.grid() || u.grid() != z.grid() {
            return Err(GridError::GridMismatch);
        }
        Ok(State { t, u, v, w, z })
    }

    /// Spatially uniform state at the given levels.
    pub fn uniform(grid: Grid, levels: [f64; 4]) -> Self {
        State {
            t: 0.0,
            u: Field::constant(grid, levels[0]),
            v: Field::constant(grid, levels[1]),
            w: Field::constant(grid, levels[2]),
            z: Field::constant(grid, levels[3]),
        }
    }

    pub fn grid(&self) -> &Grid {
        self.u.grid()
    }

    pub fn fields(&self) -> [&Field; 4] {
        [&self.u, &self.v, &self.w, &self.z]
    }
}

/// Grid geometry portion of a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub ndim: usize,
    pub nodes_per_axis: usize,
    pub lo: f64,
    pub hi: f64,
}

impl GridSpec {
    pub fn build(&self) -> Result<Grid, GridError> {
        build_grid(self.ndim, self.nodes_per_axis, self.lo, self.hi)
    }
}

/// A full simulation scenario.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimConfig {
    pub params: Params,
    pub grid: GridSpec,
    /// Final time; the run lands on it exactly.
    pub t_end: f64,
    /// Fixed step size; 0 selects the automatic bound, refreshed every
    /// 100 steps.
    pub dt: f64,
    /// Diagnostic sampling interval in time units.
    pub record_every: f64,
    /// Steady state used for distance tracking, if any.
    pub target: Option<EquilibriumKind>,
    /// Early-stop threshold on the max per-field sup distance to `target`.
    pub stop_tol: Option<f64>,
}

impl SimConfig {
    fn validate(&self) -> Result<(), SolverError> {
        self.params
            .validate()
            .map_err(|e| SolverError::BadConfig(e.to_string()))?;
        if !(self.t_end > 0.0) {
            return Err(SolverError::BadConfig(format!(
                "t_end must be positive, got {}",
                self.t_end
            )));
        }
        if !(self.record_every > 0.0) {
            return Err(SolverError::BadConfig(format!(
                "record_every must be positive, got {}",
                self.record_every
            )));
        }
        if !(self.dt >= 0.0) || !self.dt.is_finite() {
            return Err(SolverError::BadConfig(format!(
                "dt must be zero (auto) or positive, got {}",
                self.dt
            )));
        }
        if let Some(tol) = self.stop_tol {
            if !(tol > 0.0) {
                return Err(SolverError::BadConfig(format!(
                    "stop_tol must be positive, got {tol}"
                )));
            }
        }
        Ok(())
    }
}

/// One diagnostic record along a trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub t: f64,
    /// Per-field sup distances to the target steady state, when tracked.
    pub dist: Option<[f64; 4]>,
    /// Energy-functional value, when the run records one.
    pub energy: Option<f64>,
    /// Integrals of u, v, w over the box.
    pub mass: [f64; 3],
    /// Running maximum of v over the trajectory so far.
    pub sup_v: f64,
    /// Running maximum of w over the trajectory so far.
    pub sup_w: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RunStatus {
    ReachedTEnd,
    ConvergedEarly,
    Aborted,
}

/// Recorded simulation output.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Sample>,
    pub final_state: State,
    pub clamp_count: u64,
    pub steps: u64,
    pub status: RunStatus,
}

impl Trajectory {
    /// (t, max over fields of the sup distance) series, for rate fitting.
    pub fn max_distance_series(&self) -> Vec<(f64, f64)> {
        self.samples
            .iter()
            .filter_map(|s| {
                s.dist
                    .map(|d| (s.t, d.iter().fold(0.0f64, |m, x| m.max(*x))))
            })
            .collect()
    }

    /// Total node updates performed (steps x nodes x 4 fields).
    pub fn node_updates(&self) -> u64 {
        self.steps * self.final_state.grid().node_count() as u64 * 4
    }
}

/// Bell-shaped initial data centered at the coordinate origin:
/// u = e^(-0.1 r^2), v = 3 e^(-0.3 r^2), w = 2 e^(-0.2 r^2), z = e^(-0.1 r^2).
pub fn initial_state(grid: Grid) -> State {
    let r2 = |x: [f64; 3]| x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    State {
        t: 0.0,
        u: Field::from_fn(grid, |x| (-0.1 * r2(x)).exp()),
        v: Field::from_fn(grid, |x| 3.0 * (-0.3 * r2(x)).exp()),
        w: Field::from_fn(grid, |x| 2.0 * (-0.2 * r2(x)).exp()),
        z: Field::from_fn(grid, |x| (-0.1 * r2(x)).exp()),
    }
}

fn stable_dt_from_maxima(max_z: f64, max_vw: f64, p: &Params, grid: &Grid) -> f64 {
    let h2 = grid.spacing() * grid.spacing();
    let denom = 2.0 * grid.ndim() as f64;
    let max_d = p.d1.max(p.d2).max(p.d3).max(p.d4);
    let mut bound = h2 / (denom * max_d);
    let taxis_pressure = (p.chi1 * max_vw).max(p.chi2 * max_z).max(p.xi * max_z);
    if taxis_pressure > 0.0 {
        bound = bound.min(h2 / (denom * taxis_pressure));
    }
    (DT_SAFETY * bound).min(DT_CAP)
}

/// Safety-factored parabolic step bound for the current state: the minimum
/// of h^2/(2*ndim*max d) and h^2/(2*ndim*q), where q bounds the taxis terms
/// as effective diffusion (chi1*max|vw|, chi2*max|z|, xi*max|z|), times a
/// safety factor 0.4 and capped at 1e-2.
pub fn stable_dt(state: &State, p: &Params, grid: &Grid) -> f64 {
    let (_, _, max_z, max_vw) =
        kernel::state_maxima(state.v.values(), state.w.values(), state.z.values());
    stable_dt_from_maxima(max_z, max_vw, p, grid)
}

/// One forward-Euler step assembled from the public stencil operators.
///
/// This is the readable reference path; [`simulate`] runs an equivalent
/// fused kernel. Values in (−1e-6, 0) are clamped to zero.
pub fn step(state: &State, p: &Params, dt: f64) -> Result<State, SolverError> {
    let grid = *state.grid();
    let t_after = state.t + dt;

    let lap_u = laplacian(&state.u);
    let lap_v = laplacian(&state.v);
    let lap_w = laplacian(&state.w);
    let lap_z = laplacian(&state.z);
    let pot = product_field(&state.v, &state.w)?;
    let tax_u = taxis_divergence(&state.u, &pot, TaxisSign::Attract, p.chi1)?;
    let tax_v = taxis_divergence(&state.v, &state.z, TaxisSign::Attract, p.chi2)?;
    let tax_w = taxis_divergence(&state.w, &state.z, TaxisSign::Repel, p.xi)?;

    let n = grid.node_count();
    let mut out: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; n]);
    const FIELD_NAMES: [&str; 4] = ["u", "v", "w", "z"];
    for i in 0..n {
        let r = reaction_terms(
            state.u.values()[i],
            state.v.values()[i],
            state.w.values()[i],
            state.z.values()[i],
            p,
        );
        let cand = [
            state.u.values()[i] + dt * (p.d1 * lap_u.values()[i] + tax_u.values()[i] + r[0]),
            state.v.values()[i] + dt * (p.d2 * lap_v.values()[i] + tax_v.values()[i] + r[1]),
            state.w.values()[i] + dt * (p.d3 * lap_w.values()[i] + tax_w.values()[i] + r[2]),
            state.z.values()[i] + dt * (p.d4 * lap_z.values()[i] + r[3]),
        ];
        for f in 0..4 {
            let c = cand[f];
            if !c.is_finite() {
                return Err(SolverError::NonFiniteState {
                    t: t_after,
                    field: FIELD_NAMES[f],
                });
            }
            if c < NEGATIVE_FLOOR {
                return Err(SolverError::NegativeBlowup {
                    t: t_after,
                    field: FIELD_NAMES[f],
                    value: c,
                });
            }
            out[f][i] = c.max(0.0);
        }
    }
    let [u, v, w, z] = out;
    Ok(State {
        t: t_after,
        u: Field::new(grid, u)?,
        v: Field::new(grid, v)?,
        w: Field::new(grid, w)?,
        z: Field::new(grid, z)?,
    })
}

/// Runs a scenario from the bell initial data.
pub fn simulate(cfg: &SimConfig) -> Result<Trajectory, SolverError> {
    simulate_observed(cfg, None)
}

/// Runs a scenario from the bell initial data, recording an extra scalar
/// (typically an energy functional) at every sample.
pub fn simulate_observed(
    cfg: &SimConfig,
    observer: Option<&mut dyn FnMut(&State) -> f64>,
) -> Result<Trajectory, SolverError> {
    cfg.validate()?;
    let grid = cfg.grid.build()?;
    simulate_from(cfg, initial_state(grid), observer)
}

/// Runs a scenario from a caller-supplied initial state.
pub fn simulate_from(
    cfg: &SimConfig,
    initial: State,
    mut observer: Option<&mut dyn FnMut(&State) -> f64>,
) -> Result<Trajectory, SolverError> {
    cfg.validate()?;
    let grid = cfg.grid.build()?;
    if initial.grid() != &grid {
        return Err(SolverError::BadConfig(
            "initial state does not live on the configured grid".into(),
        ));
    }
    let p = &cfg.params;
    let target: Option<EquilibriumPoint> = match cfg.target {
        Some(kind) => Some(equilibrium(p, kind)?),
        None => None,
    };

    let n = grid.node_count();
    let mut engine = Engine::new(grid);
    let mut cur: [Vec<f64>; 4] = {
        let State { u, v, w, z, .. } = initial;
        [
            u.values().to_vec(),
            v.values().to_vec(),
            w.values().to_vec(),
            z.values().to_vec(),
        ]
    };
    let mut next: [Vec<f64>; 4] = std::array::from_fn(|_| vec![0.0; n]);

    let (mut max_v, mut max_w, mut max_z, mut max_vw) =
        kernel::state_maxima(&cur[1], &cur[2], &cur[3]);
    let mut sup_v = max_v;
    let mut sup_w = max_w;

    let auto_dt = cfg.dt == 0.0;
    let mut dt = if auto_dt {
        stable_dt_from_maxima(max_z, max_vw, p, &grid)
    } else {
        cfg.dt
    };

    let mut samples: Vec<Sample> = Vec::new();
    let mut t = 0.0f64;
    let mut steps: u64 = 0;
    let mut clamp_count: u64 = 0;
    let mut status = RunStatus::ReachedTEnd;
    let record_eps = 1e-9 * cfg.record_every;
    let mut next_mark: u64 = 1;

    let make_state = |t: f64, bufs: &[Vec<f64>; 4]| -> State {
        State {
            t,
            u: Field::new(grid, bufs[0].clone()).expect("buffer sized to grid"),
            v: Field::new(grid, bufs[1].clone()).expect("buffer sized to grid"),
            w: Field::new(grid, bufs[2].clone()).expect("buffer sized to grid"),
            z: Field::new(grid, bufs[3].clone()).expect("buffer sized to grid"),
        }
    };

    macro_rules! record {
        () => {{
            let dist = target.as_ref().map(|eq| {
                let c = eq.components();
                [
                    linf_distance_slice(&cur[0], c[0]),
                    linf_distance_slice(&cur[1], c[1]),
                    linf_distance_slice(&cur[2], c[2]),
                    linf_distance_slice(&cur[3], c[3]),
                ]
            });
            let energy = observer.as_mut().map(|obs| obs(&make_state(t, &cur)));
            samples.push(Sample {
                t,
                dist,
                energy,
                mass: [
                    integrate_slice(&grid, &cur[0]),
                    integrate_slice(&grid, &cur[1]),
                    integrate_slice(&grid, &cur[2]),
                ],
                sup_v,
                sup_w,
            });
            dist
        }};
    }

    let converged = |dist: &Option<[f64; 4]>, tol: Option<f64>| -> bool {
        match (dist, tol) {
            (Some(d), Some(tol)) => d.iter().all(|x| *x < tol),
            _ => false,
        }
    };

    let d0 = record!();
    if converged(&d0, cfg.stop_tol) {
        status = RunStatus::ConvergedEarly;
    } else {
        let t_tiny = 1e-12 * cfg.t_end.max(1.0);
        while t < cfg.t_end - t_tiny {
            if auto_dt && steps % DT_REFRESH_EVERY == 0 {
                dt = stable_dt_from_maxima(max_z, max_vw, p, &grid);
            }
            let (dt_step, landing) = if t + dt >= cfg.t_end - t_tiny {
                (cfg.t_end - t, true)
            } else {
                (dt, false)
            };
            let t_after = if landing { cfg.t_end } else { t + dt_step };
            let stats = {
                let [ou, ov, ow, oz] = &cur;
                let [nu, nv, nw, nz] = &mut next;
                engine.step_raw([ou, ov, ow, oz], p, dt_step, t_after, [nu, nv, nw, nz])?
            };
            std::mem::swap(&mut cur, &mut next);
            t = t_after;
            steps += 1;
            clamp_count += stats.clamps;
            (max_v, max_w, max_z, max_vw) =
                (stats.max_v, stats.max_w, stats.max_z, stats.max_vw);
            sup_v = sup_v.max(max_v);
            sup_w = sup_w.max(max_w);

            let due = t >= next_mark as f64 * cfg.record_every - record_eps;
            if due || landing {
                let dist = record!();
                if due {
                    next_mark = (t / cfg.record_every + 1e-9).floor() as u64 + 1;
                }
                if converged(&dist, cfg.stop_tol) {
                    status = RunStatus::ConvergedEarly;
                    break;
                }
            }
        }
    }

    Ok(Trajectory {
        samples,
        final_state: make_state(t, &cur),
        clamp_count,
        steps,
        status,
    })
}
