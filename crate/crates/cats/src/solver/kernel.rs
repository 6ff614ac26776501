//! Fused explicit update driving the simulation loop.
//!
//! One step sweeps every axis once, accumulating diffusion and taxis flux
//! divergences into per-field rate arrays, then applies reactions and the
//! Euler update in a final pass. Face fluxes are computed once per face
//! with a rolling prev/next buffer pair per axis sweep; boundary faces
//! carry zero flux and boundary nodes use the half cell, matching the
//! public stencil operators in [`crate::grid`].

use super::SolverError;
use crate::grid::Grid;
use crate::model::{reaction_terms, Params};

/// Per-step summary used for step-size refresh, sup tracking and the
/// nonnegativity monitor. Maxima are over the post-clamp new state.
#[derive(Debug, Clone, Copy)]
pub(crate) struct StepStats {
    pub clamps: u64,
    pub max_v: f64,
    pub max_w: f64,
    pub max_z: f64,
    pub max_vw: f64,
}

/// Maxima of an existing state, used to seed the step-size bound.
pub(crate) fn state_maxima(v: &[f64], w: &[f64], z: &[f64]) -> (f64, f64, f64, f64) {
    let mut max_v = 0.0f64;
    let mut max_w = 0.0f64;
    let mut max_z = 0.0f64;
    let mut max_vw = 0.0f64;
    for i in 0..v.len() {
        max_v = max_v.max(v[i].abs());
        max_w = max_w.max(w[i].abs());
        max_z = max_z.max(z[i].abs());
        max_vw = max_vw.max((v[i] * w[i]).abs());
    }
    (max_v, max_w, max_z, max_vw)
}

const N_FACE: usize = 7; // diffusion u,v,w,z then taxis u,v,w

pub(crate) struct Engine {
    grid: Grid,
    rate: [Vec<f64>; 4],
    face_prev: [Vec<f64>; N_FACE],
    face_next: [Vec<f64>; N_FACE],
}

impl Engine {
    pub fn new(grid: Grid) -> Self {
        let n = grid.node_count();
        let mut max_after = 1;
        for axis in 0..grid.ndim() {
            let (_, _, after) = grid.axis_split(axis);
            max_after = max_after.max(after);
        }
        Engine {
            grid,
            rate: std::array::from_fn(|_| vec![0.0; n]),
            face_prev: std::array::from_fn(|_| vec![0.0; max_after]),
            face_next: std::array::from_fn(|_| vec![0.0; max_after]),
        }
    }

    /// One forward-Euler step from `old` into `new`. `t_after` is the time
    /// the new state corresponds to, used only in error reports.
    pub fn step_raw(
        &mut self,
        old: [&[f64]; 4],
        p: &Params,
        dt: f64,
        t_after: f64,
        new: [&mut [f64]; 4],
    ) -> Result<StepStats, SolverError> {
        let n = self.grid.node_count();
        let [u, v, w, z] = old;
        assert!(u.len() == n && v.len() == n && w.len() == n && z.len() == n);

        self.accumulate_rates(u, v, w, z, p);

        let [nu, nv, nw, nz] = new;
        assert!(nu.len() == n && nv.len() == n && nw.len() == n && nz.len() == n);
        let [ru, rv, rw, rz] = &self.rate;

        let mut sum = [0.0f64; 4];
        let mut min = [f64::INFINITY; 4];
        let mut clamps = 0u64;
        let mut max_v = 0.0f64;
        let mut max_w = 0.0f64;
        let mut max_z = 0.0f64;
        let mut max_vw = 0.0f64;
        for i in 0..n {
            let r = reaction_terms(u[i], v[i], w[i], z[i], p);
            let cu = u[i] + dt * (ru[i] + r[0]);
            let cv = v[i] + dt * (rv[i] + r[1]);
            let cw = w[i] + dt * (rw[i] + r[2]);
            let cz = z[i] + dt * (rz[i] + r[3]);
            sum[0] += cu;
            sum[1] += cv;
            sum[2] += cw;
            sum[3] += cz;
            min[0] = min[0].min(cu);
            min[1] = min[1].min(cv);
            min[2] = min[2].min(cw);
            min[3] = min[3].min(cz);
            clamps += (cu < 0.0) as u64
                + (cv < 0.0) as u64
                + (cw < 0.0) as u64
                + (cz < 0.0) as u64;
            let cu = cu.max(0.0);
            let cv = cv.max(0.0);
            let cw = cw.max(0.0);
            let cz = cz.max(0.0);
            nu[i] = cu;
            nv[i] = cv;
            nw[i] = cw;
            nz[i] = cz;
            max_v = max_v.max(cv);
            max_w = max_w.max(cw);
            max_z = max_z.max(cz);
            max_vw = max_vw.max(cv * cw);
        }

        const FIELD_NAMES: [&str; 4] = ["u", "v", "w", "z"];
        for f in 0..4 {
            if !sum[f].is_finite() {
                return Err(SolverError::NonFiniteState {
                    t: t_after,
                    field: FIELD_NAMES[f],
                });
            }
            if min[f] < super::NEGATIVE_FLOOR {
                return Err(SolverError::NegativeBlowup {
                    t: t_after,
                    field: FIELD_NAMES[f],
                    value: min[f],
                });
            }
        }
        Ok(StepStats {
            clamps,
            max_v,
            max_w,
            max_z,
            max_vw,
        })
    }

    /// Sums diffusion and taxis flux divergences over all axes into the
    /// rate arrays.
    fn accumulate_rates(&mut self, u: &[f64], v: &[f64], w: &[f64], z: &[f64], p: &Params) {
        let grid = self.grid;
        let h = grid.spacing();
        let inv_h = 1.0 / h;
        let cell_inv = |ia: usize, len: usize| -> f64 {
            if ia == 0 || ia + 1 == len {
                2.0 * inv_h
            } else {
                inv_h
            }
        };
        // Flux constants; gradients below are raw value differences, the
        // 1/h lives here.
        let c_d1 = p.d1 * inv_h;
        let c_d2 = p.d2 * inv_h;
        let c_d3 = p.d3 * inv_h;
        let c_d4 = p.d4 * inv_h;
        let c_x1 = 0.5 * p.chi1 * inv_h;
        let c_x2 = 0.5 * p.chi2 * inv_h;
        let c_xi = 0.5 * p.xi * inv_h;

        for rate in &mut self.rate {
            rate.fill(0.0);
        }

        for axis in 0..grid.ndim() {
            let (before, len, after) = grid.axis_split(axis);
            for buf in &mut self.face_prev {
                buf[..after].fill(0.0);
            }
            for ib in 0..before {
                let block = ib * len * after;
                for ia in 0..len {
                    let cur = block + ia * after;
                    if ia + 1 < len {
                        let nxt = cur + after;
                        let u0 = &u[cur..cur + after];
                        let u1 = &u[nxt..nxt + after];
                        let v0 = &v[cur..cur + after];
                        let v1 = &v[nxt..nxt + after];
                        let w0 = &w[cur..cur + after];
                        let w1 = &w[nxt..nxt + after];
                        let z0 = &z[cur..cur + after];
                        let z1 = &z[nxt..nxt + after];
                        let [fdu, fdv, fdw, fdz, ftu, ftv, ftw] = &mut self.face_next;
                        let fdu = &mut fdu[..after];
                        let fdv = &mut fdv[..after];
                        let fdw = &mut fdw[..after];
                        let fdz = &mut fdz[..after];
                        let ftu = &mut ftu[..after];
                        let ftv = &mut ftv[..after];
                        let ftw = &mut ftw[..after];
                        for ja in 0..after {
                            let du = u1[ja] - u0[ja];
                            let dv = v1[ja] - v0[ja];
                            let dw = w1[ja] - w0[ja];
                            let dz = z1[ja] - z0[ja];
                            fdu[ja] = c_d1 * du;
                            fdv[ja] = c_d2 * dv;
                            fdw[ja] = c_d3 * dw;
                            fdz[ja] = c_d4 * dz;
                            let dpot = v1[ja] * w1[ja] - v0[ja] * w0[ja];
                            ftu[ja] = c_x1 * (u0[ja] + u1[ja]) * dpot;
                            ftv[ja] = c_x2 * (v0[ja] + v1[ja]) * dz;
                            ftw[ja] = c_xi * (w0[ja] + w1[ja]) * dz;
                        }
                    } else {
                        for buf in &mut self.face_next {
                            buf[..after].fill(0.0);
                        }
                    }

                    let inv_cell = cell_inv(ia, len);
                    let [ru, rv, rw, rz] = &mut self.rate;
                    let ru = &mut ru[cur..cur + after];
                    let rv = &mut rv[cur..cur + after];
                    let rw = &mut rw[cur..cur + after];
                    let rz = &mut rz[cur..cur + after];
                    let [pdu, pdv, pdw, pdz, ptu, ptv, ptw] = &self.face_prev;
                    let [ndu, ndv, ndw, ndz, ntu, ntv, ntw] = &self.face_next;
                    let (pdu, pdv, pdw, pdz) =
                        (&pdu[..after], &pdv[..after], &pdw[..after], &pdz[..after]);
                    let (ptu, ptv, ptw) = (&ptu[..after], &ptv[..after], &ptw[..after]);
                    let (ndu, ndv, ndw, ndz) =
                        (&ndu[..after], &ndv[..after], &ndw[..after], &ndz[..after]);
                    let (ntu, ntv, ntw) = (&ntu[..after], &ntv[..after], &ntw[..after]);
                    for ja in 0..after {
                        // u and v are attracted (taxis enters negatively),
                        // w is repelled, z carries no taxis.
                        ru[ja] += ((ndu[ja] - pdu[ja]) - (ntu[ja] - ptu[ja])) * inv_cell;
                        rv[ja] += ((ndv[ja] - pdv[ja]) - (ntv[ja] - ptv[ja])) * inv_cell;
                        rw[ja] += ((ndw[ja] - pdw[ja]) + (ntw[ja] - ptw[ja])) * inv_cell;
                        rz[ja] += (ndz[ja] - pdz[ja]) * inv_cell;
                    }

                    std::mem::swap(&mut self.face_prev, &mut self.face_next);
                }
            }
        }
    }
}
