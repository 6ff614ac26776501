//! Trajectory post-processing: empirical exponential decay-rate fitting on
//! distance series and convergence verdicts against a steady state.

use crate::grid::linf_distance;
use crate::model::EquilibriumPoint;
use crate::solver::{RunStatus, Trajectory};
use thiserror::Error;

/// Distances at or below this floor are numerical zeros and excluded from
/// log-space fitting.
pub const DISTANCE_FLOOR: f64 = 1e-15;

/// Default sup-distance tolerance for convergence verdicts.
pub const DEFAULT_VERDICT_TOL: f64 = 2e-2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiagnosticsError {
    #[error("decay fit needs at least 3 usable samples in the window, got {usable}")]
    TooFewSamples { usable: usize },
    #[error("every distance in the fit window is at the numerical floor; the series has already converged and no rate can be resolved")]
    AllBelowFloor,
    #[error("trajectory aborted; no convergence verdict is possible")]
    AbortedTrajectory,
}

/// Least-squares exponential fit of a distance series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit {
    /// Fitted decay rate per unit time, clipped below at zero.
    pub rate: f64,
    /// Fitted log-amplitude at t = 0.
    pub intercept: f64,
    /// Goodness of fit in [0, 1]; 0 by convention for a flat series.
    pub r_squared: f64,
    /// Time span of the samples actually used.
    pub window: (f64, f64),
}

/// Ordinary least squares of ln(distance) against t over the trailing
/// `window_fraction` of the samples. Distances at the numerical floor are
/// excluded.
///
/// Panics if `window_fraction` is outside (0, 1].
pub fn fit_decay_rate(
    samples: &[(f64, f64)],
    window_fraction: f64,
) -> Result<DecayFit, DiagnosticsError> {
    assert!(
        window_fraction > 0.0 && window_fraction <= 1.0,
        "window_fraction must be in (0, 1], got {window_fraction}"
    );
    let count = ((samples.len() as f64) * window_fraction).ceil() as usize;
    let window = &samples[samples.len() - count.min(samples.len())..];
    let usable: Vec<(f64, f64)> = window
        .iter()
        .filter(|(_, d)| *d > DISTANCE_FLOOR)
        .map(|(t, d)| (*t, d.ln()))
        .collect();
    if usable.is_empty() {
        return Err(DiagnosticsError::AllBelowFloor);
    }
    if usable.len() < 3 {
        return Err(DiagnosticsError::TooFewSamples {
            usable: usable.len(),
        });
    }

    let n = usable.len() as f64;
    let mean_t = usable.iter().map(|(t, _)| t).sum::<f64>() / n;
    let mean_y = usable.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = usable.iter().map(|(t, _)| (t - mean_t) * (t - mean_t)).sum();
    let sxy: f64 = usable
        .iter()
        .map(|(t, y)| (t - mean_t) * (y - mean_y))
        .sum();
    if sxx == 0.0 {
        return Err(DiagnosticsError::TooFewSamples { usable: 1 });
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_t;
    let ss_tot: f64 = usable.iter().map(|(_, y)| (y - mean_y) * (y - mean_y)).sum();
    let ss_res: f64 = usable
        .iter()
        .map(|(t, y)| {
            let e = y - (intercept + slope * t);
            e * e
        })
        .sum();
    let r_squared = if ss_tot == 0.0 {
        0.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(DecayFit {
        rate: (-slope).max(0.0),
        intercept,
        r_squared,
        window: (window.first().unwrap().0, window.last().unwrap().0),
    })
}

/// Final per-field sup distances against a steady state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub distances: [f64; 4],
    pub tol: f64,
    pub pass: bool,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: sup distances u={:.3e} v={:.3e} w={:.3e} z={:.3e} (tol {:.1e})",
            if self.pass { "PASS" } else { "FAIL" },
            self.distances[0],
            self.distances[1],
            self.distances[2],
            self.distances[3],
            self.tol
        )
    }
}

/// Passes when every per-field sup distance of the final state to the
/// target is below `tol`.
pub fn convergence_verdict(
    traj: &Trajectory,
    target: &EquilibriumPoint,
    tol: f64,
) -> Result<Verdict, DiagnosticsError> {
    if traj.status == RunStatus::Aborted {
        return Err(DiagnosticsError::AbortedTrajectory);
    }
    let c = target.components();
    let s = &traj.final_state;
    let distances = [
        linf_distance(&s.u, c[0]),
        linf_distance(&s.v, c[1]),
        linf_distance(&s.w, c[2]),
        linf_distance(&s.z, c[3]),
    ];
    Ok(Verdict {
        distances,
        tol,
        pass: distances.iter().all(|d| *d < tol),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::build_grid;
    use crate::model::{equilibrium, EquilibriumKind};
    use crate::solver::{Sample, State};
    use crate::testutil::coexistence_params;

    fn series(f: impl Fn(f64) -> f64, n: usize, t_max: f64) -> Vec<(f64, f64)> {
        (0..n)
            .map(|i| {
                let t = t_max * i as f64 / (n - 1) as f64;
                (t, f(t))
            })
            .collect()
    }

    #[test]
    fn exact_exponential_is_recovered() {
        let s = series(|t| 5.0 * (-2.0 * t).exp(), 50, 5.0);
        let fit = fit_decay_rate(&s, 1.0).unwrap();
        assert!((fit.rate - 2.0).abs() < 1e-9, "rate {}", fit.rate);
        assert!(fit.r_squared > 0.999999);
        assert!((fit.intercept - 5.0f64.ln()).abs() < 1e-9);
        assert_eq!(fit.window, (0.0, 5.0));
    }

    #[test]
    fn constant_series_has_zero_rate_and_zero_r2() {
        let s = series(|_| 1.0, 20, 2.0);
        let fit = fit_decay_rate(&s, 1.0).unwrap();
        assert_eq!(fit.rate, 0.0);
        assert_eq!(fit.r_squared, 0.0);
    }

    #[test]
    fn trailing_window_ignores_the_transient() {
        // Garbage plateau followed by a clean exponential tail.
        let s: Vec<(f64, f64)> = (0..100)
            .map(|i| {
                let t = i as f64 * 0.1;
                if t < 5.0 {
                    (t, 3.0)
                } else {
                    (t, 3.0 * (-1.5 * (t - 5.0)).exp())
                }
            })
            .collect();
        let fit = fit_decay_rate(&s, 0.4).unwrap();
        assert!((fit.rate - 1.5).abs() < 1e-6);
        assert!(fit.window.0 >= 5.9);
    }

    #[test]
    fn time_translation_leaves_rate_unchanged() {
        let s = series(|t| 0.7 * (-0.8 * t).exp(), 40, 8.0);
        let shifted: Vec<(f64, f64)> = s.iter().map(|(t, d)| (t + 13.5, *d)).collect();
        let a = fit_decay_rate(&s, 0.5).unwrap();
        let b = fit_decay_rate(&shifted, 0.5).unwrap();
        assert!((a.rate - b.rate).abs() < 1e-12);
        assert!((b.intercept - (a.intercept + 0.8 * 13.5)).abs() < 1e-9);
    }

    #[test]
    fn distance_scaling_shifts_only_the_intercept() {
        let s = series(|t| 0.7 * (-0.8 * t).exp(), 40, 8.0);
        let scaled: Vec<(f64, f64)> = s.iter().map(|(t, d)| (*t, 40.0 * d)).collect();
        let a = fit_decay_rate(&s, 1.0).unwrap();
        let b = fit_decay_rate(&scaled, 1.0).unwrap();
        assert!((a.rate - b.rate).abs() < 1e-12);
        assert!((b.intercept - a.intercept - 40.0f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn floor_and_sparsity_errors() {
        let dead = series(|_| 1e-20, 10, 1.0);
        assert!(matches!(
            fit_decay_rate(&dead, 1.0),
            Err(DiagnosticsError::AllBelowFloor)
        ));
        let sparse = vec![(0.0, 1.0), (1.0, 0.5), (2.0, 1e-20), (3.0, 1e-20)];
        assert!(matches!(
            fit_decay_rate(&sparse, 1.0),
            Err(DiagnosticsError::TooFewSamples { usable: 2 })
        ));
    }

    fn trajectory_at(levels: [f64; 4], status: RunStatus) -> Trajectory {
        let grid = build_grid(1, 3, 0.0, 1.0).unwrap();
        Trajectory {
            samples: vec![Sample {
                t: 0.0,
                dist: None,
                energy: None,
                mass: [0.0; 3],
                sup_v: 0.0,
                sup_w: 0.0,
            }],
            final_state: State::uniform(grid, levels),
            clamp_count: 0,
            steps: 0,
            status,
        }
    }

    #[test]
    fn verdict_at_target_passes_and_is_monotone_in_tol() {
        let p = coexistence_params();
        let eq = equilibrium(&p, EquilibriumKind::Coexistence).unwrap();
        let traj = trajectory_at(eq.components(), RunStatus::ReachedTEnd);
        let v = convergence_verdict(&traj, &eq, 1e-10).unwrap();
        assert!(v.pass);

        let mut off = eq.components();
        off[1] += 0.015;
        let traj = trajectory_at(off, RunStatus::ReachedTEnd);
        let tight = convergence_verdict(&traj, &eq, 1e-2).unwrap();
        let loose = convergence_verdict(&traj, &eq, 2e-2).unwrap();
        assert!(!tight.pass);
        assert!(loose.pass);
    }

    #[test]
    fn verdict_against_wrong_target_fails() {
        let p = coexistence_params();
        let eq = equilibrium(&p, EquilibriumKind::Coexistence).unwrap();
        let trivial = equilibrium(&p, EquilibriumKind::SecondaryOnly).unwrap();
        let traj = trajectory_at(eq.components(), RunStatus::ReachedTEnd);
        let v = convergence_verdict(&traj, &trivial, DEFAULT_VERDICT_TOL).unwrap();
        assert!(!v.pass);
        assert!(v.distances[1] > 0.4); // v-component differs by 3/7
    }

    #[test]
    fn aborted_trajectory_is_rejected() {
        let p = coexistence_params();
        let eq = equilibrium(&p, EquilibriumKind::Coexistence).unwrap();
        let traj = trajectory_at(eq.components(), RunStatus::Aborted);
        assert!(matches!(
            convergence_verdict(&traj, &eq, 1e-2),
            Err(DiagnosticsError::AbortedTrajectory)
        ));
    }
}
