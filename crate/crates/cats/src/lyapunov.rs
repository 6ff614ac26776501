//! Energy functionals that certify convergence towards the four stable
//! steady states, the matching squared-distance functionals, and a
//! monotone-decay monitor for recorded trajectories.
//!
//! Each functional integrates a pointwise-nonnegative expression that
//! vanishes exactly at its own steady state: persisting components
//! contribute `x - x_e - x_e*ln(x/x_e)`, vanishing components contribute
//! `G*x + x^2/2`, and the chemical deviation enters quadratically.

use crate::grid::integrate_slice;
use crate::model::{equilibrium, EquilibriumKind, EquilibriumPoint, ModelError, Params};
use crate::solver::{State, Trajectory};
use thiserror::Error;

/// Field values below this floor are clamped inside logarithms.
pub const LOG_FLOOR: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LyapunovError {
    #[error("energy tag {tag} expects the {expected} steady state, got {got}")]
    KindMismatch {
        tag: EnergyTag,
        expected: EquilibriumKind,
        got: EquilibriumKind,
    },
    #[error("field {field} has a negative value {value:.3e}; the energy integrand is undefined")]
    NegativeField { field: &'static str, value: f64 },
    #[error("trajectory samples carry no energy values")]
    MissingSamples,
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Which of the four energy functionals to evaluate; the CLI names them
/// e1 through e4 in the same order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyTag {
    Coexistence,
    SecondaryOnly,
    PreyVanishing,
    PrimaryVanishing,
}

impl EnergyTag {
    pub fn equilibrium_kind(self) -> EquilibriumKind {
        match self {
            EnergyTag::Coexistence => EquilibriumKind::Coexistence,
            EnergyTag::SecondaryOnly => EquilibriumKind::SecondaryOnly,
            EnergyTag::PreyVanishing => EquilibriumKind::PreyVanishing,
            EnergyTag::PrimaryVanishing => EquilibriumKind::PrimaryVanishing,
        }
    }

    /// Stable one-token name used on the command line.
    pub fn cli_token(self) -> &'static str {
        match self {
            EnergyTag::Coexistence => "e1",
            EnergyTag::SecondaryOnly => "e2",
            EnergyTag::PreyVanishing => "e3",
            EnergyTag::PrimaryVanishing => "e4",
        }
    }

    pub fn parse_cli_token(s: &str) -> Option<Self> {
        match s {
            "e1" => Some(EnergyTag::Coexistence),
            "e2" => Some(EnergyTag::SecondaryOnly),
            "e3" => Some(EnergyTag::PreyVanishing),
            "e4" => Some(EnergyTag::PrimaryVanishing),
            _ => None,
        }
    }
}

impl std::fmt::Display for EnergyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.cli_token(), self.equilibrium_kind())
    }
}

/// An energy functional bound to its steady state.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyKind {
    tag: EnergyTag,
    equilibrium: EquilibriumPoint,
}

impl EnergyKind {
    /// Pairs a tag with a steady state, rejecting mismatched kinds and
    /// states whose log-bearing components are not strictly positive.
    pub fn new(tag: EnergyTag, equilibrium: EquilibriumPoint) -> Result<Self, LyapunovError> {
        if equilibrium.kind != tag.equilibrium_kind() {
            return Err(LyapunovError::KindMismatch {
                tag,
                expected: tag.equilibrium_kind(),
                got: equilibrium.kind,
            });
        }
        let log_components: &[(&'static str, f64)] = match tag {
            EnergyTag::Coexistence => &[
                ("u", equilibrium.u_e),
                ("v", equilibrium.v_e),
                ("w", equilibrium.w_e),
            ],
            EnergyTag::SecondaryOnly => &[("u", equilibrium.u_e)],
            EnergyTag::PreyVanishing => &[("u", equilibrium.u_e), ("v", equilibrium.v_e)],
            EnergyTag::PrimaryVanishing => &[("u", equilibrium.u_e), ("w", equilibrium.w_e)],
        };
        for &(name, value) in log_components {
            if !(value > 0.0) {
                return Err(ModelError::InadmissibleEquilibrium {
                    kind: equilibrium.kind,
                    component: name,
                    value,
                }
                .into());
            }
        }
        Ok(EnergyKind { tag, equilibrium })
    }

    /// Builds the steady state for `tag` from the parameters and binds it.
    pub fn for_params(tag: EnergyTag, p: &Params) -> Result<Self, LyapunovError> {
        Ok(Self::new(tag, equilibrium(p, tag.equilibrium_kind())?)?)
    }

    pub fn tag(&self) -> EnergyTag {
        self.tag
    }

    pub fn equilibrium(&self) -> &EquilibriumPoint {
        &self.equilibrium
    }
}

/// x - c - c*ln(x/c) for c > 0; nonnegative, zero only at x = c.
#[inline]
fn entropy_term(x: f64, c: f64, clamps: &mut u64) -> f64 {
    let xs = if x < LOG_FLOOR {
        *clamps += 1;
        LOG_FLOOR
    } else {
        x
    };
    x - c - c * (xs / c).ln()
}

fn check_nonnegative(state: &State) -> Result<(), LyapunovError> {
    for (name, field) in [("u", &state.u), ("v", &state.v), ("w", &state.w)] {
        if let Some(v) = field.values().iter().copied().find(|v| *v < 0.0) {
            return Err(LyapunovError::NegativeField { field: name, value: v });
        }
    }
    Ok(())
}

/// Evaluates the energy functional over the state, also reporting how many
/// node values hit the logarithm floor.
pub fn eval_energy_counting(
    state: &State,
    kind: &EnergyKind,
    p: &Params,
) -> Result<(f64, u64), LyapunovError> {
    check_nonnegative(state)?;
    let g1 = p.gamma1();
    let g2 = p.gamma2();
    let eq = &kind.equilibrium;
    let (ue, ve, we, ze) = (eq.u_e, eq.v_e, eq.w_e, eq.z_e);
    let n = state.grid().node_count();
    let (u, v, w, z) = (
        state.u.values(),
        state.v.values(),
        state.w.values(),
        state.z.values(),
    );
    let mut clamps = 0u64;
    let mut integrand = vec![0.0; n];
    match kind.tag {
        EnergyTag::Coexistence => {
            for i in 0..n {
                let dz = z[i] - ze;
                integrand[i] = entropy_term(u[i], ue, &mut clamps)
                    + g1 * entropy_term(v[i], ve, &mut clamps)
                    + g2 * entropy_term(w[i], we, &mut clamps)
                    + 0.5 * dz * dz;
            }
        }
        EnergyTag::SecondaryOnly => {
            for i in 0..n {
                integrand[i] = entropy_term(u[i], ue, &mut clamps)
                    + g1 * v[i]
                    + 0.5 * v[i] * v[i]
                    + g2 * w[i]
                    + 0.5 * w[i] * w[i]
                    + 0.5 * z[i] * z[i];
            }
        }
        EnergyTag::PreyVanishing => {
            for i in 0..n {
                let dz = z[i] - ze;
                integrand[i] = entropy_term(u[i], ue, &mut clamps)
                    + g1 * entropy_term(v[i], ve, &mut clamps)
                    + g2 * w[i]
                    + 0.5 * w[i] * w[i]
                    + 0.5 * dz * dz;
            }
        }
        EnergyTag::PrimaryVanishing => {
            for i in 0..n {
                let dz = z[i] - ze;
                integrand[i] = entropy_term(u[i], ue, &mut clamps)
                    + g1 * v[i]
                    + 0.5 * v[i] * v[i]
                    + g2 * entropy_term(w[i], we, &mut clamps)
                    + 0.5 * dz * dz;
            }
        }
    }
    Ok((integrate_slice(state.grid(), &integrand), clamps))
}

/// Evaluates the energy functional over the state.
pub fn eval_energy(state: &State, kind: &EnergyKind, p: &Params) -> Result<f64, LyapunovError> {
    eval_energy_counting(state, kind, p).map(|(e, _)| e)
}

/// Integrated squared distance to the kind's steady state, summed over the
/// four fields.
pub fn eval_f(state: &State, kind: &EnergyKind) -> Result<f64, LyapunovError> {
    let eq = kind.equilibrium.components();
    let n = state.grid().node_count();
    let mut integrand = vec![0.0; n];
    for (field, level) in state.fields().iter().zip(eq) {
        for (acc, x) in integrand.iter_mut().zip(field.values()) {
            let d = x - level;
            *acc += d * d;
        }
    }
    Ok(integrate_slice(state.grid(), &integrand))
}

/// Outcome of scanning an energy series for monotone decay.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayReport {
    pub tag: EnergyTag,
    /// Largest upward jump between consecutive samples (0 when none).
    pub max_violation: f64,
    /// Fraction of nonincreasing transitions; ties count as nonincreasing.
    pub nonincreasing_fraction: f64,
    pub transitions: usize,
}

impl std::fmt::Display for DecayReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "energy {}: {} transitions, nonincreasing fraction {:.4}, max upward jump {:.3e}",
            self.tag, self.transitions, self.nonincreasing_fraction, self.max_violation
        )
    }
}

/// Scans consecutive samples of a recorded trajectory for energy decay.
pub fn decay_monitor(traj: &Trajectory, kind: &EnergyKind) -> Result<DecayReport, LyapunovError> {
    let energies: Option<Vec<f64>> = traj.samples.iter().map(|s| s.energy).collect();
    let energies = energies.ok_or(LyapunovError::MissingSamples)?;
    if energies.is_empty() {
        return Err(LyapunovError::MissingSamples);
    }
    let mut max_violation = 0.0f64;
    let mut nonincreasing = 0usize;
    let transitions = energies.len() - 1;
    for pair in energies.windows(2) {
        let jump = pair[1] - pair[0];
        if jump > 0.0 {
            max_violation = max_violation.max(jump);
        } else {
            nonincreasing += 1;
        }
    }
    // A tie is a nonincreasing transition; `jump > 0` above counts it on
    // the nonincreasing side already.
    let nonincreasing_fraction = if transitions == 0 {
        1.0
    } else {
        nonincreasing as f64 / transitions as f64
    };
    Ok(DecayReport {
        tag: kind.tag,
        max_violation,
        nonincreasing_fraction,
        transitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::build_grid;
    use crate::solver::{RunStatus, Sample, Trajectory};
    use crate::testutil::{
        coexistence_params, prey_vanishing_params, primary_vanishing_params,
        secondary_only_params,
    };
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn params_for(tag: EnergyTag) -> crate::model::Params {
        match tag {
            EnergyTag::Coexistence => coexistence_params(),
            EnergyTag::SecondaryOnly => secondary_only_params(),
            EnergyTag::PreyVanishing => prey_vanishing_params(),
            EnergyTag::PrimaryVanishing => primary_vanishing_params(),
        }
    }

    const ALL_TAGS: [EnergyTag; 4] = [
        EnergyTag::Coexistence,
        EnergyTag::SecondaryOnly,
        EnergyTag::PreyVanishing,
        EnergyTag::PrimaryVanishing,
    ];

    #[test]
    fn zero_at_own_equilibrium() {
        let grid = build_grid(2, 7, -0.5, 0.5).unwrap();
        for tag in ALL_TAGS {
            let p = params_for(tag);
            let kind = EnergyKind::for_params(tag, &p).unwrap();
            let state = State::uniform(grid, kind.equilibrium().components());
            let e = eval_energy(&state, &kind, &p).unwrap();
            assert!(e.abs() < 1e-12, "{tag}: {e}");
            let f = eval_f(&state, &kind).unwrap();
            assert!(f.abs() < 1e-12);
        }
    }

    #[test]
    fn nonnegative_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let grid = build_grid(1, 9, -0.5, 0.5).unwrap();
        for tag in ALL_TAGS {
            let p = params_for(tag);
            let kind = EnergyKind::for_params(tag, &p).unwrap();
            for _ in 0..200 {
                let levels = [
                    rng.gen_range(0.0..3.0),
                    rng.gen_range(0.0..3.0),
                    rng.gen_range(0.0..3.0),
                    rng.gen_range(0.0..3.0),
                ];
                let state = State::uniform(grid, levels);
                let e = eval_energy(&state, &kind, &p).unwrap();
                assert!(e >= -1e-12, "{tag}: E = {e} at {levels:?}");
            }
        }
    }

    #[test]
    fn secondary_only_energy_at_u_equal_e() {
        let grid = build_grid(1, 3, 0.0, 1.0).unwrap();
        let p = secondary_only_params();
        let kind = EnergyKind::for_params(EnergyTag::SecondaryOnly, &p).unwrap();
        let state = State::uniform(grid, [std::f64::consts::E, 0.0, 0.0, 0.0]);
        let e = eval_energy(&state, &kind, &p).unwrap();
        // u - 1 - ln u at u = e is e - 2, over a unit-volume box.
        assert!((e - (std::f64::consts::E - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn zero_energy_only_at_equilibrium() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let grid = build_grid(1, 5, -0.5, 0.5).unwrap();
        let p = coexistence_params();
        let kind = EnergyKind::for_params(EnergyTag::Coexistence, &p).unwrap();
        let eq = kind.equilibrium().components();
        for _ in 0..300 {
            let offset: [f64; 4] = std::array::from_fn(|_| {
                if rng.gen_bool(0.3) {
                    0.0
                } else {
                    rng.gen_range(1e-3..1.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 }
                }
            });
            let levels: [f64; 4] =
                std::array::from_fn(|i| (eq[i] + offset[i]).max(0.0));
            let state = State::uniform(grid, levels);
            let e = eval_energy(&state, &kind, &p).unwrap();
            let dist = levels
                .iter()
                .zip(eq)
                .map(|(l, c)| (l - c).abs())
                .fold(0.0f64, f64::max);
            assert_eq!(e.abs() < 1e-12, dist < 1e-8, "E={e} dist={dist}");
        }
    }

    #[test]
    fn quadratic_approximation_near_equilibrium() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let grid = build_grid(1, 5, -0.5, 0.5).unwrap();
        let p = coexistence_params();
        let kind = EnergyKind::for_params(EnergyTag::Coexistence, &p).unwrap();
        let eq = kind.equilibrium().components();
        let (g1, g2) = (p.gamma1(), p.gamma2());
        for _ in 0..50 {
            let offset: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1e-3..1e-3));
            let levels: [f64; 4] = std::array::from_fn(|i| eq[i] + offset[i]);
            let state = State::uniform(grid, levels);
            let e = eval_energy(&state, &kind, &p).unwrap();
            let quad = 0.5 * offset[0] * offset[0] / eq[0]
                + g1 * 0.5 * offset[1] * offset[1] / eq[1]
                + g2 * 0.5 * offset[2] * offset[2] / eq[2]
                + 0.5 * offset[3] * offset[3];
            let quad = quad * grid.volume();
            assert!(
                (e - quad).abs() <= 0.05 * quad.abs().max(1e-18),
                "E={e} quad={quad}"
            );
        }
    }

    #[test]
    fn log_floor_is_counted() {
        let grid = build_grid(1, 3, 0.0, 1.0).unwrap();
        let p = coexistence_params();
        let kind = EnergyKind::for_params(EnergyTag::Coexistence, &p).unwrap();
        let state = State::uniform(grid, [0.0, 0.5, 0.5, 0.5]);
        let (e, clamps) = eval_energy_counting(&state, &kind, &p).unwrap();
        assert!(clamps >= 3);
        assert!(e.is_finite() && e > 1.0);
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let p = coexistence_params();
        let wrong = equilibrium(&p, EquilibriumKind::SecondaryOnly).unwrap();
        let err = EnergyKind::new(EnergyTag::Coexistence, wrong).unwrap_err();
        assert!(matches!(err, LyapunovError::KindMismatch { .. }));
    }

    #[test]
    fn inadmissible_equilibrium_is_rejected() {
        // Coexistence point has a negative component for these parameters.
        let err = EnergyKind::for_params(EnergyTag::Coexistence, &secondary_only_params())
            .unwrap_err();
        assert!(matches!(err, LyapunovError::Model(_)));
    }

    #[test]
    fn negative_field_is_rejected() {
        let grid = build_grid(1, 3, 0.0, 1.0).unwrap();
        let p = coexistence_params();
        let kind = EnergyKind::for_params(EnergyTag::Coexistence, &p).unwrap();
        let state = State::uniform(grid, [0.5, -0.1, 0.5, 0.5]);
        let err = eval_energy(&state, &kind, &p).unwrap_err();
        assert!(matches!(
            err,
            LyapunovError::NegativeField { field: "v", .. }
        ));
    }

    #[test]
    fn f_of_single_field_offset() {
        let grid = build_grid(2, 5, -0.5, 0.5).unwrap();
        let p = coexistence_params();
        let kind = EnergyKind::for_params(EnergyTag::Coexistence, &p).unwrap();
        let eq = kind.equilibrium().components();
        let delta = 0.25;
        let levels = [eq[0] + delta, eq[1], eq[2], eq[3]];
        let f = eval_f(&State::uniform(grid, levels), &kind).unwrap();
        assert!((f - delta * delta * grid.volume()).abs() < 1e-12);

        // Doubling every deviation exactly quadruples f.
        let levels2 = [eq[0] + 2.0 * delta, eq[1], eq[2], eq[3]];
        let f2 = eval_f(&State::uniform(grid, levels2), &kind).unwrap();
        assert_eq!(f2, 4.0 * f);
    }

    fn synthetic_trajectory(energies: &[Option<f64>]) -> Trajectory {
        let grid = build_grid(1, 3, 0.0, 1.0).unwrap();
        let samples = energies
            .iter()
            .enumerate()
            .map(|(i, e)| Sample {
                t: i as f64,
                dist: None,
                energy: *e,
                mass: [0.0; 3],
                sup_v: 0.0,
                sup_w: 0.0,
            })
            .collect();
        Trajectory {
            samples,
            final_state: State::uniform(grid, [0.0; 4]),
            clamp_count: 0,
            steps: energies.len() as u64,
            status: RunStatus::ReachedTEnd,
        }
    }

    #[test]
    fn decay_monitor_on_synthetic_series() {
        let p = coexistence_params();
        let kind = EnergyKind::for_params(EnergyTag::Coexistence, &p).unwrap();

        let decreasing = synthetic_trajectory(&[Some(3.0), Some(2.0), Some(1.0), Some(0.5)]);
        let r = decay_monitor(&decreasing, &kind).unwrap();
        assert_eq!(r.max_violation, 0.0);
        assert_eq!(r.nonincreasing_fraction, 1.0);

        let constant = synthetic_trajectory(&[Some(1.0), Some(1.0), Some(1.0)]);
        let r = decay_monitor(&constant, &kind).unwrap();
        assert_eq!(r.max_violation, 0.0);
        assert_eq!(r.nonincreasing_fraction, 1.0);

        let bump = synthetic_trajectory(&[Some(2.0), Some(1.0), Some(1.5), Some(0.2)]);
        let r = decay_monitor(&bump, &kind).unwrap();
        assert_eq!(r.max_violation, 0.5);
        assert!((r.nonincreasing_fraction - 2.0 / 3.0).abs() < 1e-15);

        let missing = synthetic_trajectory(&[Some(2.0), None, Some(1.0)]);
        assert!(matches!(
            decay_monitor(&missing, &kind),
            Err(LyapunovError::MissingSamples)
        ));
    }
}
