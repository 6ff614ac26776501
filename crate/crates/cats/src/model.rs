//! Model coefficients, reaction kinetics, spatially constant steady states,
//! and the algebraic stability-condition checkers.
//!
//! The reaction part of the system couples a secondary predator `u`, a
//! primary predator `v`, a prey `w` and a chemical signal `z`:
//!
//! ```text
//! du/dt = mu1 * u * (1 - u + a1*v + a2*w)
//! dv/dt = mu2 * v * (1 - v - a3*u + a4*w)
//! dw/dt = mu3 * w * (1 - w - a5*u - a6*v)
//! dz/dt = alpha*v + beta*w - gamma*z
//! ```
//!
//! Everything in this module is pure arithmetic on [`Params`]; no grids or
//! fields are involved.

use serde::Serialize;
use thiserror::Error;

/// All seventeen model coefficients. Every field must be strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
    /// Alarm-taxis coefficient (secondary predator towards grad(v*w)).
    pub chi1: f64,
    /// Chemo-attraction coefficient (primary predator towards grad z).
    pub chi2: f64,
    /// Chemo-repulsion coefficient (prey away from grad z).
    pub xi: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub mu3: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
    pub a6: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("parameter `{0}` must be strictly positive, got {1}")]
    NonPositiveParam(&'static str, f64),
    #[error("steady-state denominator {0:.3e} is numerically zero; the closed-form point is undefined for these parameters")]
    DegenerateDenominator(f64),
    #[error("{kind} steady state has a negative component ({component} = {value:.6}); the condition set is vacuous for these parameters")]
    InadmissibleEquilibrium {
        kind: EquilibriumKind,
        component: &'static str,
        value: f64,
    },
    #[error("no stability condition set is associated with the {0} steady state")]
    UnsupportedTarget(EquilibriumKind),
}

impl Params {
    /// Checks the strict positivity of every coefficient.
    pub fn validate(&self) -> Result<(), ModelError> {
        let fields: [(&'static str, f64); 19] = [
            ("d1", self.d1),
            ("d2", self.d2),
            ("d3", self.d3),
            ("d4", self.d4),
            ("chi1", self.chi1),
            ("chi2", self.chi2),
            ("xi", self.xi),
            ("mu1", self.mu1),
            ("mu2", self.mu2),
            ("mu3", self.mu3),
            ("a1", self.a1),
            ("a2", self.a2),
            ("a3", self.a3),
            ("a4", self.a4),
            ("a5", self.a5),
            ("a6", self.a6),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
        ];
        for (name, value) in fields {
            if !(value > 0.0) || !value.is_finite() {
                return Err(ModelError::NonPositiveParam(name, value));
            }
        }
        Ok(())
    }

    /// Ratio weighting the primary-predator terms in the energy functionals.
    pub fn gamma1(&self) -> f64 {
        self.mu1 * self.a1 / (self.mu2 * self.a3)
    }

    /// Ratio weighting the prey terms in the energy functionals.
    pub fn gamma2(&self) -> f64 {
        self.mu1 * self.a2 / (self.mu3 * self.a5)
    }
}

/// Pointwise reaction rates of the four equations, in the order (u, v, w, z).
#[inline]
pub fn reaction_terms(u: f64, v: f64, w: f64, z: f64, p: &Params) -> [f64; 4] {
    [
        p.mu1 * u * (1.0 - u + p.a1 * v + p.a2 * w),
        p.mu2 * v * (1.0 - v - p.a3 * u + p.a4 * w),
        p.mu3 * w * (1.0 - w - p.a5 * u - p.a6 * v),
        p.alpha * v + p.beta * w - p.gamma * z,
    ]
}

/// The eight spatially constant steady states, tagged by which populations
/// persist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EquilibriumKind {
    /// (0, 0, 0, 0): everything dies out.
    Extinction,
    /// (1, 0, 0, 0): only the secondary predator persists.
    SecondaryOnly,
    /// (0, 1, 0, alpha/gamma): only the primary predator persists.
    PrimaryOnly,
    /// (0, 0, 1, beta/gamma): only the prey persists.
    PreyOnly,
    /// u = 0, primary predator and prey coexist.
    SecondaryVanishing,
    /// v = 0, secondary predator and prey coexist.
    PrimaryVanishing,
    /// w = 0, both predators coexist.
    PreyVanishing,
    /// All three species persist.
    Coexistence,
}

impl std::fmt::Display for EquilibriumKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EquilibriumKind::Extinction => "extinction",
            EquilibriumKind::SecondaryOnly => "secondary-only",
            EquilibriumKind::PrimaryOnly => "primary-only",
            EquilibriumKind::PreyOnly => "prey-only",
            EquilibriumKind::SecondaryVanishing => "secondary-vanishing",
            EquilibriumKind::PrimaryVanishing => "primary-vanishing",
            EquilibriumKind::PreyVanishing => "prey-vanishing",
            EquilibriumKind::Coexistence => "coexistence",
        };
        f.write_str(s)
    }
}

/// A spatially constant steady state with an admissibility flag.
///
/// `admissible` is true exactly when all four components are >= 0; no
/// roundoff slack is applied, tiny negative components from the closed
/// forms are reported as-is.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquilibriumPoint {
    pub kind: EquilibriumKind,
    pub u_e: f64,
    pub v_e: f64,
    pub w_e: f64,
    pub z_e: f64,
    pub admissible: bool,
}

impl EquilibriumPoint {
    fn from_populations(kind: EquilibriumKind, u: f64, v: f64, w: f64, p: &Params) -> Self {
        let z = chemical_level(v, w, p);
        EquilibriumPoint {
            kind,
            u_e: u,
            v_e: v,
            w_e: w,
            z_e: z,
            admissible: u >= 0.0 && v >= 0.0 && w >= 0.0 && z >= 0.0,
        }
    }

    pub fn components(&self) -> [f64; 4] {
        [self.u_e, self.v_e, self.w_e, self.z_e]
    }

    /// Reaction rates evaluated at the point; zero (to roundoff) whenever the
    /// point is a genuine steady state.
    pub fn residual(&self, p: &Params) -> [f64; 4] {
        reaction_terms(self.u_e, self.v_e, self.w_e, self.z_e, p)
    }
}

/// The chemical level induced by population levels: z = (alpha*v + beta*w)/gamma.
///
/// Every steady state computes its z-component through this single
/// expression so the identity holds bitwise.
#[inline]
fn chemical_level(v: f64, w: f64, p: &Params) -> f64 {
    (p.alpha * v + p.beta * w) / p.gamma
}

/// Shared denominator of the coexistence closed forms.
fn coexistence_denominator(p: &Params) -> f64 {
    1.0 + p.a1 * (p.a3 + p.a4 * p.a5) + p.a4 * p.a6 + p.a2 * (p.a5 - p.a3 * p.a6)
}

/// The all-species steady state from its closed-form expressions.
pub fn coexistence_equilibrium(p: &Params) -> Result<EquilibriumPoint, ModelError> {
    let den = coexistence_denominator(p);
    if den.abs() < 1e-14 {
        return Err(ModelError::DegenerateDenominator(den));
    }
    let u = (1.0 + p.a1 + p.a2 + p.a1 * p.a4 + p.a6 * (p.a4 - p.a2)) / den;
    let v = (1.0 - p.a3 * (1.0 + p.a2) + p.a4 + p.a5 * (p.a2 - p.a4)) / den;
    let w = (1.0 + p.a1 * (p.a3 - p.a5) - p.a5 + p.a6 * (p.a3 - 1.0)) / den;
    Ok(EquilibriumPoint::from_populations(
        EquilibriumKind::Coexistence,
        u,
        v,
        w,
        p,
    ))
}

/// The steady state of the requested kind.
pub fn equilibrium(p: &Params, kind: EquilibriumKind) -> Result<EquilibriumPoint, ModelError> {
    use EquilibriumKind::*;
    let point = match kind {
        Extinction => EquilibriumPoint::from_populations(kind, 0.0, 0.0, 0.0, p),
        SecondaryOnly => EquilibriumPoint::from_populations(kind, 1.0, 0.0, 0.0, p),
        PrimaryOnly => EquilibriumPoint::from_populations(kind, 0.0, 1.0, 0.0, p),
        PreyOnly => EquilibriumPoint::from_populations(kind, 0.0, 0.0, 1.0, p),
        SecondaryVanishing => {
            let den = 1.0 + p.a4 * p.a6;
            if den.abs() < 1e-14 {
                return Err(ModelError::DegenerateDenominator(den));
            }
            EquilibriumPoint::from_populations(
                kind,
                0.0,
                (1.0 + p.a4) / den,
                (1.0 - p.a6) / den,
                p,
            )
        }
        PrimaryVanishing => {
            let den = 1.0 + p.a2 * p.a5;
            if den.abs() < 1e-14 {
                return Err(ModelError::DegenerateDenominator(den));
            }
            EquilibriumPoint::from_populations(
                kind,
                (1.0 + p.a2) / den,
                0.0,
                (1.0 - p.a5) / den,
                p,
            )
        }
        PreyVanishing => {
            let den = 1.0 + p.a1 * p.a3;
            if den.abs() < 1e-14 {
                return Err(ModelError::DegenerateDenominator(den));
            }
            EquilibriumPoint::from_populations(
                kind,
                (1.0 + p.a1) / den,
                (1.0 - p.a3) / den,
                0.0,
                p,
            )
        }
        Coexistence => coexistence_equilibrium(p)?,
    };
    Ok(point)
}

/// All eight steady states in a fixed order: the four single/no-species
/// points, then the three two-species points, then coexistence.
pub fn enumerate_equilibria(p: &Params) -> Result<[EquilibriumPoint; 8], ModelError> {
    use EquilibriumKind::*;
    Ok([
        equilibrium(p, Extinction)?,
        equilibrium(p, SecondaryOnly)?,
        equilibrium(p, PrimaryOnly)?,
        equilibrium(p, PreyOnly)?,
        equilibrium(p, SecondaryVanishing)?,
        equilibrium(p, PrimaryVanishing)?,
        equilibrium(p, PreyVanishing)?,
        equilibrium(p, Coexistence)?,
    ])
}

/// Which condition set a [`ConditionReport`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionTarget {
    /// Feasibility (strict positivity) of the coexistence steady state.
    CoexistenceFeasibility,
    /// Convergence conditions towards the coexistence state.
    CoexistenceStability,
    /// Convergence conditions towards (1, 0, 0, 0).
    SecondaryOnlyStability,
    /// Convergence conditions towards the prey-vanishing state.
    PreyVanishingStability,
    /// Convergence conditions towards the primary-predator-vanishing state.
    PrimaryVanishingStability,
}

impl std::fmt::Display for ConditionTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConditionTarget::CoexistenceFeasibility => "coexistence feasibility",
            ConditionTarget::CoexistenceStability => "coexistence stability",
            ConditionTarget::SecondaryOnlyStability => "secondary-only stability",
            ConditionTarget::PreyVanishingStability => "prey-vanishing stability",
            ConditionTarget::PrimaryVanishingStability => "primary-predator-vanishing stability",
        };
        f.write_str(s)
    }
}

/// Direction of a strict scalar comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// Clause holds when lhs < rhs.
    LessThan,
    /// Clause holds when lhs > rhs.
    GreaterThan,
}

/// One strict inequality, evaluated numerically.
///
/// `margin` is positive exactly when the clause is satisfied: rhs − lhs for
/// `<` clauses and lhs − rhs for `>` clauses. Comparisons are exact; no
/// epsilon slack is injected, so an equality evaluates as *not* satisfied
/// with margin 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Clause {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub relation: Relation,
    pub satisfied: bool,
    pub margin: f64,
}

impl Clause {
    fn new(label: impl Into<String>, lhs: f64, rhs: f64, relation: Relation) -> Self {
        let (satisfied, margin) = match relation {
            Relation::LessThan => (lhs < rhs, rhs - lhs),
            Relation::GreaterThan => (lhs > rhs, lhs - rhs),
        };
        Clause {
            label: label.into(),
            lhs,
            rhs,
            relation,
            satisfied,
            margin,
        }
    }

    fn lt(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Clause::new(label, lhs, rhs, Relation::LessThan)
    }

    fn gt(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Clause::new(label, lhs, rhs, Relation::GreaterThan)
    }
}

/// Outcome of evaluating a set of strict inequalities on one parameter set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub target: ConditionTarget,
    pub gamma1: f64,
    pub gamma2: f64,
    pub clauses: Vec<Clause>,
    pub all_satisfied: bool,
}

impl ConditionReport {
    fn new(target: ConditionTarget, p: &Params, clauses: Vec<Clause>) -> Self {
        let all_satisfied = clauses.iter().all(|c| c.satisfied);
        ConditionReport {
            target,
            gamma1: p.gamma1(),
            gamma2: p.gamma2(),
            clauses,
            all_satisfied,
        }
    }
}

impl std::fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "condition set: {}", self.target)?;
        writeln!(
            f,
            "Gamma1 = {:.6}, Gamma2 = {:.6}",
            self.gamma1, self.gamma2
        )?;
        for c in &self.clauses {
            let op = match c.relation {
                Relation::LessThan => "<",
                Relation::GreaterThan => ">",
            };
            writeln!(
                f,
                "  [{}] {:<46} {:>13.6} {} {:>13.6}  margin {:+.3e}",
                if c.satisfied { "ok" } else { "VIOLATED" },
                c.label,
                c.lhs,
                op,
                c.rhs,
                c.margin,
            )?;
        }
        write!(
            f,
            "all satisfied: {}",
            if self.all_satisfied { "yes" } else { "no" }
        )
    }
}

/// Evaluates the three strict inequalities that make the coexistence steady
/// state feasible (all components positive).
pub fn check_coexistence_conditions(p: &Params) -> ConditionReport {
    let min_arg_1 = 1.0 + p.a1 + p.a2 + p.a1 * p.a4 + p.a4 * p.a6;
    let min_arg_2 = (1.0 + p.a1 * (p.a3 + p.a4 * p.a5) + p.a4 * p.a6 + p.a2 * p.a5) / p.a3;
    let clauses = vec![
        Clause::lt(
            format!(
                "a2*a6 < min({:.6}, {:.6})",
                min_arg_1, min_arg_2
            ),
            p.a2 * p.a6,
            min_arg_1.min(min_arg_2),
        ),
        Clause::lt(
            "a3*(1+a2) + a4*a5 < 1 + a4 + a2*a5",
            p.a3 * (1.0 + p.a2) + p.a4 * p.a5,
            1.0 + p.a4 + p.a2 * p.a5,
        ),
        Clause::lt(
            "a5*(1+a1) + a6 < 1 + a3*(a1+a6)",
            p.a5 * (1.0 + p.a1) + p.a6,
            1.0 + p.a3 * (p.a1 + p.a6),
        ),
    ];
    ConditionReport::new(ConditionTarget::CoexistenceFeasibility, p, clauses)
}

fn require_admissible(point: &EquilibriumPoint) -> Result<(), ModelError> {
    let names = ["u", "v", "w", "z"];
    for (name, value) in names.iter().zip(point.components()) {
        if value < 0.0 {
            return Err(ModelError::InadmissibleEquilibrium {
                kind: point.kind,
                component: name,
                value,
            });
        }
    }
    Ok(())
}

/// Evaluates the convergence condition set associated with one of the four
/// stable steady states.
///
/// `sup_v` and `sup_w` stand in for the solution sup-norms appearing in the
/// conditions; they are caller-supplied (for the shipped bell initial data
/// the trajectory maxima are the initial peaks 3 and 2).
pub fn check_stability_conditions(
    p: &Params,
    target: EquilibriumKind,
    sup_v: f64,
    sup_w: f64,
) -> Result<ConditionReport, ModelError> {
    let g1 = p.gamma1();
    let g2 = p.gamma2();
    let sv2 = sup_v * sup_v;
    let sw2 = sup_w * sup_w;
    match target {
        EquilibriumKind::Coexistence => {
            let eq = coexistence_equilibrium(p)?;
            require_admissible(&eq)?;
            let (us, vs, ws) = (eq.u_e, eq.v_e, eq.w_e);
            let m1 = p.d1 * p.d2 * vs * g1 / (us * sv2 * sw2);
            let m2 = p.d1 * p.d3 * ws * g2 / (us * sv2 * sw2);
            let clauses = vec![
                Clause::lt(
                    format!("(i) chi1^2 < min({:.6}, {:.6})", m1, m2),
                    p.chi1 * p.chi1,
                    m1.min(m2),
                ),
                Clause::lt(
                    "(ii) d3*chi2^2*v*G1 + d2*xi^2*w*G2 < 2*d2*d3*d4",
                    p.d3 * p.chi2 * p.chi2 * vs * g1 + p.d2 * p.xi * p.xi * ws * g2,
                    2.0 * p.d2 * p.d3 * p.d4,
                ),
                Clause::lt(
                    "(iii) mu2*a4*G1 + alpha < 2*mu2*G1 + mu3*a6*G2",
                    p.mu2 * p.a4 * g1 + p.alpha,
                    2.0 * p.mu2 * g1 + p.mu3 * p.a6 * g2,
                ),
                Clause::lt(
                    "(iv) mu2*a4*G1 + beta < 2*mu3*G2 + mu3*a6*G2",
                    p.mu2 * p.a4 * g1 + p.beta,
                    2.0 * p.mu3 * g2 + p.mu3 * p.a6 * g2,
                ),
                Clause::lt("(v) alpha + beta < 2*gamma", p.alpha + p.beta, 2.0 * p.gamma),
                Clause::gt(
                    "(vi) a1*a4*a5 > a2*a3*a6",
                    p.a1 * p.a4 * p.a5,
                    p.a2 * p.a3 * p.a6,
                ),
            ];
            Ok(ConditionReport::new(
                ConditionTarget::CoexistenceStability,
                p,
                clauses,
            ))
        }
        EquilibriumKind::SecondaryOnly => {
            let m1 = p.d1 * p.d2 / sw2;
            let m2 = p.d1 * p.d3 / sv2;
            let clauses = vec![
                Clause::lt(
                    format!("(i) chi1^2 < min({:.6}, {:.6})", m1, m2),
                    p.chi1 * p.chi1,
                    m1.min(m2),
                ),
                Clause::lt(
                    "(ii) d3*chi2^2*sup_v^2 + d2*xi^2*sup_w^2 < 2*d2*d3*d4",
                    p.d3 * p.chi2 * p.chi2 * sv2 + p.d2 * p.xi * p.xi * sw2,
                    2.0 * p.d2 * p.d3 * p.d4,
                ),
                Clause::lt(
                    "(iii.a) mu2 + mu2*a4*sup_w + alpha/2 < G1*mu2",
                    p.mu2 + p.mu2 * p.a4 * sup_w + p.alpha / 2.0,
                    g1 * p.mu2,
                ),
                Clause::lt("(iii.b) G1*mu2 < mu1*a1", g1 * p.mu2, p.mu1 * p.a1),
                Clause::lt(
                    "(iv.a) mu3 + beta/2 < G2*mu3",
                    p.mu3 + p.beta / 2.0,
                    g2 * p.mu3,
                ),
                Clause::lt("(iv.b) G2*mu3 < mu1*a2", g2 * p.mu3, p.mu1 * p.a2),
                Clause::lt("(v) alpha + beta < 2*gamma", p.alpha + p.beta, 2.0 * p.gamma),
                Clause::lt(
                    "(vi) a1*a4*a5 < a2*a3*a6",
                    p.a1 * p.a4 * p.a5,
                    p.a2 * p.a3 * p.a6,
                ),
            ];
            Ok(ConditionReport::new(
                ConditionTarget::SecondaryOnlyStability,
                p,
                clauses,
            ))
        }
        EquilibriumKind::PreyVanishing => {
            let eq = equilibrium(p, EquilibriumKind::PreyVanishing)?;
            require_admissible(&eq)?;
            let (ub, vb) = (eq.u_e, eq.v_e);
            let m1 = p.d1 * p.d2 * vb * g1 / (ub * sv2 * sw2);
            let m2 = p.d1 * p.d3 / (ub * sv2);
            let clauses = vec![
                Clause::lt(
                    format!("(i) chi1^2 < min({:.6}, {:.6})", m1, m2),
                    p.chi1 * p.chi1,
                    m1.min(m2),
                ),
                Clause::lt(
                    "(ii) d3*chi2^2*v*G1 + d2*xi^2*sup_w^2 < 2*d2*d3*d4",
                    p.d3 * p.chi2 * p.chi2 * vb * g1 + p.d2 * p.xi * p.xi * sw2,
                    2.0 * p.d2 * p.d3 * p.d4,
                ),
                Clause::lt(
                    "(iii.a) mu3 + beta/2 < G2*mu3",
                    p.mu3 + p.beta / 2.0,
                    g2 * p.mu3,
                ),
                Clause::lt(
                    "(iii.b) G2*mu3 < mu1*a2*u + G1*mu2*a4*v",
                    g2 * p.mu3,
                    p.mu1 * p.a2 * ub + g1 * p.mu2 * p.a4 * vb,
                ),
                Clause::lt("(iv) alpha + beta < 2*gamma", p.alpha + p.beta, 2.0 * p.gamma),
                Clause::lt(
                    "(v) a1*a4*a5 < a2*a3*a6",
                    p.a1 * p.a4 * p.a5,
                    p.a2 * p.a3 * p.a6,
                ),
                Clause::lt("(vi) alpha < 2*G1*mu2", p.alpha, 2.0 * g1 * p.mu2),
            ];
            Ok(ConditionReport::new(
                ConditionTarget::PreyVanishingStability,
                p,
                clauses,
            ))
        }
        EquilibriumKind::PrimaryVanishing => {
            let eq = equilibrium(p, EquilibriumKind::PrimaryVanishing)?;
            require_admissible(&eq)?;
            let (uh, wh) = (eq.u_e, eq.w_e);
            let m1 = p.d1 * p.d2 / (uh * sw2);
            let m2 = p.d1 * p.d3 * wh * g2 / (uh * sv2 * sw2);
            let clauses = vec![
                Clause::lt(
                    format!("(i) chi1^2 < min({:.6}, {:.6})", m1, m2),
                    p.chi1 * p.chi1,
                    m1.min(m2),
                ),
                Clause::lt(
                    "(ii) d3*chi2^2*sup_v^2 + d2*xi^2*w*G2 < 2*d2*d3*d4",
                    p.d3 * p.chi2 * p.chi2 * sv2 + p.d2 * p.xi * p.xi * wh * g2,
                    2.0 * p.d2 * p.d3 * p.d4,
                ),
                Clause::lt(
                    "(iii) mu2 + mu2*a4*sup_w + alpha/2 < G1*mu2",
                    p.mu2 + p.mu2 * p.a4 * sup_w + p.alpha / 2.0,
                    g1 * p.mu2,
                ),
                Clause::lt(
                    "(iv) G1*mu2 + G2*mu3*a6*w < mu1*a1*u",
                    g1 * p.mu2 + g2 * p.mu3 * p.a6 * wh,
                    p.mu1 * p.a1 * uh,
                ),
                Clause::lt("(v) alpha + beta < 2*gamma", p.alpha + p.beta, 2.0 * p.gamma),
                Clause::lt(
                    "(vi) a1*a4*a5 < a2*a3*a6",
                    p.a1 * p.a4 * p.a5,
                    p.a2 * p.a3 * p.a6,
                ),
                Clause::lt("(vii) beta < G2*mu3", p.beta, g2 * p.mu3),
            ];
            Ok(ConditionReport::new(
                ConditionTarget::PrimaryVanishingStability,
                p,
                clauses,
            ))
        }
        other => Err(ModelError::UnsupportedTarget(other)),
    }
}
