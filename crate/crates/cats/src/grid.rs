//! Structured node-centered grids and the discrete spatial operators:
//! zero-flux Laplacian, conservative taxis flux divergence, pointwise
//! products, trapezoidal quadrature, and sup-norm helpers.
//!
//! Grids are axis-aligned boxes with the same node count and spacing on
//! every axis, both endpoints included. Values are stored row-major with
//! the last axis fastest. All boundary treatment is zero normal flux: the
//! Laplacian mirrors the first interior node across the boundary, the taxis
//! divergence uses exactly zero boundary-face fluxes over half-width
//! boundary cells. Both forms are the same finite-volume closure, so
//! `integrate` of either operator output telescopes to zero.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("grid extent is empty: hi ({hi}) must exceed lo ({lo})")]
    BadExtent { lo: f64, hi: f64 },
    #[error("a grid axis needs at least 3 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("spatial dimension must be 1, 2 or 3, got {0}")]
    BadDimension(usize),
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("field needs {expected} values for this grid, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// Uniform node-centered box grid in 1, 2 or 3 dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    ndim: usize,
    dims: [usize; 3],
    spacing: f64,
    origin: [f64; 3],
}

/// Node-centered grid over `[lo, hi]` in every axis, endpoints included,
/// with `nodes_per_axis` nodes per axis.
pub fn build_grid(ndim: usize, nodes_per_axis: usize, lo: f64, hi: f64) -> Result<Grid, GridError> {
    if !(1..=3).contains(&ndim) {
        return Err(GridError::BadDimension(ndim));
    }
    if nodes_per_axis < 3 {
        return Err(GridError::TooFewNodes(nodes_per_axis));
    }
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(GridError::BadExtent { lo, hi });
    }
    let mut dims = [1usize; 3];
    let mut origin = [0.0f64; 3];
    for a in 0..ndim {
        dims[a] = nodes_per_axis;
        origin[a] = lo;
    }
    Ok(Grid {
        ndim,
        dims,
        spacing: (hi - lo) / (nodes_per_axis - 1) as f64,
        origin,
    })
}

impl Grid {
    pub fn ndim(&self) -> usize {
        self.ndim
    }

    /// Nodes per axis; axes beyond `ndim` report 1.
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn origin(&self) -> [f64; 3] {
        self.origin
    }

    pub fn node_count(&self) -> usize {
        self.dims[..self.ndim].iter().product()
    }

    /// Physical coordinate of the node at the given per-axis indices.
    pub fn coord(&self, idx: [usize; 3]) -> [f64; 3] {
        let mut x = [0.0; 3];
        for a in 0..self.ndim {
            x[a] = self.origin[a] + idx[a] as f64 * self.spacing;
        }
        x
    }

    /// Box volume (length/area/volume depending on dimension).
    pub fn volume(&self) -> f64 {
        let mut v = 1.0;
        for a in 0..self.ndim {
            v *= (self.dims[a] - 1) as f64 * self.spacing;
        }
        v
    }

    /// For a given axis: (blocks before, axis length, stride after).
    /// A node index decomposes as `(ib * len + ia) * after + ja`.
    pub(crate) fn axis_split(&self, axis: usize) -> (usize, usize, usize) {
        let before: usize = self.dims[..axis].iter().product();
        let len = self.dims[axis];
        let after: usize = self.dims[axis + 1..self.ndim].iter().product();
        (before, len, after)
    }
}

/// One scalar value per grid node, row-major with the last axis fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: Grid,
    values: Vec<f64>,
}

impl Field {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self, GridError> {
        if values.len() != grid.node_count() {
            return Err(GridError::WrongLength {
                expected: grid.node_count(),
                got: values.len(),
            });
        }
        Ok(Field { grid, values })
    }

    pub fn constant(grid: Grid, value: f64) -> Self {
        let n = grid.node_count();
        Field {
            grid,
            values: vec![value; n],
        }
    }

    /// Builds a field by evaluating `f` at every node coordinate.
    pub fn from_fn(grid: Grid, mut f: impl FnMut([f64; 3]) -> f64) -> Self {
        let mut values = Vec::with_capacity(grid.node_count());
        let d = grid.dims;
        for i0 in 0..d[0] {
            for i1 in 0..d[1] {
                for i2 in 0..d[2] {
                    values.push(f(grid.coord([i0, i1, i2])));
                }
            }
        }
        Field { grid, values }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

fn check_same_grid(a: &Field, b: &Field) -> Result<(), GridError> {
    if a.grid != b.grid {
        return Err(GridError::GridMismatch);
    }
    Ok(())
}

/// Second-difference Laplacian with mirror (zero normal flux) closure,
/// written into `out`. `out` must live on the same grid.
pub fn laplacian_into(f: &Field, out: &mut Field) -> Result<(), GridError> {
    check_same_grid(f, out)?;
    let grid = f.grid;
    out.values_mut().fill(0.0);
    let inv_h2 = 1.0 / (grid.spacing * grid.spacing);
    let src = f.values();
    let dst = out.values_mut();
    for axis in 0..grid.ndim {
        let (before, len, after) = grid.axis_split(axis);
        for ib in 0..before {
            for ja in 0..after {
                let base = ib * len * after + ja;
                for ia in 0..len {
                    let idx = base + ia * after;
                    let prev = if ia > 0 { src[idx - after] } else { src[idx + after] };
                    let next = if ia + 1 < len { src[idx + after] } else { src[idx - after] };
                    dst[idx] += (prev - 2.0 * src[idx] + next) * inv_h2;
                }
            }
        }
    }
    Ok(())
}

/// Second-difference Laplacian with zero-flux boundary closure.
pub fn laplacian(f: &Field) -> Field {
    let mut out = Field::constant(f.grid, 0.0);
    laplacian_into(f, &mut out).expect("same grid by construction");
    out
}

/// Orientation of taxis motion relative to the potential gradient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaxisSign {
    /// Motion up the gradient; divergence enters with a minus sign.
    Attract,
    /// Motion down the gradient; divergence enters with a plus sign.
    Repel,
}

impl TaxisSign {
    #[inline]
    pub fn factor(self) -> f64 {
        match self {
            TaxisSign::Attract => -1.0,
            TaxisSign::Repel => 1.0,
        }
    }
}

/// Conservative flux divergence of `coeff * carrier * grad(potential)`,
/// written into `out` with the requested sign.
///
/// Per axis, the face flux between nodes i and i+1 is
/// `coeff * (carrier_i + carrier_{i+1})/2 * (potential_{i+1} - potential_i)/h`;
/// boundary faces carry exactly zero flux, and boundary nodes divide by the
/// half cell `h/2`. The weighted node sum of the output therefore telescopes
/// to zero.
pub fn taxis_divergence_into(
    carrier: &Field,
    potential: &Field,
    sign: TaxisSign,
    coeff: f64,
    out: &mut Field,
) -> Result<(), GridError> {
    check_same_grid(carrier, potential)?;
    check_same_grid(carrier, out)?;
    let grid = carrier.grid;
    out.values_mut().fill(0.0);
    let h = grid.spacing;
    let s = sign.factor();
    let c = carrier.values();
    let p = potential.values();
    let dst = out.values_mut();
    let mut flux: Vec<f64> = Vec::new();
    for axis in 0..grid.ndim {
        let (before, len, after) = grid.axis_split(axis);
        flux.resize(len - 1, 0.0);
        for ib in 0..before {
            for ja in 0..after {
                let base = ib * len * after + ja;
                for ia in 0..len - 1 {
                    let i = base + ia * after;
                    let j = i + after;
                    flux[ia] = coeff * 0.5 * (c[i] + c[j]) * (p[j] - p[i]) / h;
                }
                for ia in 0..len {
                    let f_lo = if ia > 0 { flux[ia - 1] } else { 0.0 };
                    let f_hi = if ia + 1 < len { flux[ia] } else { 0.0 };
                    let cell = if ia == 0 || ia + 1 == len { 0.5 * h } else { h };
                    dst[base + ia * after] += s * (f_hi - f_lo) / cell;
                }
            }
        }
    }
    Ok(())
}

/// Conservative taxis flux divergence; see [`taxis_divergence_into`].
pub fn taxis_divergence(
    carrier: &Field,
    potential: &Field,
    sign: TaxisSign,
    coeff: f64,
) -> Result<Field, GridError> {
    let mut out = Field::constant(carrier.grid, 0.0);
    taxis_divergence_into(carrier, potential, sign, coeff, &mut out)?;
    Ok(out)
}

/// Pointwise product written into `out`; all three fields share a grid.
pub fn product_field_into(a: &Field, b: &Field, out: &mut Field) -> Result<(), GridError> {
    check_same_grid(a, b)?;
    check_same_grid(a, out)?;
    let av = a.values();
    let bv = b.values();
    for (o, (x, y)) in out.values_mut().iter_mut().zip(av.iter().zip(bv)) {
        *o = x * y;
    }
    Ok(())
}

/// Pointwise product of two fields on the same grid.
pub fn product_field(a: &Field, b: &Field) -> Result<Field, GridError> {
    let mut out = Field::constant(a.grid, 0.0);
    product_field_into(a, b, &mut out)?;
    Ok(out)
}

/// Composite trapezoidal quadrature: boundary nodes weigh 1/2 per boundary
/// axis (1/4 at 2D corners and so on), times h^ndim.
pub fn integrate(f: &Field) -> f64 {
    integrate_slice(&f.grid, &f.values)
}

pub(crate) fn integrate_slice(grid: &Grid, values: &[f64]) -> f64 {
    let d = grid.dims;
    let nd = grid.ndim;
    let axis_weight = |i: usize, n: usize| -> f64 {
        if n == 1 {
            1.0
        } else if i == 0 || i + 1 == n {
            0.5
        } else {
            1.0
        }
    };
    let mut sum = 0.0;
    let mut idx = 0;
    for i0 in 0..d[0] {
        let w0 = axis_weight(i0, d[0]);
        for i1 in 0..d[1] {
            let w1 = w0 * axis_weight(i1, d[1]);
            for i2 in 0..d[2] {
                let w = w1 * axis_weight(i2, d[2]);
                sum += w * values[idx];
                idx += 1;
            }
        }
    }
    sum * grid.spacing.powi(nd as i32)
}

/// Maximum absolute node value.
pub fn linf_norm(f: &Field) -> f64 {
    f.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Maximum absolute deviation from a constant level.
pub fn linf_distance(f: &Field, level: f64) -> f64 {
    linf_distance_slice(&f.values, level)
}

pub(crate) fn linf_distance_slice(values: &[f64], level: f64) -> f64 {
    values.iter().fold(0.0f64, |m, v| m.max((v - level).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn grid_1d() -> Grid {
        build_grid(1, 3, 0.0, 1.0).unwrap()
    }

    fn random_field(grid: Grid, rng: &mut impl Rng) -> Field {
        let values = (0..grid.node_count()).map(|_| rng.gen_range(-2.0..2.0)).collect();
        Field::new(grid, values).unwrap()
    }

    #[test]
    fn build_grid_examples() {
        let g = grid_1d();
        assert_eq!(g.spacing(), 0.5);
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.coord([0, 0, 0])[0], 0.0);
        assert_eq!(g.coord([1, 0, 0])[0], 0.5);
        assert_eq!(g.coord([2, 0, 0])[0], 1.0);

        let g2 = build_grid(2, 102, -0.5, 0.5).unwrap();
        assert!((g2.spacing() - 1.0 / 101.0).abs() < 1e-16);
        assert_eq!(g2.node_count(), 102 * 102);

        let g3 = build_grid(3, 51, -0.5, 0.5).unwrap();
        assert!((g3.spacing() - 1.0 / 50.0).abs() < 1e-16);
        assert_eq!(g3.node_count(), 51 * 51 * 51);
    }

    #[test]
    fn build_grid_rejects_bad_input() {
        assert!(matches!(
            build_grid(1, 3, 1.0, 1.0),
            Err(GridError::BadExtent { .. })
        ));
        assert!(matches!(
            build_grid(1, 2, 0.0, 1.0),
            Err(GridError::TooFewNodes(2))
        ));
        assert!(matches!(build_grid(4, 5, 0.0, 1.0), Err(GridError::BadDimension(4))));
    }

    #[test]
    fn laplacian_of_constant_is_zero() {
        for ndim in 1..=3 {
            let g = build_grid(ndim, 4, -0.5, 0.5).unwrap();
            let lap = laplacian(&Field::constant(g, 3.25));
            assert!(lap.values().iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn laplacian_1d_spike() {
        let g = build_grid(1, 3, 0.0, 2.0).unwrap(); // h = 1
        let f = Field::new(g, vec![0.0, 1.0, 0.0]).unwrap();
        assert_eq!(laplacian(&f).values(), &[2.0, -2.0, 2.0]);
    }

    #[test]
    fn taxis_1d_spike() {
        // Interior face fluxes are +1 and -1; boundary faces are zero and
        // boundary cells have width h/2, hence the doubled end values.
        let g = build_grid(1, 3, 0.0, 2.0).unwrap(); // h = 1
        let carrier = Field::constant(g, 1.0);
        let potential = Field::new(g, vec![0.0, 1.0, 0.0]).unwrap();
        let out = taxis_divergence(&carrier, &potential, TaxisSign::Attract, 1.0).unwrap();
        assert_eq!(out.values(), &[-2.0, 2.0, -2.0]);
        let rep = taxis_divergence(&carrier, &potential, TaxisSign::Repel, 1.0).unwrap();
        assert_eq!(rep.values(), &[2.0, -2.0, 2.0]);
    }

    #[test]
    fn taxis_constant_potential_is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = build_grid(2, 6, -1.0, 1.0).unwrap();
        let carrier = random_field(g, &mut rng);
        let potential = Field::constant(g, 0.75);
        let out = taxis_divergence(&carrier, &potential, TaxisSign::Attract, 2.5).unwrap();
        assert!(out.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn operators_conserve_mass() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for ndim in 1..=3usize {
            for _ in 0..30 {
                let nodes = rng.gen_range(3..=if ndim == 3 { 7 } else { 12 });
                let g = build_grid(ndim, nodes, -0.5, 0.5).unwrap();
                let f = random_field(g, &mut rng);
                let p = random_field(g, &mut rng);
                let tol = 1e-12 * linf_norm(&f).max(linf_norm(&p)) * g.node_count() as f64;
                assert!(integrate(&laplacian(&f)).abs() <= tol);
                let taxis = taxis_divergence(&f, &p, TaxisSign::Attract, 1.3).unwrap();
                assert!(integrate(&taxis).abs() <= tol);
            }
        }
    }

    #[test]
    fn laplacian_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = build_grid(2, 7, 0.0, 1.0).unwrap();
        let f = random_field(g, &mut rng);
        let gfield = random_field(g, &mut rng);
        let (a, b) = (1.7, -0.4);
        let combo = Field::new(
            g,
            f.values()
                .iter()
                .zip(gfield.values())
                .map(|(x, y)| a * x + b * y)
                .collect(),
        )
        .unwrap();
        let lhs = laplacian(&combo);
        let lf = laplacian(&f);
        let lg = laplacian(&gfield);
        for ((l, x), y) in lhs.values().iter().zip(lf.values()).zip(lg.values()) {
            assert!((l - (a * x + b * y)).abs() < 1e-11);
        }
    }

    #[test]
    fn laplacian_commutes_with_axis_reflection() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = build_grid(2, 5, 0.0, 1.0).unwrap();
        let f = random_field(g, &mut rng);
        let n = 5usize;
        let reflect = |src: &Field| {
            let mut v = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..n {
                    v[i * n + j] = src.values()[(n - 1 - i) * n + j];
                }
            }
            Field::new(g, v).unwrap()
        };
        let a = laplacian(&reflect(&f));
        let b = reflect(&laplacian(&f));
        for (x, y) in a.values().iter().zip(b.values()) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn taxis_sign_antisymmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let g = build_grid(3, 4, -0.5, 0.5).unwrap();
        let c = random_field(g, &mut rng);
        let p = random_field(g, &mut rng);
        let att = taxis_divergence(&c, &p, TaxisSign::Attract, 0.8).unwrap();
        let rep = taxis_divergence(&c, &p, TaxisSign::Repel, 0.8).unwrap();
        for (x, y) in att.values().iter().zip(rep.values()) {
            assert_eq!(*x, -*y);
        }
    }

    #[test]
    fn product_field_basics() {
        let g = grid_1d();
        let a = Field::new(g, vec![1.0, 2.0, -0.5]).unwrap();
        let one = Field::constant(g, 1.0);
        let zero = Field::constant(g, 0.0);
        assert_eq!(product_field(&a, &one).unwrap().values(), a.values());
        assert_eq!(product_field(&a, &zero).unwrap().values(), &[0.0, 0.0, 0.0]);
        let b = Field::new(g, vec![3.0, 4.0, 2.0]).unwrap();
        assert_eq!(product_field(&a, &b).unwrap().values(), &[3.0, 8.0, -1.0]);
    }

    #[test]
    fn mismatched_grids_are_rejected() {
        let a = Field::constant(build_grid(1, 3, 0.0, 1.0).unwrap(), 1.0);
        let b = Field::constant(build_grid(1, 4, 0.0, 1.0).unwrap(), 1.0);
        assert!(matches!(product_field(&a, &b), Err(GridError::GridMismatch)));
        assert!(matches!(
            taxis_divergence(&a, &b, TaxisSign::Attract, 1.0),
            Err(GridError::GridMismatch)
        ));
    }

    #[test]
    fn integrate_constants_and_affine() {
        let g2 = build_grid(2, 21, -0.5, 0.5).unwrap();
        assert!((integrate(&Field::constant(g2, 1.0)) - 1.0).abs() < 1e-12);
        assert!((integrate(&Field::constant(g2, -2.5)) + 2.5).abs() < 1e-12);

        let g1 = build_grid(1, 11, 0.0, 1.0).unwrap();
        let f = Field::from_fn(g1, |x| x[0]);
        assert!((integrate(&f) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn sup_norms() {
        let g = grid_1d();
        let f = Field::new(g, vec![-3.0, 2.0, 0.0]).unwrap();
        assert_eq!(linf_norm(&f), 3.0);
        assert_eq!(linf_distance(&Field::constant(g, 4.0), 4.0), 0.0);
        let near = Field::new(g, vec![0.9, 1.1, 1.0]).unwrap();
        assert!((linf_distance(&near, 1.0) - 0.1).abs() < 1e-15);
    }
}
