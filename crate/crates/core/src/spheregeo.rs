//! The round unit sphere `S^{2n}` in a stereographic chart.
//!
//! Coordinates `y ∈ R^{2n}` carry the metric `|dy|^2 / (1 + |y|^2/4)^2`. The
//! orthonormal frame is `e_i = (1 + |y|^2/4) ∂/∂y^i`, and all vector fields are
//! given by their components in this frame. Indices in the public API are
//! 1-based.
//!
//! The ambient picture lives in `R^{2n+2}` with the fixed vector
//! `e_{-1} = (1, 0, …, 0)` and the sphere `{e_0 : |e_0| = 1, e_0 ⊥ e_{-1}}`.
//! The chart map is `σ(y) = (4y, 4 - |y|^2) / (4 + |y|^2)`, whose pullback
//! metric is exactly the one above.
//!
//! Curvature convention: `R(X,Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_{[X,Y]} Z`, so on the
//! unit sphere `R(e_1,e_2)e_2 = +e_1`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Largest admissible `|y|` unless overridden.
pub const DEFAULT_CHART_RADIUS_MAX: f64 = 1e3;
/// Central-difference step for fields without analytic derivatives.
pub const DEFAULT_FD_STEP: f64 = 1e-5;
/// Central-difference step used when differentiating connection coefficients.
pub const CURVATURE_FD_STEP: f64 = 1e-4;

/// Stereographic coordinates of a point of `S^{2n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    y: DVector<f64>,
}

impl ChartPoint {
    pub fn new(y: DVector<f64>) -> Result<Self> {
        Self::with_radius(y, DEFAULT_CHART_RADIUS_MAX)
    }

    pub fn with_radius(y: DVector<f64>, radius_max: f64) -> Result<Self> {
        if y.is_empty() || !y.len().is_multiple_of(2) {
            return Err(Error::OddOrder(y.len()));
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite chart coordinate".into()));
        }
        let r = y.norm();
        if !(r < radius_max) {
            return Err(Error::OutOfRange {
                name: "|y|",
                value: r,
                range: "[0, chart_radius_max)",
            });
        }
        Ok(Self { y })
    }

    pub fn from_slice(y: &[f64]) -> Result<Self> {
        Self::new(DVector::from_column_slice(y))
    }

    /// The origin of the chart (the north pole).
    pub fn origin(n: usize) -> Self {
        Self {
            y: DVector::zeros(2 * n),
        }
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.y
    }

    /// Real dimension `2n` of the sphere.
    pub fn dim(&self) -> usize {
        self.y.len()
    }

    pub fn n(&self) -> usize {
        self.y.len() / 2
    }

    /// `1 + |y|^2/4`; the frame is this factor times the coordinate basis.
    pub fn conformal_factor(&self) -> f64 {
        conformal_factor(&self.y)
    }
}

pub(crate) fn conformal_factor(y: &DVector<f64>) -> f64 {
    1.0 + 0.25 * y.norm_squared()
}

/// Ambient image of a chart point with its orthonormal frame.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameData {
    pub point: ChartPoint,
    /// The fixed vector `(1, 0, …, 0)`.
    pub e_minus1: DVector<f64>,
    /// The point itself, `(0, σ(y))`.
    pub e0: DVector<f64>,
    /// `ê_l = (0, (1 + |y|^2/4) ∂σ/∂y^l)`.
    pub frame: Vec<DVector<f64>>,
}

impl FrameData {
    /// The `(2n+2) x 2n` matrix whose columns are the frame vectors.
    pub fn frame_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_columns(&self.frame)
    }

    /// Ambient vector `Σ X^l ê_l` of frame components `x`.
    pub fn ambient(&self, x: &DVector<f64>) -> DVector<f64> {
        self.frame_matrix() * x
    }

    /// Largest deviation from orthonormality of `(e_{-1}, e_0, ê_1, …)`.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut cols = vec![self.e_minus1.clone(), self.e0.clone()];
        cols.extend(self.frame.iter().cloned());
        let g = DMatrix::from_columns(&cols);
        let k = g.ncols();
        (g.transpose() * g - DMatrix::identity(k, k)).abs().max()
    }
}

/// `(0, σ(y))` and the frame `ê_l`.
pub fn embed(point: &ChartPoint) -> FrameData {
    let y = point.coords();
    let d = point.dim();
    let r2 = y.norm_squared();
    let den = 4.0 + r2;
    let mut e0 = DVector::zeros(d + 2);
    for k in 0..d {
        e0[k + 1] = 4.0 * y[k] / den;
    }
    e0[d + 1] = (4.0 - r2) / den;
    let frame = (0..d)
        .map(|l| {
            let mut v = DVector::zeros(d + 2);
            for k in 0..d {
                let delta = if k == l { 1.0 } else { 0.0 };
                v[k + 1] = delta - 2.0 * y[k] * y[l] / den;
            }
            v[d + 1] = -4.0 * y[l] / den;
            v
        })
        .collect();
    let mut e_minus1 = DVector::zeros(d + 2);
    e_minus1[0] = 1.0;
    FrameData {
        point: point.clone(),
        e_minus1,
        e0,
        frame,
    }
}

/// `∂(0,σ)/∂y^l = (4 / (4 + |y|^2)) ê_l`.
pub fn e0_coordinate_derivative(point: &ChartPoint, l: usize) -> DVector<f64> {
    let fd = embed(point);
    let den = 4.0 + point.coords().norm_squared();
    &fd.frame[l] * (4.0 / den)
}

/// `∂E/∂y^l` for the frame matrix `E`, 0-based `l`.
pub fn frame_coordinate_derivative(point: &ChartPoint, l: usize) -> DMatrix<f64> {
    let y = point.coords();
    let d = point.dim();
    let den = 4.0 + y.norm_squared();
    DMatrix::from_fn(d + 2, d, |row, m| {
        if row == 0 {
            0.0
        } else if row == d + 1 {
            let delta = if l == m { 1.0 } else { 0.0 };
            -4.0 * delta / den + 8.0 * y[m] * y[l] / (den * den)
        } else {
            let k = row - 1;
            let dkl = if k == l { 1.0 } else { 0.0 };
            let dml = if m == l { 1.0 } else { 0.0 };
            -2.0 * (dkl * y[m] + y[k] * dml) / den + 4.0 * y[k] * y[m] * y[l] / (den * den)
        }
    })
}

fn check_index(i: usize, d: usize) -> Result<usize> {
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange { index: i, max: d });
    }
    Ok(i - 1)
}

/// Frame components of `∇_{e_i} e_j = -½ y^j e_i + ½ δ_ij Σ y^k e_k` (1-based).
pub fn connection_coefficients(point: &ChartPoint, i: usize, j: usize) -> Result<DVector<f64>> {
    let d = point.dim();
    let (i, j) = (check_index(i, d)?, check_index(j, d)?);
    Ok(gamma(point.coords(), i, j))
}

fn gamma(y: &DVector<f64>, i: usize, j: usize) -> DVector<f64> {
    let mut v = if i == j { y * 0.5 } else { DVector::zeros(y.len()) };
    v[i] -= 0.5 * y[j];
    v
}

/// Connection matrix `ω(X)` with `ω(X)[k][j]` the `e_k`-component of `∇_X e_j`.
pub fn connection_matrix(point: &ChartPoint, x: &DVector<f64>) -> DMatrix<f64> {
    let y = point.coords();
    let d = point.dim();
    DMatrix::from_fn(d, d, |k, j| -0.5 * y[j] * x[k] + 0.5 * x[j] * y[k])
}

/// Frame components of `[e_i, e_j] = ½ y^i e_j - ½ y^j e_i` (1-based).
pub fn frame_bracket(point: &ChartPoint, i: usize, j: usize) -> Result<DVector<f64>> {
    let d = point.dim();
    let (i, j) = (check_index(i, d)?, check_index(j, d)?);
    let y = point.coords();
    let mut v = DVector::zeros(d);
    v[j] += 0.5 * y[i];
    v[i] -= 0.5 * y[j];
    Ok(v)
}

/// A vector field on the chart, given by its frame components.
pub trait VectorField {
    /// Real dimension `2n`.
    fn dim(&self) -> usize;

    fn components(&self, y: &DVector<f64>) -> DVector<f64>;

    /// `∂X/∂y^l` of the components, 0-based `l`. Defaults to a central difference.
    fn coordinate_derivative(&self, y: &DVector<f64>, l: usize) -> DVector<f64> {
        let h = self.fd_step();
        let mut yp = y.clone();
        let mut ym = y.clone();
        yp[l] += h;
        ym[l] -= h;
        (self.components(&yp) - self.components(&ym)) / (2.0 * h)
    }

    fn fd_step(&self) -> f64 {
        DEFAULT_FD_STEP
    }

    /// `e_l X` of the components, 0-based `l`.
    fn frame_derivative(&self, y: &DVector<f64>, l: usize) -> DVector<f64> {
        self.coordinate_derivative(y, l) * conformal_factor(y)
    }
}

/// Field with constant frame components.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantField(pub DVector<f64>);

impl VectorField for ConstantField {
    fn dim(&self) -> usize {
        self.0.len()
    }
    fn components(&self, _y: &DVector<f64>) -> DVector<f64> {
        self.0.clone()
    }
    fn coordinate_derivative(&self, _y: &DVector<f64>, _l: usize) -> DVector<f64> {
        DVector::zeros(self.0.len())
    }
}

/// The frame field `e_i` (0-based internally).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameField {
    pub dim: usize,
    pub index: usize,
}

impl FrameField {
    /// 1-based constructor.
    pub fn new(dim: usize, i: usize) -> Result<Self> {
        Ok(Self {
            dim,
            index: check_index(i, dim)?,
        })
    }
}

impl VectorField for FrameField {
    fn dim(&self) -> usize {
        self.dim
    }
    fn components(&self, _y: &DVector<f64>) -> DVector<f64> {
        let mut v = DVector::zeros(self.dim);
        v[self.index] = 1.0;
        v
    }
    fn coordinate_derivative(&self, _y: &DVector<f64>, _l: usize) -> DVector<f64> {
        DVector::zeros(self.dim)
    }
}

/// Field given by a closure; derivatives by central differences.
pub struct FnField<F> {
    pub dim: usize,
    pub f: F,
    pub h: f64,
}

impl<F: Fn(&DVector<f64>) -> DVector<f64>> FnField<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self {
            dim,
            f,
            h: DEFAULT_FD_STEP,
        }
    }
}

impl<F: Fn(&DVector<f64>) -> DVector<f64>> VectorField for FnField<F> {
    fn dim(&self) -> usize {
        self.dim
    }
    fn components(&self, y: &DVector<f64>) -> DVector<f64> {
        (self.f)(y)
    }
    fn fd_step(&self) -> f64 {
        self.h
    }
}

fn check_field(x: &dyn VectorField, point: &ChartPoint) -> Result<()> {
    if x.dim() != point.dim() {
        return Err(Error::DimensionMismatch {
            expected: point.dim(),
            actual: x.dim(),
        });
    }
    Ok(())
}

fn finite(v: DVector<f64>) -> Result<DVector<f64>> {
    if v.iter().all(|c| c.is_finite()) {
        Ok(v)
    } else {
        Err(Error::InvalidArgument("derivative evaluation produced a non-finite value".into()))
    }
}

/// `∇_X Y = Σ_l X^l [ Σ_j (e_l Y^j) e_j + Σ_j Y^j ∇_{e_l} e_j ]`.
pub fn covariant_derivative(x: &dyn VectorField, yf: &dyn VectorField, point: &ChartPoint) -> Result<DVector<f64>> {
    check_field(x, point)?;
    check_field(yf, point)?;
    let p = point.coords();
    let xv = x.components(p);
    let yv = yf.components(p);
    let mut out = DVector::zeros(point.dim());
    for l in 0..point.dim() {
        if xv[l] == 0.0 {
            continue;
        }
        let mut term = yf.frame_derivative(p, l);
        for j in 0..point.dim() {
            if yv[j] != 0.0 {
                term += gamma(p, l, j) * yv[j];
            }
        }
        out += term * xv[l];
    }
    finite(out)
}

/// Bracket `[X, Y]` in frame components, from the frame brackets `[e_a, e_b]`.
pub fn bracket(x: &dyn VectorField, yf: &dyn VectorField, point: &ChartPoint) -> Result<DVector<f64>> {
    check_field(x, point)?;
    check_field(yf, point)?;
    let p = point.coords();
    let xv = x.components(p);
    let yv = yf.components(p);
    let dx: Vec<DVector<f64>> = (0..point.dim()).map(|l| x.frame_derivative(p, l)).collect();
    let dy: Vec<DVector<f64>> = (0..point.dim()).map(|l| yf.frame_derivative(p, l)).collect();
    finite(bracket_parts(p, &xv, &dx, &yv, &dy))
}

/// `[X,Y]` from values and frame derivatives `dx[l] = e_l X`.
pub(crate) fn bracket_parts(
    p: &DVector<f64>,
    xv: &DVector<f64>,
    dx: &[DVector<f64>],
    yv: &DVector<f64>,
    dy: &[DVector<f64>],
) -> DVector<f64> {
    let mut out = DVector::zeros(xv.len());
    for l in 0..xv.len() {
        out += &dy[l] * xv[l] - &dx[l] * yv[l];
    }
    // Σ_ab X^a Y^b [e_a, e_b] = ½ (y·X) Y - ½ (y·Y) X
    out += yv * (0.5 * p.dot(xv)) - xv * (0.5 * p.dot(yv));
    out
}

/// `R(e_i, e_j) e_k` (1-based), differentiating the connection coefficients
/// by central differences of step [`CURVATURE_FD_STEP`].
pub fn curvature(point: &ChartPoint, i: usize, j: usize, k: usize) -> Result<DVector<f64>> {
    curvature_with_step(point, i, j, k, CURVATURE_FD_STEP)
}

pub fn curvature_with_step(point: &ChartPoint, i: usize, j: usize, k: usize, h: f64) -> Result<DVector<f64>> {
    let d = point.dim();
    let (i, j, k) = (check_index(i, d)?, check_index(j, d)?, check_index(k, d)?);
    let p = point.coords();
    let c = point.conformal_factor();
    // e_a Γ_{bk}
    let d_gamma = |a: usize, b: usize| {
        let mut yp = p.clone();
        let mut ym = p.clone();
        yp[a] += h;
        ym[a] -= h;
        (gamma(&yp, b, k) - gamma(&ym, b, k)) * (c / (2.0 * h))
    };
    // ∇_{e_a} of a field with frame components v (frozen coefficients)
    let nabla_frozen = |a: usize, v: &DVector<f64>| {
        let mut acc = DVector::zeros(d);
        for m in 0..d {
            if v[m] != 0.0 {
                acc += gamma(p, a, m) * v[m];
            }
        }
        acc
    };
    let g_jk = gamma(p, j, k);
    let g_ik = gamma(p, i, k);
    let first = d_gamma(i, j) + nabla_frozen(i, &g_jk);
    let second = d_gamma(j, i) + nabla_frozen(j, &g_ik);
    let mut br = DVector::<f64>::zeros(d);
    br[j] += 0.5 * p[i];
    br[i] -= 0.5 * p[j];
    let mut third = DVector::zeros(d);
    for a in 0..d {
        if br[a] != 0.0 {
            third += gamma(p, a, k) * br[a];
        }
    }
    Ok(first - second - third)
}

/// `R(u, v) w` for frame-component vectors, by multilinearity.
pub fn curvature_operator(point: &ChartPoint, u: &DVector<f64>, v: &DVector<f64>, w: &DVector<f64>) -> Result<DVector<f64>> {
    curvature_operator_with_step(point, u, v, w, CURVATURE_FD_STEP)
}

pub fn curvature_operator_with_step(
    point: &ChartPoint,
    u: &DVector<f64>,
    v: &DVector<f64>,
    w: &DVector<f64>,
    h: f64,
) -> Result<DVector<f64>> {
    let d = point.dim();
    let mut out = DVector::zeros(d);
    for i in 0..d {
        for j in 0..d {
            if i == j || u[i] * v[j] == 0.0 {
                continue;
            }
            for k in 0..d {
                if w[k] == 0.0 {
                    continue;
                }
                out += curvature_with_step(point, i + 1, j + 1, k + 1, h)? * (u[i] * v[j] * w[k]);
            }
        }
    }
    Ok(out)
}

/// Sectional curvature `<R(u,v)v, u> / (|u|^2|v|^2 - <u,v>^2)`.
pub fn sectional_curvature(point: &ChartPoint, u: &DVector<f64>, v: &DVector<f64>) -> Result<f64> {
    sectional_curvature_with_step(point, u, v, CURVATURE_FD_STEP)
}

pub fn sectional_curvature_with_step(point: &ChartPoint, u: &DVector<f64>, v: &DVector<f64>, h: f64) -> Result<f64> {
    let r = curvature_operator_with_step(point, u, v, v, h)?;
    let area = u.norm_squared() * v.norm_squared() - u.dot(v).powi(2);
    if area <= 0.0 {
        return Err(Error::InvalidArgument("degenerate plane".into()));
    }
    Ok(r.dot(u) / area)
}
