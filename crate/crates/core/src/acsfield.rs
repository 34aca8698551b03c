//! Almost complex structures on the sphere chart as matrix fields `B(y)`.
//!
//! `J e_i = Σ_j e_j B_ji`, so column `i` of `B` holds the frame components of
//! `J e_i`. Because the frame is conformal to the coordinate basis, `B` is also
//! the coordinate matrix of `J`; a constant `B` is therefore integrable.
//!
//! Complex vectors are pairs of real vectors. `X_i = e_i - √-1 J e_i` are the
//! `(1,0)` frame fields.

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{exp_directional, frobenius, square_plus_identity};
use crate::matcore::{matrix_to_rows, rows_to_matrix, DEFAULT_TOL};
use crate::spheregeo::{
    bracket_parts, conformal_factor, covariant_derivative, ChartPoint, FrameField, VectorField,
    DEFAULT_FD_STEP,
};

type MatrixFn = dyn Fn(&DVector<f64>) -> DMatrix<f64> + Send + Sync;

/// `(G(y), B0, generators, scale)` for a conjugated field.
type Rotation<'a> = (DMatrix<f64>, &'a DMatrix<f64>, &'a [DMatrix<f64>], f64);

#[derive(Clone)]
enum Kind {
    Constant(DMatrix<f64>),
    /// `R B0 R^{-1}` with `R = exp(scale Σ y^k S_k)`; `R^{-1} = R^t` when the
    /// generators are skew.
    Conjugated {
        b0: DMatrix<f64>,
        generators: Vec<DMatrix<f64>>,
        scale: f64,
    },
    Custom {
        f: Arc<MatrixFn>,
        h: f64,
    },
}

/// A differentiable field `y -> B(y)` with `B(y)^2 = -I`.
#[derive(Clone)]
pub struct AcsField {
    n: usize,
    kind: Kind,
    orthogonal: bool,
    tol: f64,
}

impl fmt::Debug for AcsField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.kind {
            Kind::Constant(_) => "constant",
            Kind::Conjugated { .. } => "conjugated",
            Kind::Custom { .. } => "custom",
        };
        f.debug_struct("AcsField")
            .field("n", &self.n)
            .field("kind", &kind)
            .field("orthogonal", &self.orthogonal)
            .finish()
    }
}

fn is_skew_orthogonal(b: &DMatrix<f64>, tol: f64) -> bool {
    let k = b.nrows();
    frobenius(&(b + b.transpose())) <= tol
        && frobenius(&(b * b.transpose() - DMatrix::identity(k, k))) <= tol
}

fn validate_structure(b: &DMatrix<f64>, tol: f64) -> Result<usize> {
    let k = crate::matcore::check_square_even(b)?;
    let residual = square_plus_identity(b);
    if !(residual <= tol) {
        return Err(Error::NotComplexStructure { residual });
    }
    Ok(k / 2)
}

/// `B ≡ B0`.
pub fn make_constant_field(b0: DMatrix<f64>) -> Result<AcsField> {
    let n = validate_structure(&b0, DEFAULT_TOL)?;
    let orthogonal = is_skew_orthogonal(&b0, DEFAULT_TOL);
    Ok(AcsField {
        n,
        kind: Kind::Constant(b0),
        orthogonal,
        tol: DEFAULT_TOL,
    })
}

/// `B(y) = R(y) B0 R(y)^t` with `R(y) = exp(scale · Σ_k y^k S_k)`; needs one
/// skew generator per chart coordinate and a skew-orthogonal `B0`.
pub fn make_rotated_field(b0: DMatrix<f64>, generators: Vec<DMatrix<f64>>, scale: f64) -> Result<AcsField> {
    validate_structure(&b0, DEFAULT_TOL)?;
    if !is_skew_orthogonal(&b0, DEFAULT_TOL) {
        return Err(Error::NotOrthogonal {
            residual: frobenius(&(&b0 + b0.transpose())),
        });
    }
    for s in &generators {
        let residual = frobenius(&(s + s.transpose()));
        if residual > DEFAULT_TOL {
            return Err(Error::NotSkew { residual });
        }
    }
    make_conjugated_field(b0, generators, scale)
}

/// `B(y) = R(y) B0 R(y)^{-1}` with `R(y) = exp(scale · Σ_k y^k S_k)` for
/// arbitrary real generators. Orthogonal exactly when `B0` is and every
/// generator is skew.
pub fn make_conjugated_field(b0: DMatrix<f64>, generators: Vec<DMatrix<f64>>, scale: f64) -> Result<AcsField> {
    let n = validate_structure(&b0, DEFAULT_TOL)?;
    if generators.len() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            actual: generators.len(),
        });
    }
    for s in &generators {
        if s.nrows() != 2 * n || s.ncols() != 2 * n {
            return Err(Error::DimensionMismatch {
                expected: 2 * n,
                actual: s.nrows(),
            });
        }
        if s.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("generator entries must be finite".into()));
        }
    }
    if !scale.is_finite() {
        return Err(Error::InvalidArgument("scale must be finite".into()));
    }
    let orthogonal = is_skew_orthogonal(&b0, DEFAULT_TOL)
        && generators.iter().all(|s| frobenius(&(s + s.transpose())) <= DEFAULT_TOL);
    Ok(AcsField {
        n,
        kind: Kind::Conjugated {
            b0,
            generators,
            scale,
        },
        orthogonal,
        tol: DEFAULT_TOL,
    })
}

impl AcsField {
    /// Field from an arbitrary closure; derivatives by central differences with
    /// step [`DEFAULT_FD_STEP`]. Membership is checked at the chart origin.
    pub fn custom<F>(n: usize, orthogonal: bool, f: F) -> Result<Self>
    where
        F: Fn(&DVector<f64>) -> DMatrix<f64> + Send + Sync + 'static,
    {
        let field = Self {
            n,
            kind: Kind::Custom {
                f: Arc::new(f),
                h: DEFAULT_FD_STEP,
            },
            orthogonal,
            tol: DEFAULT_TOL,
        };
        field.check_at(&ChartPoint::origin(n))?;
        Ok(field)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal
    }

    pub fn has_analytic_derivative(&self) -> bool {
        !matches!(self.kind, Kind::Custom { .. })
    }

    fn rotation_generator(&self, y: &DVector<f64>) -> Option<Rotation<'_>> {
        match &self.kind {
            Kind::Conjugated {
                b0,
                generators,
                scale,
            } => {
                let k = 2 * self.n;
                let mut g = DMatrix::zeros(k, k);
                for (yk, s) in y.iter().zip(generators) {
                    g += s * (*scale * yk);
                }
                Some((g, b0, generators.as_slice(), *scale))
            }
            _ => None,
        }
    }

    /// `B(y)`.
    pub fn value(&self, y: &DVector<f64>) -> DMatrix<f64> {
        match &self.kind {
            Kind::Constant(b) => b.clone(),
            Kind::Custom { f, .. } => f(y),
            Kind::Conjugated { .. } => {
                let (g, b0, _, _) = self.rotation_generator(y).expect("conjugated");
                g.exp() * b0 * (-g).exp()
            }
        }
    }

    /// `∂B/∂y^l`, 0-based `l`.
    pub fn coordinate_derivative(&self, y: &DVector<f64>, l: usize) -> DMatrix<f64> {
        match &self.kind {
            Kind::Constant(b) => DMatrix::zeros(b.nrows(), b.ncols()),
            Kind::Custom { f, h } => {
                let mut yp = y.clone();
                let mut ym = y.clone();
                yp[l] += h;
                ym[l] -= h;
                (f(&yp) - f(&ym)) / (2.0 * h)
            }
            Kind::Conjugated { .. } => {
                let (g, b0, gens, scale) = self.rotation_generator(y).expect("conjugated");
                let e = &gens[l] * scale;
                let (r, dr) = exp_directional(&g, &e);
                let (r_inv, dr_inv) = exp_directional(&(-&g), &(-e));
                dr * b0 * r_inv + r * b0 * dr_inv
            }
        }
    }

    /// `B` and its frame derivatives `e_l B` at a point.
    pub fn jet(&self, point: &ChartPoint) -> Result<FieldJet> {
        self.check_dim(point)?;
        let y = point.coords();
        let c = conformal_factor(y);
        let b = self.value(y);
        let db: Vec<DMatrix<f64>> = (0..self.dim())
            .map(|l| self.coordinate_derivative(y, l) * c)
            .collect();
        if b.iter().chain(db.iter().flat_map(|m| m.iter())).any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("field derivative is not finite".into()));
        }
        Ok(FieldJet { b, db })
    }

    fn check_dim(&self, point: &ChartPoint) -> Result<()> {
        if point.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: point.dim(),
            });
        }
        Ok(())
    }

    /// Pointwise membership (and orthogonality, when flagged) at `point`.
    pub fn check_at(&self, point: &ChartPoint) -> Result<()> {
        self.check_dim(point)?;
        let b = self.value(point.coords());
        let residual = square_plus_identity(&b);
        if !(residual <= self.tol) {
            return Err(Error::NotComplexStructure { residual });
        }
        if self.orthogonal && !is_skew_orthogonal(&b, self.tol) {
            return Err(Error::NotOrthogonal {
                residual: frobenius(&(&b + b.transpose())),
            });
        }
        Ok(())
    }

    /// Serializable description, unavailable for closure-backed fields.
    pub fn spec(&self) -> Option<FieldSpec> {
        match &self.kind {
            Kind::Constant(b) => Some(FieldSpec {
                b0: matrix_to_rows(b),
                generators: vec![],
                scale: 0.0,
                seed: None,
            }),
            Kind::Conjugated {
                b0,
                generators,
                scale,
            } => Some(FieldSpec {
                b0: matrix_to_rows(b0),
                generators: generators.iter().map(matrix_to_rows).collect(),
                scale: *scale,
                seed: None,
            }),
            Kind::Custom { .. } => None,
        }
    }
}

/// JSON form of a constant (no generators) or conjugated field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub b0: Vec<Vec<f64>>,
    #[serde(default)]
    pub generators: Vec<Vec<Vec<f64>>>,
    #[serde(default)]
    pub scale: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<AcsField> {
        let b0 = rows_to_matrix(&self.b0)?;
        if self.generators.is_empty() {
            return make_constant_field(b0);
        }
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let k = g.len();
                if g.iter().any(|r| r.len() != k) {
                    return Err(Error::NotSquare { rows: k, cols: g.first().map_or(0, |r| r.len()) });
                }
                Ok(DMatrix::from_fn(k, k, |i, j| g[i][j]))
            })
            .collect::<Result<Vec<_>>>()?;
        make_conjugated_field(b0, gens, self.scale)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// `B` with frame derivatives `db[l] = e_l B` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldJet {
    pub b: DMatrix<f64>,
    pub db: Vec<DMatrix<f64>>,
}

impl FieldJet {
    /// Frame derivative of `B` along a frame-component vector `x`.
    pub fn along(&self, x: &DVector<f64>) -> DMatrix<f64> {
        let k = self.b.nrows();
        let mut out = DMatrix::zeros(k, k);
        for (l, d) in self.db.iter().enumerate() {
            if x[l] != 0.0 {
                out += d * x[l];
            }
        }
        out
    }
}

/// Value and frame derivatives of a vector field at a point.
#[derive(Debug, Clone)]
struct VJet {
    v: DVector<f64>,
    d: Vec<DVector<f64>>,
}

impl VJet {
    fn of(x: &dyn VectorField, y: &DVector<f64>) -> Self {
        Self {
            v: x.components(y),
            d: (0..y.len()).map(|l| x.frame_derivative(y, l)).collect(),
        }
    }

    fn apply_j(&self, jet: &FieldJet) -> Self {
        Self {
            v: &jet.b * &self.v,
            d: self
                .d
                .iter()
                .zip(&jet.db)
                .map(|(dx, db)| db * &self.v + &jet.b * dx)
                .collect(),
        }
    }
}

fn bracket_jets(p: &DVector<f64>, a: &VJet, b: &VJet) -> DVector<f64> {
    bracket_parts(p, &a.v, &a.d, &b.v, &b.d)
}

fn idx(i: usize, d: usize) -> Result<usize> {
    if i == 0 || i > d {
        return Err(Error::IndexOutOfRange { index: i, max: d });
    }
    Ok(i - 1)
}

/// `N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]` for arbitrary fields,
/// built from the chart brackets.
pub fn nijenhuis_fields(
    field: &AcsField,
    x: &dyn VectorField,
    y: &dyn VectorField,
    point: &ChartPoint,
) -> Result<DVector<f64>> {
    let jet = field.jet(point)?;
    let p = point.coords();
    let xj = VJet::of(x, p);
    let yj = VJet::of(y, p);
    let jx = xj.apply_j(&jet);
    let jy = yj.apply_j(&jet);
    let out = bracket_jets(p, &jx, &jy)
        - &jet.b * bracket_jets(p, &jx, &yj)
        - &jet.b * bracket_jets(p, &xj, &jy)
        - bracket_jets(p, &xj, &yj);
    Ok(out)
}

/// `N(e_i, e_j)` from the bracket definition (1-based indices).
pub fn nijenhuis_direct(field: &AcsField, point: &ChartPoint, i: usize, j: usize) -> Result<DVector<f64>> {
    let d = field.dim();
    let ei = FrameField::new(d, i)?;
    let ej = FrameField::new(d, j)?;
    nijenhuis_fields(field, &ei, &ej, point)
}

/// `(J e_i) B_kj` over `k`: derivative of column `j` of `B` along `J e_i`.
fn d_along_j(jet: &FieldJet, i: usize, j: usize) -> DVector<f64> {
    jet.along(&jet.b.column(i).into_owned()).column(j).into_owned()
}

fn d_along_e(jet: &FieldJet, i: usize, j: usize) -> DVector<f64> {
    jet.db[i].column(j).into_owned()
}

/// `N(e_i,e_j) = Σ e_k[(Je_i)B_kj - (Je_j)B_ki] - Σ Je_k[e_iB_kj - e_jB_ki]`.
pub fn nijenhuis_formula(field: &AcsField, point: &ChartPoint, i: usize, j: usize) -> Result<DVector<f64>> {
    let d = field.dim();
    let (i, j) = (idx(i, d)?, idx(j, d)?);
    let jet = field.jet(point)?;
    let u = d_along_j(&jet, i, j) - d_along_j(&jet, j, i);
    let v = d_along_e(&jet, i, j) - d_along_e(&jet, j, i);
    Ok(u - &jet.b * v)
}

/// Which integrability criterion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualForm {
    /// `Σ e_k[e_iB_kj - e_jB_ki] + Σ Je_k[(Je_i)B_kj - (Je_j)B_ki]`, equal to `J N(e_i,e_j)`.
    General,
    /// `Σ e_k(e_iB_kj) + Σ Je_k(Je_i)B_kj`; valid for orthogonal fields only.
    Orthogonal,
}

pub fn integrability_residual(
    field: &AcsField,
    point: &ChartPoint,
    i: usize,
    j: usize,
    form: ResidualForm,
) -> Result<DVector<f64>> {
    let d = field.dim();
    let (i, j) = (idx(i, d)?, idx(j, d)?);
    if form == ResidualForm::Orthogonal && !field.is_orthogonal() {
        return Err(Error::InvalidArgument(
            "the orthogonal residual form needs an orthogonal field".into(),
        ));
    }
    let jet = field.jet(point)?;
    Ok(match form {
        ResidualForm::General => {
            let v = d_along_e(&jet, i, j) - d_along_e(&jet, j, i);
            let u = d_along_j(&jet, i, j) - d_along_j(&jet, j, i);
            v + &jet.b * u
        }
        ResidualForm::Orthogonal => d_along_e(&jet, i, j) + &jet.b * d_along_j(&jet, i, j),
    })
}

/// A complex frame-component vector stored as real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    pub re: DVector<f64>,
    pub im: DVector<f64>,
}

impl ComplexVector {
    pub fn zeros(d: usize) -> Self {
        Self {
            re: DVector::zeros(d),
            im: DVector::zeros(d),
        }
    }

    pub fn new(re: DVector<f64>, im: DVector<f64>) -> Self {
        Self { re, im }
    }

    /// Hermitian norm `sqrt(|re|^2 + |im|^2)`.
    pub fn norm(&self) -> f64 {
        (self.re.norm_squared() + self.im.norm_squared()).sqrt()
    }

    /// `(a + √-1 b) · self`.
    pub fn scale(&self, a: f64, b: f64) -> Self {
        Self {
            re: &self.re * a - &self.im * b,
            im: &self.im * a + &self.re * b,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Distance to the `(1,0)` subspace of `J`: zero iff `J w = √-1 w`.
    pub fn type_10_defect(&self, b: &DMatrix<f64>) -> f64 {
        // J(re + i im) = i(re + i im)  <=>  J re = -im and J im = re
        ((b * &self.re + &self.im).norm_squared() + (b * &self.im - &self.re).norm_squared()).sqrt()
    }
}

/// `X_i = e_i - √-1 J e_i` at a point with structure matrix `b` (0-based `i`).
fn x10(b: &DMatrix<f64>, i: usize) -> ComplexVector {
    let d = b.nrows();
    let mut re = DVector::zeros(d);
    re[i] = 1.0;
    ComplexVector::new(re, -b.column(i).into_owned())
}

/// `Σ_k [X_i B_kj] e_k` as a complex vector.
fn x10_derivative(jet: &FieldJet, i: usize, j: usize) -> ComplexVector {
    ComplexVector::new(d_along_e(jet, i, j), -d_along_j(jet, i, j))
}

/// `-½ (y^j - √-1 y^k B_kj) X_i`.
fn y_term(jet: &FieldJet, p: &DVector<f64>, i: usize, j: usize) -> ComplexVector {
    let pb = jet.b.column(j).dot(p);
    x10(&jet.b, i).scale(-0.5 * p[j], 0.5 * pb)
}

/// How [`bracket10`] evaluates the bracket of `(1,0)` frame fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMode {
    Direct,
    Formula,
}

/// `[X_i, X_j]` for `X_k = e_k - √-1 J e_k` (1-based).
pub fn bracket10(field: &AcsField, point: &ChartPoint, i: usize, j: usize, mode: EvalMode) -> Result<ComplexVector> {
    let d = field.dim();
    let (i, j) = (idx(i, d)?, idx(j, d)?);
    let jet = field.jet(point)?;
    let p = point.coords();
    match mode {
        EvalMode::Formula => {
            let t1 = x10_derivative(&jet, i, j).scale(0.0, -1.0);
            let t2 = x10_derivative(&jet, j, i).scale(0.0, 1.0);
            Ok(t1
                .add(&t2)
                .add(&y_term(&jet, p, i, j))
                .sub(&y_term(&jet, p, j, i)))
        }
        EvalMode::Direct => {
            let ei = VJet::of(&FrameField { dim: d, index: i }, p);
            let ej = VJet::of(&FrameField { dim: d, index: j }, p);
            let jei = ei.apply_j(&jet);
            let jej = ej.apply_j(&jet);
            // a = e_i, b = -Je_i, c = e_j, d = -Je_j
            let re = bracket_jets(p, &ei, &ej) - bracket_jets(p, &jei, &jej);
            let im = -bracket_jets(p, &ei, &jej) - bracket_jets(p, &jei, &ej);
            Ok(ComplexVector::new(re, im))
        }
    }
}

/// `∇_{X_i} X_j` by the closed form (1-based).
pub fn covderiv10_formula(field: &AcsField, point: &ChartPoint, i: usize, j: usize) -> Result<ComplexVector> {
    let d = field.dim();
    let (i, j) = (idx(i, d)?, idx(j, d)?);
    let jet = field.jet(point)?;
    let p = point.coords();
    let b = &jet.b;
    let btb = b.column(i).dot(&b.column(j));
    let delta = if i == j { 1.0 } else { 0.0 };
    let sym = b[(i, j)] + b[(j, i)];
    let t3 = ComplexVector::new(p * (0.5 * (delta - btb)), p * (-0.5 * sym));
    Ok(x10_derivative(&jet, i, j)
        .scale(0.0, -1.0)
        .add(&y_term(&jet, p, i, j))
        .add(&t3))
}

/// Frame field `J e_j` of an [`AcsField`] viewed as a real vector field.
pub struct JFrameField<'a> {
    pub field: &'a AcsField,
    /// 0-based column.
    pub index: usize,
}

impl VectorField for JFrameField<'_> {
    fn dim(&self) -> usize {
        self.field.dim()
    }
    fn components(&self, y: &DVector<f64>) -> DVector<f64> {
        self.field.value(y).column(self.index).into_owned()
    }
    fn coordinate_derivative(&self, y: &DVector<f64>, l: usize) -> DVector<f64> {
        self.field.coordinate_derivative(y, l).column(self.index).into_owned()
    }
}

/// `∇_{X_i} X_j` from the Levi-Civita connection of the chart, extended
/// complex-linearly (1-based).
pub fn covderiv10_direct(field: &AcsField, point: &ChartPoint, i: usize, j: usize) -> Result<ComplexVector> {
    let d = field.dim();
    let (i, j) = (idx(i, d)?, idx(j, d)?);
    field.check_dim(point)?;
    let ei = FrameField { dim: d, index: i };
    let ej = FrameField { dim: d, index: j };
    let jei = JFrameField { field, index: i };
    let jej = JFrameField { field, index: j };
    let re = covariant_derivative(&ei, &ej, point)? - covariant_derivative(&jei, &jej, point)?;
    let im = -covariant_derivative(&ei, &jej, point)? - covariant_derivative(&jei, &ej, point)?;
    Ok(ComplexVector::new(re, im))
}

/// `|∇_{X_i}X_j + ∇_{X_j}X_i|`; vanishes for every pair only if the
/// `(1,0)` connection is anti-symmetric.
pub fn lebrun_symmetry_norm(field: &AcsField, point: &ChartPoint, i: usize, j: usize) -> Result<f64> {
    let a = covderiv10_formula(field, point, i, j)?;
    let b = covderiv10_formula(field, point, j, i)?;
    Ok(a.add(&b).norm())
}
