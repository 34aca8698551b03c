//! Matrix model of the twistor space `J(R^{2n}) = {A : A^2 = -I}`.
//!
//! A point is a [`ComplexStructure`]; tangent vectors at `A` are matrices with
//! `AX + XA = 0` and the normal space is the commutant `AY = YA`. The
//! projection `M -> (M + AMA)/2` splits `gl(2n)` into the two, and `X -> AX`
//! is the almost complex structure `J~` on the twistor space.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg::{frobenius, square_plus_identity};

/// Default Frobenius tolerance for manifold membership.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Checks that `m` is square of even order and returns the order.
pub fn check_square_even(m: &DMatrix<f64>) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    if !m.nrows().is_multiple_of(2) || m.nrows() == 0 {
        return Err(Error::OddOrder(m.nrows()));
    }
    Ok(m.nrows())
}

/// `true` iff `|M^2 + I|_F <= tol`. Odd or non-square input is an error.
pub fn is_complex_structure(m: &DMatrix<f64>, tol: f64) -> Result<bool> {
    check_square_even(m)?;
    Ok(square_plus_identity(m) <= tol)
}

/// A real matrix `A` of even order with `A^2 = -I`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexStructure {
    entries: DMatrix<f64>,
    orthogonal: bool,
}

impl ComplexStructure {
    /// Validates `m` against `tol`; the orthogonal flag is set when `A^t = -A`
    /// and `AA^t = I` both hold within `tol`.
    pub fn new(m: DMatrix<f64>, tol: f64) -> Result<Self> {
        let k = check_square_even(&m)?;
        let residual = square_plus_identity(&m);
        if !(residual <= tol) {
            return Err(Error::NotComplexStructure { residual });
        }
        let skew = frobenius(&(&m + m.transpose()));
        let orth = frobenius(&(&m * m.transpose() - DMatrix::identity(k, k)));
        let orthogonal = skew <= tol && orth <= tol;
        Ok(Self {
            entries: m,
            orthogonal,
        })
    }

    pub fn from_matrix(m: DMatrix<f64>) -> Result<Self> {
        Self::new(m, DEFAULT_TOL)
    }

    /// Like [`ComplexStructure::new`] but fails unless the result is orthogonal.
    pub fn orthogonal(m: DMatrix<f64>, tol: f64) -> Result<Self> {
        let a = Self::new(m, tol)?;
        if !a.orthogonal {
            let residual = frobenius(&(&a.entries + a.entries.transpose()));
            return Err(Error::NotOrthogonal { residual });
        }
        Ok(a)
    }

    /// The block-diagonal `J0` with 2x2 blocks `[[0,-1],[1,0]]`.
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let mut m = DMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m[(2 * i + 1, 2 * i)] = 1.0;
            m[(2 * i, 2 * i + 1)] = -1.0;
        }
        Ok(Self {
            entries: m,
            orthogonal: true,
        })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.entries
    }

    /// Order `2n` of the matrix.
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn n(&self) -> usize {
        self.dim() / 2
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal
    }

    /// `A^{-1} = -A`.
    pub fn inverse(&self) -> DMatrix<f64> {
        -&self.entries
    }

    pub fn membership_residual(&self) -> f64 {
        square_plus_identity(&self.entries)
    }
}

/// `J0` of order `2n`.
pub fn make_standard_j0(n: usize) -> Result<ComplexStructure> {
    ComplexStructure::standard(n)
}

/// Which half of the splitting `gl(2n) = T_A ⊕ T_A^⊥` a matrix lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subspace {
    Tangent,
    Normal,
}

/// A matrix attached to a base point, tangent (`AX + XA = 0`) or normal
/// (`AY - YA = 0`) to the twistor space there.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentMatrix {
    base: ComplexStructure,
    entries: DMatrix<f64>,
    kind: Subspace,
}

impl TangentMatrix {
    /// Wraps `m` as a tangent vector at `base`, checking `|AX + XA|_F <= tol`.
    pub fn tangent(base: &ComplexStructure, m: DMatrix<f64>, tol: f64) -> Result<Self> {
        check_order(base, &m)?;
        let a = base.matrix();
        let residual = frobenius(&(a * &m + &m * a));
        if !(residual <= tol) {
            return Err(Error::NotTangent { residual });
        }
        Ok(Self {
            base: base.clone(),
            entries: m,
            kind: Subspace::Tangent,
        })
    }

    /// Wraps `m` as a normal vector at `base`, checking `|AY - YA|_F <= tol`.
    pub fn normal(base: &ComplexStructure, m: DMatrix<f64>, tol: f64) -> Result<Self> {
        check_order(base, &m)?;
        let a = base.matrix();
        let residual = frobenius(&(a * &m - &m * a));
        if !(residual <= tol) {
            return Err(Error::NotTangent { residual });
        }
        Ok(Self {
            base: base.clone(),
            entries: m,
            kind: Subspace::Normal,
        })
    }

    pub fn base(&self) -> &ComplexStructure {
        &self.base
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.entries
    }

    pub fn kind(&self) -> Subspace {
        self.kind
    }

    pub fn is_normal(&self) -> bool {
        self.kind == Subspace::Normal
    }
}

fn check_order(a: &ComplexStructure, m: &DMatrix<f64>) -> Result<()> {
    if m.nrows() != a.dim() || m.ncols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            actual: if m.nrows() != a.dim() { m.nrows() } else { m.ncols() },
        });
    }
    Ok(())
}

fn same_base(a: &ComplexStructure, x: &TangentMatrix) -> Result<()> {
    if x.base.dim() != a.dim() || frobenius(&(x.base.matrix() - a.matrix())) > 1e-12 {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// Tangent part `(M + AMA)/2`.
pub fn tangent_project(a: &ComplexStructure, m: &DMatrix<f64>) -> Result<TangentMatrix> {
    check_order(a, m)?;
    let am = a.matrix();
    Ok(TangentMatrix {
        base: a.clone(),
        entries: (m + am * m * am) * 0.5,
        kind: Subspace::Tangent,
    })
}

/// Normal part `(M - AMA)/2`.
pub fn normal_project(a: &ComplexStructure, m: &DMatrix<f64>) -> Result<TangentMatrix> {
    check_order(a, m)?;
    let am = a.matrix();
    Ok(TangentMatrix {
        base: a.clone(),
        entries: (m - am * m * am) * 0.5,
        kind: Subspace::Normal,
    })
}

/// The ambient inner product on `T_A GL(2n)`:
/// `<X,Y> = tr(XY^t)/2 + tr(AXA^{-1} (AYA^{-1})^t)/2`.
pub fn ambient_inner(a: &ComplexStructure, x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<f64> {
    check_order(a, x)?;
    check_order(a, y)?;
    let am = a.matrix();
    let ainv = a.inverse();
    let cx = am * x * &ainv;
    let cy = am * y * &ainv;
    Ok(0.5 * x.dot(y) + 0.5 * cx.dot(&cy))
}

/// The Hermitian metric `ds^2(X,Y) = <X,Y>/2 + <J~X, J~Y>/2` on tangent vectors.
pub fn ds2(a: &ComplexStructure, x: &TangentMatrix, y: &TangentMatrix) -> Result<f64> {
    same_base(a, x)?;
    same_base(a, y)?;
    if x.is_normal() || y.is_normal() {
        return Err(Error::InvalidArgument("ds2 takes tangent vectors".into()));
    }
    ds2_raw(a, x.matrix(), y.matrix())
}

fn ds2_raw(a: &ComplexStructure, x: &DMatrix<f64>, y: &DMatrix<f64>) -> Result<f64> {
    let am = a.matrix();
    Ok(0.5 * ambient_inner(a, x, y)? + 0.5 * ambient_inner(a, &(am * x), &(am * y))?)
}

/// `J~X = AX`.
pub fn jtilde_apply(a: &ComplexStructure, x: &TangentMatrix) -> Result<TangentMatrix> {
    same_base(a, x)?;
    if x.is_normal() {
        return Err(Error::InvalidArgument(
            "J~ is applied to tangent vectors only".into(),
        ));
    }
    Ok(TangentMatrix {
        base: a.clone(),
        entries: a.matrix() * x.matrix(),
        kind: Subspace::Tangent,
    })
}

/// Projected derivative `∇~_{d/ds} X = P_{c(s)}(dX/ds)` of a tangent field
/// along a curve of complex structures, with `dX/ds` by central difference
/// of step `h`.
pub fn covariant_derivative_along<C, F>(
    curve: C,
    field: F,
    s: f64,
    h: f64,
    tol: f64,
) -> Result<TangentMatrix>
where
    C: Fn(f64) -> DMatrix<f64>,
    F: Fn(f64) -> DMatrix<f64>,
{
    if !(h > 0.0) {
        return Err(Error::OutOfRange {
            name: "h",
            value: h,
            range: "(0, inf)",
        });
    }
    for t in [s - h, s + h] {
        let c = curve(t);
        check_square_even(&c)?;
        let residual = square_plus_identity(&c);
        if !(residual <= tol) {
            return Err(Error::StepTooLarge { h, residual });
        }
    }
    let base = ComplexStructure::new(curve(s), tol)?;
    let x = field(s);
    check_order(&base, &x)?;
    let a = base.matrix();
    let residual = frobenius(&(a * &x + &x * a));
    if !(residual <= tol * x.norm().max(1.0)) {
        return Err(Error::NotTangent { residual });
    }
    let dx = (field(s + h) - field(s - h)) / (2.0 * h);
    tangent_project(&base, &dx)
}

/// `∇~(J~X) - J~(∇~X)` at `s` for a tangent field along `curve`.
pub fn kaehler_residual<C, F>(curve: C, field: F, s: f64, h: f64, tol: f64) -> Result<DMatrix<f64>>
where
    C: Fn(f64) -> DMatrix<f64>,
    F: Fn(f64) -> DMatrix<f64>,
{
    let jx = |t: f64| curve(t) * field(t);
    let d_jx = covariant_derivative_along(&curve, jx, s, h, tol)?;
    let d_x = covariant_derivative_along(&curve, &field, s, h, tol)?;
    let a = d_x.base().clone();
    Ok(d_jx.into_matrix() - jtilde_apply(&a, &d_x)?.into_matrix())
}

/// Result of a step-halving study of the Kähler residual.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    pub steps: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Least-squares slope of `log residual` against `log h`.
    pub order: f64,
    /// Norm of the full Richardson extrapolation of the residual matrices,
    /// cancelling the `h^2, h^4, …` error terms in turn.
    pub extrapolated: f64,
}

/// Evaluates [`kaehler_residual`] over `steps` (decreasing, each half the
/// previous) and fits the convergence order.
pub fn kaehler_convergence<C, F>(
    curve: C,
    field: F,
    s: f64,
    steps: &[f64],
    tol: f64,
) -> Result<ConvergenceStudy>
where
    C: Fn(f64) -> DMatrix<f64>,
    F: Fn(f64) -> DMatrix<f64>,
{
    if steps.len() < 2 {
        return Err(Error::InvalidArgument("need at least two steps".into()));
    }
    let mats = steps
        .iter()
        .map(|&h| kaehler_residual(&curve, &field, s, h, tol))
        .collect::<Result<Vec<_>>>()?;
    let residuals: Vec<f64> = mats.iter().map(|m| m.norm()).collect();
    let order = loglog_slope(steps, &residuals);
    let extrapolated = richardson(steps, mats).norm();
    Ok(ConvergenceStudy {
        steps: steps.to_vec(),
        residuals,
        order,
        extrapolated,
    })
}

/// Richardson table for an even error expansion in `h`.
fn richardson(steps: &[f64], mut level: Vec<DMatrix<f64>>) -> DMatrix<f64> {
    let mut h = steps.to_vec();
    let mut power = 2;
    while level.len() > 1 {
        level = level
            .windows(2)
            .zip(h.windows(2))
            .map(|(m, hh)| {
                let p = (hh[0] / hh[1]).powi(power);
                (&m[1] * p - &m[0]) / (p - 1.0)
            })
            .collect();
        h.remove(0);
        power += 2;
    }
    level.pop().expect("at least one step")
}

pub(crate) fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.max(f64::MIN_POSITIVE).ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Torsion of the projected derivative on a two-parameter surface `c(s,t)`:
/// `∇~_{∂s} ∂t c - ∇~_{∂t} ∂s c`, which vanishes for a torsion-free connection
/// because coordinate fields commute.
pub fn torsion_residual<S>(surface: S, s: f64, t: f64, h: f64, tol: f64) -> Result<DMatrix<f64>>
where
    S: Fn(f64, f64) -> DMatrix<f64>,
{
    let d_t = |ss: f64| (surface(ss, t + h) - surface(ss, t - h)) / (2.0 * h);
    let d_s = |tt: f64| (surface(s + h, tt) - surface(s - h, tt)) / (2.0 * h);
    let base = ComplexStructure::new(surface(s, t), tol)?;
    let ds_dt = (d_t(s + h) - d_t(s - h)) / (2.0 * h);
    let dt_ds = (d_s(t + h) - d_s(t - h)) / (2.0 * h);
    Ok(tangent_project(&base, &ds_dt)?.into_matrix() - tangent_project(&base, &dt_ds)?.into_matrix())
}

/// Metric-compatibility defect of the projected derivative along a curve:
/// `d/ds ds2(X,Y) - ds2(∇~X, Y) - ds2(X, ∇~Y)`.
///
/// Zero on the orthogonal locus; elsewhere it is only reported.
pub fn compatibility_residual<C, F, G>(curve: C, x: F, y: G, s: f64, h: f64, tol: f64) -> Result<f64>
where
    C: Fn(f64) -> DMatrix<f64>,
    F: Fn(f64) -> DMatrix<f64>,
    G: Fn(f64) -> DMatrix<f64>,
{
    let metric_at = |t: f64| -> Result<f64> {
        let a = ComplexStructure::new(curve(t), tol)?;
        ds2_raw(&a, &x(t), &y(t))
    };
    let d_metric = (metric_at(s + h)? - metric_at(s - h)?) / (2.0 * h);
    let a = ComplexStructure::new(curve(s), tol)?;
    let dx = covariant_derivative_along(&curve, &x, s, h, tol)?;
    let dy = covariant_derivative_along(&curve, &y, s, h, tol)?;
    Ok(d_metric - ds2_raw(&a, dx.matrix(), &y(s))? - ds2_raw(&a, &x(s), dy.matrix())?)
}

/// Serializes a matrix as a JSON array of rows.
pub fn matrix_to_json(m: &DMatrix<f64>) -> String {
    let rows: Vec<Vec<f64>> = (0..m.nrows())
        .map(|i| m.row(i).iter().copied().collect())
        .collect();
    serde_json::to_string(&rows).expect("finite matrix serializes")
}

/// Parses a JSON array of rows into a square matrix of even order.
pub fn matrix_from_json(s: &str) -> Result<DMatrix<f64>> {
    let rows: Vec<Vec<f64>> = serde_json::from_str(s)?;
    rows_to_matrix(&rows)
}

pub(crate) fn rows_to_matrix(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let k = rows.len();
    for r in rows {
        if r.len() != k {
            return Err(Error::NotSquare {
                rows: k,
                cols: r.len(),
            });
        }
        if r.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite matrix entry".into()));
        }
    }
    let m = DMatrix::from_fn(k, k, |i, j| rows[i][j]);
    check_square_even(&m)?;
    Ok(m)
}

pub(crate) fn matrix_to_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().copied().collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn j0_blocks() {
        let j = make_standard_j0(1).unwrap();
        assert_eq!(j.matrix(), &DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]));
        let j2 = make_standard_j0(2).unwrap();
        let sq = j2.matrix() * j2.matrix();
        assert_eq!(sq, -DMatrix::<f64>::identity(4, 4));
        assert!(j2.is_orthogonal());
        assert!(make_standard_j0(0).is_err());
    }

    #[test]
    fn conjugated_frame_is_rotated_by_pairs() {
        // A = g J0 g^{-1} sends column 2i-1 of g to column 2i.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = sample::well_conditioned(&mut rng, 6);
        let j0 = make_standard_j0(3).unwrap();
        let a = &g * j0.matrix() * g.clone().try_inverse().unwrap();
        for i in 0..3 {
            let odd = g.column(2 * i).into_owned();
            let even = g.column(2 * i + 1).into_owned();
            assert!((&a * &odd - &even).norm() < 1e-10);
            assert!((&a * &even + &odd).norm() < 1e-10);
        }
    }

    #[test]
    fn membership_predicate() {
        let j0 = make_standard_j0(2).unwrap();
        assert!(is_complex_structure(j0.matrix(), DEFAULT_TOL).unwrap());
        assert!(!is_complex_structure(&DMatrix::identity(4, 4), DEFAULT_TOL).unwrap());
        assert_eq!(
            is_complex_structure(&DMatrix::identity(3, 3), DEFAULT_TOL),
            Err(Error::OddOrder(3))
        );
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=4 {
            let a = sample::complex_structure(&mut rng, n);
            assert!(is_complex_structure(a.matrix(), DEFAULT_TOL).unwrap());
        }
    }

    #[test]
    fn projection_fixes_tangent_and_kills_normal() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = sample::complex_structure(&mut rng, 2);
        let m = sample::gaussian(&mut rng, 4, 4);
        let p = tangent_project(&a, &m).unwrap();
        let again = tangent_project(&a, p.matrix()).unwrap();
        assert!((again.matrix() - p.matrix()).norm() < 1e-12);
        let am = a.matrix();
        assert!((am * p.matrix() * am - p.matrix()).norm() < 1e-10);
        let nrm = normal_project(&a, &m).unwrap();
        assert!(tangent_project(&a, nrm.matrix()).unwrap().matrix().norm() < 1e-10);
        assert!((p.matrix() + nrm.matrix() - &m).norm() < 1e-12);
        assert!(ambient_inner(&a, p.matrix(), nrm.matrix()).unwrap().abs() < 1e-9 * m.norm_squared());
    }

    #[test]
    fn inner_product_reduces_to_trace_on_tangent_pairs() {
        let j0 = make_standard_j0(2).unwrap();
        let x = tangent_project(&j0, &DMatrix::from_fn(4, 4, |i, j| (i * 4 + j) as f64)).unwrap();
        let v = ambient_inner(&j0, x.matrix(), x.matrix()).unwrap();
        assert!((v - (x.matrix() * x.matrix().transpose()).trace()).abs() < 1e-12);
        assert_eq!(ambient_inner(&j0, &DMatrix::zeros(4, 4), x.matrix()).unwrap(), 0.0);
    }

    #[test]
    fn jtilde_two_by_two() {
        let j0 = make_standard_j0(1).unwrap();
        let (a, b) = (0.7, -1.3);
        let x = TangentMatrix::tangent(&j0, DMatrix::from_row_slice(2, 2, &[a, b, b, -a]), 1e-12).unwrap();
        let jx = jtilde_apply(&j0, &x).unwrap();
        assert_eq!(jx.matrix(), &DMatrix::from_row_slice(2, 2, &[-b, a, a, b]));
        let jjx = jtilde_apply(&j0, &jx).unwrap();
        assert!((jjx.matrix() + x.matrix()).norm() < 1e-15);
        let y = TangentMatrix::normal(&j0, DMatrix::identity(2, 2), 1e-12).unwrap();
        assert!(jtilde_apply(&j0, &y).is_err());
    }

    #[test]
    fn ds2_is_hermitian_and_reduces_on_orthogonal_locus() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = sample::complex_structure(&mut rng, 3);
        let x = sample::tangent(&mut rng, &a);
        let y = sample::tangent(&mut rng, &a);
        let jx = jtilde_apply(&a, &x).unwrap();
        let jy = jtilde_apply(&a, &y).unwrap();
        let lhs = ds2(&a, &jx, &jy).unwrap();
        let rhs = ds2(&a, &x, &y).unwrap();
        assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));

        let b = sample::orthogonal_structure(&mut rng, 3);
        let u = sample::tangent(&mut rng, &b);
        let w = sample::tangent(&mut rng, &b);
        let tr = (u.matrix() * w.matrix().transpose()).trace();
        assert!((ds2(&b, &u, &w).unwrap() - tr).abs() < 1e-12);
        let zero = TangentMatrix::tangent(&b, DMatrix::zeros(6, 6), 0.0).unwrap();
        assert_eq!(ds2(&b, &zero, &u).unwrap(), 0.0);
        assert_eq!(ds2(&a, &zero, &u), Err(Error::BaseMismatch));
    }

    #[test]
    fn constant_field_has_zero_derivative() {
        let j0 = make_standard_j0(2).unwrap();
        let x = tangent_project(&j0, &DMatrix::from_fn(4, 4, |i, j| (i + 2 * j) as f64)).unwrap();
        let c = j0.matrix().clone();
        let xm = x.matrix().clone();
        let d = covariant_derivative_along(|_| c.clone(), |_| xm.clone(), 0.0, 1e-3, DEFAULT_TOL).unwrap();
        assert_eq!(d.matrix().norm(), 0.0);
    }

    #[test]
    fn step_drift_is_rejected() {
        // c(s) = J0 + s I leaves the manifold immediately.
        let j0 = make_standard_j0(1).unwrap();
        let c = j0.matrix().clone();
        let r = covariant_derivative_along(
            |s| &c + DMatrix::identity(2, 2) * s,
            |_| DMatrix::zeros(2, 2),
            0.0,
            1e-2,
            DEFAULT_TOL,
        );
        assert!(matches!(r, Err(Error::StepTooLarge { .. })));
    }

    #[test]
    fn json_rejects_bad_shapes() {
        assert!(matrix_from_json("[[0,-1],[1,0]]").is_ok());
        assert!(matches!(matrix_from_json("[[1,2,3],[1,2,3],[1,2,3]]"), Err(Error::OddOrder(3))));
        assert!(matches!(matrix_from_json("[[1,2],[3]]"), Err(Error::NotSquare { .. })));
        let m = make_standard_j0(2).unwrap().into_matrix();
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }
}
