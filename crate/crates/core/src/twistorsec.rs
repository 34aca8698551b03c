//! The section `f(y) = e_0 e_{-1}^t - e_{-1} e_0^t + E B(y) E^t` of the twistor
//! bundle `π(A) = A e_{-1}` over `S^{2n}`, its pushforward and the
//! vertical/horizontal split of `f_* X`.
//!
//! Tangent vectors of the sphere are passed as frame components `X^l` with
//! respect to `ê_1, …, ê_2n`.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::acsfield::{make_constant_field, make_rotated_field, nijenhuis_formula, AcsField};
use crate::error::{Error, Result};
use crate::linalg::{frobenius, outer, square_plus_identity};
use crate::sample;
use crate::spheregeo::{
    connection_matrix, e0_coordinate_derivative, embed, frame_coordinate_derivative, ChartPoint,
    FrameData, DEFAULT_FD_STEP,
};

/// `f`, the frame it was built from and `B` at the point.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionValue {
    pub f: DMatrix<f64>,
    pub frame: FrameData,
    pub b: DMatrix<f64>,
    pub orthogonal: bool,
}

impl SectionValue {
    /// `‖f² + I‖_F`.
    pub fn membership_residual(&self) -> f64 {
        square_plus_identity(&self.f)
    }

    /// `‖f + f^t‖_F`.
    pub fn skew_residual(&self) -> f64 {
        frobenius(&(&self.f + self.f.transpose()))
    }

    /// `π(f) = f e_{-1}`.
    pub fn projection(&self) -> DVector<f64> {
        &self.f * &self.frame.e_minus1
    }
}

fn section_matrix(frame: &FrameData, b: &DMatrix<f64>) -> DMatrix<f64> {
    let e = frame.frame_matrix();
    outer(&frame.e0, &frame.e_minus1) - outer(&frame.e_minus1, &frame.e0) + &e * b * e.transpose()
}

pub fn embed_section(field: &AcsField, point: &ChartPoint) -> Result<SectionValue> {
    field.check_at(point)?;
    let frame = embed(point);
    let b = field.value(point.coords());
    Ok(SectionValue {
        f: section_matrix(&frame, &b),
        frame,
        b,
        orthogonal: field.is_orthogonal(),
    })
}

/// How [`pushforward_with`] differentiates `f`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Differentiation {
    /// Central differences of the whole matrix `f` in chart coordinates.
    CentralDifference { h: f64 },
    /// Product rule with analytic frame derivatives and the field's own `∂B`.
    Analytic,
}

impl Default for Differentiation {
    fn default() -> Self {
        Self::CentralDifference { h: DEFAULT_FD_STEP }
    }
}

/// `∂f/∂y^l`, 0-based `l`.
fn coordinate_derivative(field: &AcsField, point: &ChartPoint, l: usize, mode: Differentiation) -> Result<DMatrix<f64>> {
    match mode {
        Differentiation::CentralDifference { h } => {
            if !(h > 0.0) || !h.is_finite() {
                return Err(Error::OutOfRange {
                    name: "h",
                    value: h,
                    range: "(0, inf)",
                });
            }
            let mut yp = point.coords().clone();
            let mut ym = yp.clone();
            yp[l] += h;
            ym[l] -= h;
            let fp = embed_section(field, &ChartPoint::new(yp)?)?.f;
            let fm = embed_section(field, &ChartPoint::new(ym)?)?.f;
            Ok((fp - fm) / (2.0 * h))
        }
        Differentiation::Analytic => {
            let frame = embed(point);
            let y = point.coords();
            let e = frame.frame_matrix();
            let de = frame_coordinate_derivative(point, l);
            let de0 = e0_coordinate_derivative(point, l);
            let b = field.value(y);
            let db = field.coordinate_derivative(y, l);
            Ok(outer(&de0, &frame.e_minus1) - outer(&frame.e_minus1, &de0)
                + &de * &b * e.transpose()
                + &e * db * e.transpose()
                + &e * b * de.transpose())
        }
    }
}

/// `f_* X` with the default central-difference step.
pub fn pushforward(field: &AcsField, point: &ChartPoint, x: &DVector<f64>) -> Result<DMatrix<f64>> {
    pushforward_with(field, point, x, Differentiation::default())
}

/// `f_* X = Σ X^l c ∂f/∂y^l` with `c = 1 + |y|²/4`.
pub fn pushforward_with(
    field: &AcsField,
    point: &ChartPoint,
    x: &DVector<f64>,
    mode: Differentiation,
) -> Result<DMatrix<f64>> {
    check_vector(field, point, x)?;
    let k = field.dim() + 2;
    let c = point.conformal_factor();
    let mut out = DMatrix::zeros(k, k);
    for l in 0..field.dim() {
        if x[l] != 0.0 {
            out += coordinate_derivative(field, point, l, mode)? * (c * x[l]);
        }
    }
    if out.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidArgument("pushforward is not finite".into()));
    }
    Ok(out)
}

/// `f_* e_l` for a 1-based frame index.
pub fn pushforward_frame(field: &AcsField, point: &ChartPoint, l: usize) -> Result<DMatrix<f64>> {
    pushforward(field, point, &unit(field.dim(), l)?)
}

fn unit(d: usize, l: usize) -> Result<DVector<f64>> {
    if l == 0 || l > d {
        return Err(Error::IndexOutOfRange { index: l, max: d });
    }
    let mut v = DVector::zeros(d);
    v[l - 1] = 1.0;
    Ok(v)
}

fn check_vector(field: &AcsField, point: &ChartPoint, x: &DVector<f64>) -> Result<()> {
    for actual in [point.dim(), x.len()] {
        if actual != field.dim() {
            return Err(Error::DimensionMismatch {
                expected: field.dim(),
                actual,
            });
        }
    }
    Ok(())
}

/// `∇_X J_f = E (XB + ω(X)B - Bω(X)) E^t`.
pub fn vertical_part(field: &AcsField, point: &ChartPoint, x: &DVector<f64>) -> Result<DMatrix<f64>> {
    check_vector(field, point, x)?;
    let jet = field.jet(point)?;
    let omega = connection_matrix(point, x);
    let inner = jet.along(x) + &omega * &jet.b - &jet.b * &omega;
    let e = embed(point).frame_matrix();
    Ok(&e * inner * e.transpose())
}

/// `X̂ = M + f M f` with `M = x̂ e_{-1}^t - e_{-1} x̂^t` and `x̂ = Σ X^l ê_l`.
pub fn horizontal_lift(sv: &SectionValue, x: &DVector<f64>) -> DMatrix<f64> {
    lift_ambient(sv, &sv.frame.ambient(x))
}

fn lift_ambient(sv: &SectionValue, xhat: &DVector<f64>) -> DMatrix<f64> {
    let m = outer(xhat, &sv.frame.e_minus1) - outer(&sv.frame.e_minus1, xhat);
    &m + &sv.f * &m * &sv.f
}

/// Vertical and horizontal pieces of `f_* X`.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentSplit {
    pub vertical: DMatrix<f64>,
    pub horizontal: DMatrix<f64>,
}

impl TangentSplit {
    pub fn total(&self) -> DMatrix<f64> {
        &self.vertical + &self.horizontal
    }
}

pub fn split(field: &AcsField, point: &ChartPoint, x: &DVector<f64>) -> Result<TangentSplit> {
    let sv = embed_section(field, point)?;
    Ok(TangentSplit {
        vertical: vertical_part(field, point, x)?,
        horizontal: horizontal_lift(&sv, x),
    })
}

/// `‖f_* X - ∇_X J_f - X̂‖_F`.
pub fn decomposition_residual(
    field: &AcsField,
    point: &ChartPoint,
    x: &DVector<f64>,
    mode: Differentiation,
) -> Result<f64> {
    let push = pushforward_with(field, point, x, mode)?;
    Ok(frobenius(&(push - split(field, point, x)?.total())))
}

/// `f (f_* e_l) - f_*(J_f e_l)` for a 1-based frame index.
pub fn holomorphy_residual(field: &AcsField, point: &ChartPoint, l: usize) -> Result<DMatrix<f64>> {
    holomorphy_residual_with(field, point, l, Differentiation::default())
}

pub fn holomorphy_residual_with(
    field: &AcsField,
    point: &ChartPoint,
    l: usize,
    mode: Differentiation,
) -> Result<DMatrix<f64>> {
    let el = unit(field.dim(), l)?;
    let sv = embed_section(field, point)?;
    let jel = &sv.b * &el;
    let a = pushforward_with(field, point, &el, mode)?;
    let b = pushforward_with(field, point, &jel, mode)?;
    Ok(&sv.f * a - b)
}

/// `‖(f f_* X) e_{-1} - Σ (BX)^k ê_k‖`; zero for every section.
pub fn lemma33_check(field: &AcsField, point: &ChartPoint, x: &DVector<f64>) -> Result<f64> {
    let sv = embed_section(field, point)?;
    let push = pushforward(field, point, x)?;
    let lhs = &sv.f * push * &sv.frame.e_minus1;
    Ok((lhs - sv.frame.ambient(&(&sv.b * x))).norm())
}

/// Generators of the tangent space at an orthogonal section value, built on a
/// frame `u_1, …, u_2n` of the tangent plane with `f u_{2i-1} = u_{2i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AdaptedGenerators {
    /// Ambient columns `u_l`.
    pub basis: DMatrix<f64>,
    /// `(i, j)` with `1 ≤ i < j ≤ n`, indexing `alpha` and `beta`.
    pub pairs: Vec<(usize, usize)>,
    pub alpha: Vec<DMatrix<f64>>,
    pub beta: Vec<DMatrix<f64>>,
    /// `X̃_1, …, X̃_2n`.
    pub horizontal: Vec<DMatrix<f64>>,
}

/// Orthonormal `g` with `B g_{2i-1} = g_{2i}` for skew-orthogonal `B`.
pub fn adapted_basis(b: &DMatrix<f64>) -> DMatrix<f64> {
    let d = b.nrows();
    let mut cols: Vec<DVector<f64>> = Vec::with_capacity(d);
    while cols.len() < d {
        // pick the coordinate axis least captured by the current span
        let mut best: Option<DVector<f64>> = None;
        for k in 0..d {
            let mut v = DVector::zeros(d);
            v[k] = 1.0;
            for c in &cols {
                v -= c * c.dot(&v);
            }
            if best.as_ref().is_none_or(|w| v.norm() > w.norm()) {
                best = Some(v);
            }
        }
        let mut v = best.expect("nonempty");
        // one re-orthogonalization pass for stability
        for c in &cols {
            v -= c * c.dot(&v);
        }
        let v = v.normalize();
        let w = b * &v;
        cols.push(v);
        cols.push(w);
    }
    DMatrix::from_columns(&cols)
}

pub fn adapted_generators(sv: &SectionValue) -> Result<AdaptedGenerators> {
    let d = sv.b.nrows();
    let residual = frobenius(&(&sv.b * sv.b.transpose() - DMatrix::identity(d, d)));
    if residual > 1e-9 {
        return Err(Error::NotOrthogonal { residual });
    }
    let u = sv.frame.frame_matrix() * adapted_basis(&sv.b);
    Ok(generators_from_frame(&sv.frame.e_minus1, &sv.frame.e0, u))
}

/// `α_ij`, `β_ij` and `X̃_l` for an orthonormal frame `(e_{-1}, e_0, u_1, …)`
/// whose structure sends `e_{-1} -> e_0` and `u_{2i-1} -> u_{2i}`.
pub fn generators_from_frame(em1: &DVector<f64>, e0: &DVector<f64>, u: DMatrix<f64>) -> AdaptedGenerators {
    let col = |l: usize| u.column(l - 1).into_owned();
    let n = u.ncols() / 2;
    let mut pairs = Vec::new();
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let (a1, a2, b1, b2) = (col(2 * i - 1), col(2 * i), col(2 * j - 1), col(2 * j));
            pairs.push((i, j));
            alpha.push(outer(&b1, &a1) - outer(&b2, &a2) - outer(&a1, &b1) + outer(&a2, &b2));
            beta.push(outer(&b2, &a1) + outer(&b1, &a2) - outer(&a2, &b1) - outer(&a1, &b2));
        }
    }
    let mut horizontal = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let (odd, even) = (col(2 * i - 1), col(2 * i));
        horizontal.push(outer(&odd, em1) - outer(em1, &odd) + outer(e0, &even) - outer(&even, e0));
        horizontal.push(outer(&even, em1) - outer(em1, &even) - outer(e0, &odd) + outer(&odd, e0));
    }
    AdaptedGenerators {
        basis: u,
        pairs,
        alpha,
        beta,
        horizontal,
    }
}

/// The three families drawn by [`equivalence_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    ConstantOrthogonal,
    ConstantGeneral,
    Rotated,
}

impl SampleKind {
    pub const ALL: [SampleKind; 3] = [Self::ConstantOrthogonal, Self::ConstantGeneral, Self::Rotated];
}

/// Zero/nonzero bands and sampling ranges for [`equivalence_sweep`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub n: usize,
    pub samples: usize,
    pub zero_band: f64,
    pub nonzero_band: f64,
    pub radius: f64,
    pub rotation_scale: f64,
    pub max_redraws: usize,
    pub differentiation: Differentiation,
}

impl SweepConfig {
    pub fn new(n: usize, samples: usize) -> Self {
        Self {
            n,
            samples,
            zero_band: 1e-5,
            nonzero_band: 1e-2,
            radius: 1.5,
            rotation_scale: 1.0,
            max_redraws: 20,
            differentiation: Differentiation::default(),
        }
    }
}

/// One paired sample: the holomorphy residual against the integrability data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSample {
    pub kind: SampleKind,
    pub y: Vec<f64>,
    /// `max_l ‖f f_* e_l - f_* J e_l‖_F`.
    pub holomorphy: f64,
    /// `‖B + B^t‖_F`.
    pub orthogonality_defect: f64,
    /// `max_{i,j} |N(e_i, e_j)|`.
    pub nijenhuis: f64,
    pub predicted_zero: bool,
    pub observed_zero: bool,
}

impl SweepSample {
    pub fn mismatch(&self) -> bool {
        self.predicted_zero != self.observed_zero
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub samples: Vec<SweepSample>,
    pub mismatches: usize,
    /// Draws discarded because a quantity fell between the bands.
    pub redrawn: usize,
    /// Samples abandoned after `max_redraws` consecutive in-between draws.
    pub unresolved: usize,
}

fn band(v: f64, cfg: &SweepConfig) -> Option<bool> {
    if v <= cfg.zero_band {
        Some(true)
    } else if v >= cfg.nonzero_band {
        Some(false)
    } else {
        None
    }
}

fn draw_field<R: Rng + ?Sized>(rng: &mut R, kind: SampleKind, cfg: &SweepConfig) -> Result<AcsField> {
    let n = cfg.n;
    match kind {
        SampleKind::ConstantOrthogonal => make_constant_field(sample::orthogonal_structure(rng, n).into_matrix()),
        SampleKind::ConstantGeneral => make_constant_field(sample::complex_structure(rng, n).into_matrix()),
        SampleKind::Rotated => {
            let b0 = sample::orthogonal_structure(rng, n).into_matrix();
            let gens = (0..2 * n).map(|_| sample::skew(rng, 2 * n)).collect();
            make_rotated_field(b0, gens, cfg.rotation_scale)
        }
    }
}

/// Evaluates both sides of the holomorphy criterion for one field and point.
pub fn paired_sample(field: &AcsField, point: &ChartPoint, kind: SampleKind, cfg: &SweepConfig) -> Result<Option<SweepSample>> {
    let d = field.dim();
    let b = field.value(point.coords());
    let orthogonality_defect = frobenius(&(&b + b.transpose()));
    let mut nijenhuis: f64 = 0.0;
    for i in 1..=d {
        for j in i + 1..=d {
            nijenhuis = nijenhuis.max(nijenhuis_formula(field, point, i, j)?.norm());
        }
    }
    let mut holomorphy: f64 = 0.0;
    for l in 1..=d {
        holomorphy = holomorphy.max(frobenius(&holomorphy_residual_with(field, point, l, cfg.differentiation)?));
    }
    let predicted = band(orthogonality_defect.max(nijenhuis), cfg);
    let observed = band(holomorphy, cfg);
    Ok(match (predicted, observed) {
        (Some(p), Some(o)) => Some(SweepSample {
            kind,
            y: point.coords().iter().copied().collect(),
            holomorphy,
            orthogonality_defect,
            nijenhuis,
            predicted_zero: p,
            observed_zero: o,
        }),
        _ => None,
    })
}

/// Draws `samples` (field, point) pairs cycling through [`SampleKind::ALL`]
/// and compares the zero/nonzero verdicts of both sides.
pub fn equivalence_sweep<R: Rng + ?Sized>(rng: &mut R, cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.n == 0 || !(cfg.zero_band < cfg.nonzero_band) {
        return Err(Error::InvalidArgument("sweep needs n >= 1 and zero_band < nonzero_band".into()));
    }
    let mut samples = Vec::with_capacity(cfg.samples);
    let mut redrawn = 0;
    let mut unresolved = 0;
    for s in 0..cfg.samples {
        let kind = SampleKind::ALL[s % 3];
        let mut done = false;
        for _ in 0..=cfg.max_redraws {
            let field = draw_field(rng, kind, cfg)?;
            let point = ChartPoint::new(sample::chart_coords(rng, 2 * cfg.n, cfg.radius))?;
            match paired_sample(&field, &point, kind, cfg)? {
                Some(smp) => {
                    samples.push(smp);
                    done = true;
                    break;
                }
                None => redrawn += 1,
            }
        }
        if !done {
            unresolved += 1;
        }
    }
    let mismatches = samples.iter().filter(|s| s.mismatch()).count();
    Ok(SweepReport {
        config: cfg.clone(),
        samples,
        mismatches,
        redrawn,
        unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::ComplexStructure;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn j0(n: usize) -> DMatrix<f64> {
        ComplexStructure::standard(n).unwrap().into_matrix()
    }

    fn rotated(rng: &mut ChaCha8Rng, n: usize) -> AcsField {
        draw_field(rng, SampleKind::Rotated, &SweepConfig::new(n, 1)).unwrap()
    }

    #[test]
    fn section_at_origin() {
        let f = make_constant_field(j0(2)).unwrap();
        let sv = embed_section(&f, &ChartPoint::origin(2)).unwrap();
        assert!(sv.membership_residual() < 1e-15);
        assert!(sv.skew_residual() < 1e-15);
        let north = DVector::from_vec(vec![0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(sv.projection(), north);
    }

    #[test]
    fn section_membership_on_random_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=3 {
            for kind in SampleKind::ALL {
                let f = draw_field(&mut rng, kind, &SweepConfig::new(n, 1)).unwrap();
                let p = ChartPoint::new(sample::chart_coords(&mut rng, 2 * n, 3.0)).unwrap();
                let sv = embed_section(&f, &p).unwrap();
                assert!(sv.membership_residual() < 1e-10);
                assert!((sv.projection() - &sv.frame.e0).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn pushforward_is_tangent_and_modes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = rotated(&mut rng, 2);
        let p = ChartPoint::new(sample::chart_coords(&mut rng, 4, 1.5)).unwrap();
        let sv = embed_section(&f, &p).unwrap();
        let x = sample::gaussian_vector(&mut rng, 4);
        let a = pushforward(&f, &p, &x).unwrap();
        let b = pushforward_with(&f, &p, &x, Differentiation::Analytic).unwrap();
        assert!(frobenius(&(&a - &b)) < 1e-8);
        assert!(frobenius(&(&sv.f * &b + &b * &sv.f)) < 1e-12);
        assert_eq!(frobenius(&pushforward(&f, &p, &DVector::zeros(4)).unwrap()), 0.0);
    }

    #[test]
    fn constant_field_at_origin_pushes_to_lift() {
        let f = make_constant_field(j0(2)).unwrap();
        let p = ChartPoint::origin(2);
        let sv = embed_section(&f, &p).unwrap();
        for l in 1..=4 {
            let x = unit(4, l).unwrap();
            let push = pushforward(&f, &p, &x).unwrap();
            assert!(frobenius(&(push - horizontal_lift(&sv, &x))) < 1e-9);
            assert!(frobenius(&vertical_part(&f, &p, &x).unwrap()) < 1e-15);
        }
    }

    #[test]
    fn decomposition_holds_for_general_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for kind in SampleKind::ALL {
            let f = draw_field(&mut rng, kind, &SweepConfig::new(2, 1)).unwrap();
            let p = ChartPoint::new(sample::chart_coords(&mut rng, 4, 1.5)).unwrap();
            let x = sample::gaussian_vector(&mut rng, 4);
            let r = decomposition_residual(&f, &p, &x, Differentiation::Analytic).unwrap();
            assert!(r < 1e-12, "{kind:?}: {r}");
            let v = vertical_part(&f, &p, &x).unwrap();
            assert!((v * &embed(&p).e_minus1).norm() < 1e-15);
        }
    }

    #[test]
    fn base_point_identity_holds_without_integrability() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = rotated(&mut rng, 3);
        let p = ChartPoint::new(sample::chart_coords(&mut rng, 6, 1.0)).unwrap();
        let x = sample::gaussian_vector(&mut rng, 6);
        assert!(lemma33_check(&f, &p, &x).unwrap() < 1e-8);
        assert_eq!(lemma33_check(&f, &p, &DVector::zeros(6)).unwrap(), 0.0);
    }

    #[test]
    fn adapted_generators_are_equivariant_and_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = rotated(&mut rng, 3);
        let p = ChartPoint::new(sample::chart_coords(&mut rng, 6, 1.0)).unwrap();
        let sv = embed_section(&f, &p).unwrap();
        let g = adapted_generators(&sv).unwrap();
        assert_eq!(g.pairs.len(), 3);
        for (a, b) in g.alpha.iter().zip(&g.beta) {
            assert!(frobenius(&(&sv.f * a - b)) < 1e-12);
            for x in &g.horizontal {
                assert!((a * x.transpose()).trace().abs() < 1e-12);
                assert!((b * x.transpose()).trace().abs() < 1e-12);
            }
        }
        for i in 0..3 {
            let (odd, even) = (&g.horizontal[2 * i], &g.horizontal[2 * i + 1]);
            assert!(frobenius(&(&sv.f * odd - even)) < 1e-12);
            let u = g.basis.column(2 * i).into_owned();
            assert!((odd * &sv.frame.e_minus1 - u).norm() < 1e-12);
        }
    }

    #[test]
    fn adapted_form_needs_orthogonal_section() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let f = make_constant_field(sample::complex_structure(&mut rng, 2).into_matrix()).unwrap();
        let sv = embed_section(&f, &ChartPoint::origin(2)).unwrap();
        assert!(matches!(adapted_generators(&sv), Err(Error::NotOrthogonal { .. })));
    }

    #[test]
    fn holomorphy_bands() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = SweepConfig::new(2, 1);
        let p = ChartPoint::new(sample::chart_coords(&mut rng, 4, 1.5)).unwrap();
        let orth = draw_field(&mut rng, SampleKind::ConstantOrthogonal, &cfg).unwrap();
        let gen = draw_field(&mut rng, SampleKind::ConstantGeneral, &cfg).unwrap();
        let rot = draw_field(&mut rng, SampleKind::Rotated, &cfg).unwrap();
        let worst = |f: &AcsField| {
            (1..=4)
                .map(|l| frobenius(&holomorphy_residual(f, &p, l).unwrap()))
                .fold(0.0, f64::max)
        };
        assert!(worst(&orth) < 1e-8);
        assert!(worst(&gen) > 1e-2);
        assert!(worst(&rot) > 1e-2);
    }

    #[test]
    fn small_sweep_has_no_mismatch() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let report = equivalence_sweep(&mut rng, &SweepConfig::new(2, 12)).unwrap();
        assert_eq!(report.samples.len(), 12);
        assert_eq!(report.mismatches, 0);
    }
}
