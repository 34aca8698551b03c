//! Seeded random generators for matrices, structures and chart points.
//!
//! Every generator takes the caller's RNG; nothing here owns global state.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use crate::matcore::{tangent_project, ComplexStructure, TangentMatrix};

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| StandardNormal.sample(rng))
}

pub fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> DVector<f64> {
    DVector::from_fn(len, |_, _| StandardNormal.sample(rng))
}

/// Haar-distributed orthogonal matrix (QR of a Gaussian with sign fix).
pub fn orthogonal<R: Rng + ?Sized>(rng: &mut R, k: usize) -> DMatrix<f64> {
    let qr = gaussian(rng, k, k).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..k {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// Orthogonal matrix with determinant +1.
pub fn special_orthogonal<R: Rng + ?Sized>(rng: &mut R, k: usize) -> DMatrix<f64> {
    let mut q = orthogonal(rng, k);
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    q
}

pub fn skew<R: Rng + ?Sized>(rng: &mut R, k: usize) -> DMatrix<f64> {
    let g = gaussian(rng, k, k);
    (&g - g.transpose()) * 0.5
}

/// `Q1 diag(d) Q2` with singular values in `[1/2, 2]`.
pub fn well_conditioned<R: Rng + ?Sized>(rng: &mut R, k: usize) -> DMatrix<f64> {
    let q1 = orthogonal(rng, k);
    let q2 = orthogonal(rng, k);
    let u = Uniform::new(0.5, 2.0).expect("valid range");
    let d = DVector::from_fn(k, |_, _| u.sample(rng));
    q1 * DMatrix::from_diagonal(&d) * q2
}

/// `g J0 g^{-1}` for a well-conditioned random `g`.
pub fn complex_structure<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexStructure {
    let g = well_conditioned(rng, 2 * n);
    let j0 = ComplexStructure::standard(n).expect("n >= 1");
    let ginv = g.clone().try_inverse().expect("well conditioned");
    let a = &g * j0.matrix() * ginv;
    ComplexStructure::from_matrix(a).expect("conjugate of J0")
}

/// `Q J0 Q^t` for a Haar-random `Q ∈ SO(2n)`.
pub fn orthogonal_structure<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexStructure {
    let q = special_orthogonal(rng, 2 * n);
    let j0 = ComplexStructure::standard(n).expect("n >= 1");
    let a = &q * j0.matrix() * q.transpose();
    ComplexStructure::orthogonal(a, 1e-9).expect("conjugate of J0")
}

/// Tangent projection of a Gaussian matrix.
pub fn tangent<R: Rng + ?Sized>(rng: &mut R, a: &ComplexStructure) -> TangentMatrix {
    let m = gaussian(rng, a.dim(), a.dim());
    tangent_project(a, &m).expect("matching order")
}

/// Skew tangent vector at an orthogonal structure (tangent to `J~(R^{2n})`).
pub fn skew_tangent<R: Rng + ?Sized>(rng: &mut R, a: &ComplexStructure) -> TangentMatrix {
    let m = skew(rng, a.dim());
    tangent_project(a, &m).expect("matching order")
}

/// Chart point with coordinates uniform in `[-radius, radius]`.
pub fn chart_coords<R: Rng + ?Sized>(rng: &mut R, dim: usize, radius: f64) -> DVector<f64> {
    let u = Uniform::new_inclusive(-radius, radius).expect("valid range");
    DVector::from_fn(dim, |_, _| u.sample(rng))
}

/// Curve `s -> G exp(sW) J0 exp(-sW) G^{-1}` through `J(R^{2n})`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureCurve {
    g: DMatrix<f64>,
    g_inv: DMatrix<f64>,
    w: DMatrix<f64>,
    j0: DMatrix<f64>,
}

impl StructureCurve {
    pub fn at(&self, s: f64) -> DMatrix<f64> {
        let e = (&self.w * s).exp();
        let e_inv = (&self.w * -s).exp();
        &self.g * e * &self.j0 * e_inv * &self.g_inv
    }
}

/// Curve of orthogonal structures: `G` Haar-orthogonal, `W` skew.
pub fn orthogonal_curve<R: Rng + ?Sized>(rng: &mut R, n: usize) -> StructureCurve {
    let g = special_orthogonal(rng, 2 * n);
    StructureCurve {
        g_inv: g.transpose(),
        g,
        w: skew(rng, 2 * n),
        j0: ComplexStructure::standard(n).expect("n >= 1").into_matrix(),
    }
}

/// Curve of general structures: `G` well conditioned, `W` Gaussian.
pub fn structure_curve<R: Rng + ?Sized>(rng: &mut R, n: usize) -> StructureCurve {
    let g = well_conditioned(rng, 2 * n);
    StructureCurve {
        g_inv: g.clone().try_inverse().expect("well conditioned"),
        g,
        w: gaussian(rng, 2 * n, 2 * n) * 0.5,
        j0: ComplexStructure::standard(n).expect("n >= 1").into_matrix(),
    }
}

/// Field `s -> P_{c(s)}(M0 + s M1 + s^2 M2)` tangent along a curve.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldAlong {
    curve: StructureCurve,
    m: [DMatrix<f64>; 3],
}

impl FieldAlong {
    pub fn at(&self, s: f64) -> DMatrix<f64> {
        let a = self.curve.at(s);
        let m = &self.m[0] + &self.m[1] * s + &self.m[2] * (s * s);
        (&m + &a * &m * &a) * 0.5
    }
}

/// Tangent field along `curve`; skew coefficients keep it in `T J~` when the
/// curve is orthogonal.
pub fn field_along<R: Rng + ?Sized>(rng: &mut R, curve: &StructureCurve, skew_coefficients: bool) -> FieldAlong {
    let k = curve.j0.nrows();
    let mut draw = || if skew_coefficients { skew(rng, k) } else { gaussian(rng, k, k) };
    FieldAlong {
        curve: curve.clone(),
        m: [draw(), draw(), draw()],
    }
}
