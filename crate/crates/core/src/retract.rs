//! Deformation retraction of `J(R^{2n})` onto the orthogonal structures.
//!
//! Every `A` with `A^2 = -I` splits as `A = A1 + A2` (skew plus symmetric) and
//! the skew part has the polar form `A1 = BP` with `B` an orthogonal complex
//! structure and `P = (I + A2^2)^{1/2}`. Scaling the symmetric part,
//! `A(t) = B (I + t^2 A2^2)^{1/2} + t A2`, stays inside `J(R^{2n})` and runs
//! from `B` at `t = 0` to `A` at `t = 1`.

use nalgebra::{DMatrix, Dyn, SymmetricEigen};

use crate::error::{Error, Result};
use crate::linalg::{frobenius, skew_part, sym_apply, sym_part};
use crate::matcore::{ComplexStructure, DEFAULT_TOL};

#[derive(Debug, Clone)]
pub struct RetractDecomposition {
    /// Skew part `(A - A^t)/2`.
    pub a1: DMatrix<f64>,
    /// Symmetric part `(A + A^t)/2`.
    pub a2: DMatrix<f64>,
    /// Orthogonal polar factor of `A1`.
    pub b: ComplexStructure,
    /// Positive factor `(I + A2^2)^{1/2}`.
    pub p: DMatrix<f64>,
    /// Eigenvalues of `A2`, ascending.
    pub lambda: Vec<f64>,
    eig: SymmetricEigen<f64, Dyn>,
    original: DMatrix<f64>,
    tol: f64,
}

/// Residuals of every identity the decomposition is supposed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecompositionResiduals {
    pub sum: f64,
    pub skew_a1: f64,
    pub sym_a2: f64,
    pub squares: f64,
    pub anticommute_parts: f64,
    pub polar: f64,
    pub commute_bp: f64,
    pub commute_pa2: f64,
    pub anticommute_ba2: f64,
    pub b_square: f64,
    pub b_orthogonal: f64,
    pub p_sqrt: f64,
    /// `max_i |λ_i + λ_{k-1-i}|` over the ascending spectrum.
    pub spectral_symmetry: f64,
    pub p_min_eigenvalue: f64,
}

impl DecompositionResiduals {
    /// Largest residual, excluding the eigenvalue bound.
    pub fn max(&self) -> f64 {
        [
            self.sum,
            self.skew_a1,
            self.sym_a2,
            self.squares,
            self.anticommute_parts,
            self.polar,
            self.commute_bp,
            self.commute_pa2,
            self.anticommute_ba2,
            self.b_square,
            self.b_orthogonal,
            self.p_sqrt,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Splits `A` into `B P + A2` using the symmetric eigendecomposition of `A2`.
pub fn decompose(a: &ComplexStructure) -> Result<RetractDecomposition> {
    decompose_with_tol(a, DEFAULT_TOL)
}

pub fn decompose_with_tol(a: &ComplexStructure, tol: f64) -> Result<RetractDecomposition> {
    let residual = a.membership_residual();
    if !(residual <= tol) {
        return Err(Error::NotComplexStructure { residual });
    }
    let m = a.matrix();
    let a1 = skew_part(m);
    let a2 = sym_part(m);
    let eig = a2.clone().symmetric_eigen();
    let p = sym_apply(&eig, |l| (1.0 + l * l).sqrt());
    let p_inv = sym_apply(&eig, |l| 1.0 / (1.0 + l * l).sqrt());
    if p_inv.iter().any(|v| !v.is_finite()) {
        return Err(Error::Singular);
    }
    let b = ComplexStructure::new(&a1 * p_inv, tol).map_err(|_| Error::Singular)?;
    let mut lambda: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    lambda.sort_by(f64::total_cmp);
    Ok(RetractDecomposition {
        a1,
        a2,
        b,
        p,
        lambda,
        eig,
        original: m.clone(),
        tol,
    })
}

impl RetractDecomposition {
    pub fn residuals(&self) -> DecompositionResiduals {
        let k = self.a1.nrows();
        let id = DMatrix::<f64>::identity(k, k);
        let b = self.b.matrix();
        let (a1, a2, p) = (&self.a1, &self.a2, &self.p);
        let spectral_symmetry = (0..k)
            .map(|i| (self.lambda[i] + self.lambda[k - 1 - i]).abs())
            .fold(0.0, f64::max);
        let p_min_eigenvalue = p.clone().symmetric_eigen().eigenvalues.min();
        DecompositionResiduals {
            sum: frobenius(&(a1 + a2 - &self.original)),
            skew_a1: frobenius(&(a1 + a1.transpose())),
            sym_a2: frobenius(&(a2 - a2.transpose())),
            squares: frobenius(&(a1 * a1 + a2 * a2 + &id)),
            anticommute_parts: frobenius(&(a1 * a2 + a2 * a1)),
            polar: frobenius(&(b * p - a1)),
            commute_bp: frobenius(&(b * p - p * b)),
            commute_pa2: frobenius(&(p * a2 - a2 * p)),
            anticommute_ba2: frobenius(&(b * a2 + a2 * b)),
            b_square: frobenius(&(b * b + &id)),
            b_orthogonal: frobenius(&(b * b.transpose() - &id)),
            p_sqrt: frobenius(&(p * p + a1 * a1)),
            spectral_symmetry,
            p_min_eigenvalue,
        }
    }

    /// `A(t) = B (I + t^2 A2^2)^{1/2} + t A2` for `t ∈ [0, 1]`.
    pub fn at(&self, t: f64) -> Result<ComplexStructure> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfRange {
                name: "t",
                value: t,
                range: "[0, 1]",
            });
        }
        let pt = sym_apply(&self.eig, |l| (1.0 + t * t * l * l).sqrt());
        let m = self.b.matrix() * pt + &self.a2 * t;
        ComplexStructure::new(m, self.tol)
    }
}

/// Point `A(t)` on the retraction path of `a`.
pub fn path(a: &ComplexStructure, t: f64) -> Result<ComplexStructure> {
    decompose(a)?.at(t)
}

/// Polar factor `M (M^t M)^{-1/2}` of a nonsingular skew matrix; an
/// orthogonal complex structure, equal to `M` when `M` already is one.
pub fn retract_to_orthogonal(m: &DMatrix<f64>) -> Result<ComplexStructure> {
    retract_to_orthogonal_with_tol(m, DEFAULT_TOL)
}

pub fn retract_to_orthogonal_with_tol(m: &DMatrix<f64>, tol: f64) -> Result<ComplexStructure> {
    crate::matcore::check_square_even(m)?;
    let scale = m.norm().max(1.0);
    let residual = frobenius(&(m + m.transpose()));
    if !(residual <= tol * scale) {
        return Err(Error::NotSkew { residual });
    }
    let gram = m.transpose() * m;
    let eig = gram.symmetric_eigen();
    let (lo, hi) = (eig.eigenvalues.min(), eig.eigenvalues.max());
    if !(lo > hi * 1e-24) || hi == 0.0 {
        return Err(Error::Singular);
    }
    let mut b = m * sym_apply(&eig, |mu| 1.0 / mu.sqrt());
    // the eigen route loses accuracy like cond(M)^2; Newton steps
    // B <- (B + B^{-t})/2 converge quadratically to the same polar factor
    let d = b.nrows();
    for _ in 0..4 {
        if frobenius(&(b.transpose() * &b - DMatrix::identity(d, d))) <= 1e-14 {
            break;
        }
        let Some(inv) = b.clone().try_inverse() else { break };
        b = (&b + inv.transpose()) * 0.5;
    }
    ComplexStructure::orthogonal(skew_part(&b), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn worked_example() -> ComplexStructure {
        ComplexStructure::from_matrix(DMatrix::from_row_slice(2, 2, &[0.0, -2.0, 0.5, 0.0])).unwrap()
    }

    #[test]
    fn orthogonal_input_is_fixed() {
        let j0 = ComplexStructure::standard(3).unwrap();
        let d = decompose(&j0).unwrap();
        assert_eq!(d.a2.norm(), 0.0);
        assert!((&d.p - DMatrix::<f64>::identity(6, 6)).norm() < 1e-15);
        assert!((d.b.matrix() - j0.matrix()).norm() < 1e-15);
    }

    #[test]
    fn two_by_two_example() {
        let d = decompose(&worked_example()).unwrap();
        let close = |m: &DMatrix<f64>, e: &[f64]| (m - DMatrix::from_row_slice(2, 2, e)).norm() < 1e-12;
        assert!(close(&d.a1, &[0.0, -1.25, 1.25, 0.0]));
        assert!(close(&d.a2, &[0.0, -0.75, -0.75, 0.0]));
        assert!(close(&d.p, &[1.25, 0.0, 0.0, 1.25]));
        assert!(close(d.b.matrix(), &[0.0, -1.0, 1.0, 0.0]));
        assert!((d.lambda[0] + 0.75).abs() < 1e-15 && (d.lambda[1] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn two_by_two_midpoint() {
        let d = decompose(&worked_example()).unwrap();
        let half = d.at(0.5).unwrap();
        let s = 73f64.sqrt() / 8.0;
        let expected = DMatrix::from_row_slice(2, 2, &[0.0, -s - 0.375, s - 0.375, 0.0]);
        assert!((half.matrix() - expected).norm() < 1e-12);
        assert!(half.membership_residual() <= 1e-12);
    }

    #[test]
    fn path_endpoints() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = sample::complex_structure(&mut rng, 4);
        let d = decompose(&a).unwrap();
        assert!((d.at(1.0).unwrap().matrix() - a.matrix()).norm() < 1e-10);
        let b = d.at(0.0).unwrap();
        assert!(b.is_orthogonal());
        assert!(matches!(d.at(1.5), Err(Error::OutOfRange { .. })));
        assert!(d.residuals().max() < 1e-9);
        assert!(d.residuals().spectral_symmetry < 1e-8);
    }

    #[test]
    fn polar_retraction_cases() {
        let j0 = ComplexStructure::standard(2).unwrap();
        let r = retract_to_orthogonal(j0.matrix()).unwrap();
        assert!((r.matrix() - j0.matrix()).norm() < 1e-15);
        let r2 = retract_to_orthogonal(&(j0.matrix() * 2.0)).unwrap();
        assert!((r2.matrix() - j0.matrix()).norm() < 1e-14);
        assert_eq!(retract_to_orthogonal(&DMatrix::zeros(4, 4)).unwrap_err(), Error::Singular);
        assert!(matches!(
            retract_to_orthogonal(&DMatrix::identity(4, 4)),
            Err(Error::NotSkew { .. })
        ));
    }

    #[test]
    fn polar_retraction_is_first_order_along_geodesics() {
        // Geodesic through A with velocity X: exp(sAX/2) A exp(-sAX/2).
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let a = sample::orthogonal_structure(&mut rng, 3);
        let x = sample::skew_tangent(&mut rng, &a);
        let x = x.matrix() / x.matrix().norm();
        let w = a.matrix() * &x * 0.5;
        let mut errs = vec![];
        for s in [1e-2, 1e-3] {
            let geo = (&w * s).exp() * a.matrix() * (&w * -s).exp();
            let r = retract_to_orthogonal(&(a.matrix() + &x * s)).unwrap();
            errs.push((r.matrix() - geo).norm());
        }
        assert!(errs[0] < 1e-3 && errs[1] < 1e-5);
        assert!(errs[0] / errs[1] > 50.0);
    }
}
