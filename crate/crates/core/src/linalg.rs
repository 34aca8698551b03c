//! Small dense helpers shared by the geometry modules.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

pub fn frobenius(m: &DMatrix<f64>) -> f64 {
    m.norm()
}

pub fn skew_part(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m - m.transpose()) * 0.5
}

pub fn sym_part(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

/// `|M^2 + I|_F`.
pub fn square_plus_identity(m: &DMatrix<f64>) -> f64 {
    let k = m.nrows();
    frobenius(&(m * m + DMatrix::identity(k, k)))
}

/// Applies a scalar function to a symmetric matrix through its eigendecomposition.
pub fn sym_apply(
    eig: &SymmetricEigen<f64, nalgebra::Dyn>,
    f: impl Fn(f64) -> f64,
) -> DMatrix<f64> {
    let v = &eig.eigenvectors;
    let d = DVector::from_iterator(eig.eigenvalues.len(), eig.eigenvalues.iter().map(|&l| f(l)));
    v * DMatrix::from_diagonal(&d) * v.transpose()
}

/// Outer product `a b^t`.
pub fn outer(a: &DVector<f64>, b: &DVector<f64>) -> DMatrix<f64> {
    a * b.transpose()
}

/// Fréchet derivative of the matrix exponential at `g` in direction `e`,
/// read off the upper-right block of `exp([[g, e], [0, g]])`.
pub fn exp_directional(g: &DMatrix<f64>, e: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let k = g.nrows();
    let mut big = DMatrix::zeros(2 * k, 2 * k);
    big.view_mut((0, 0), (k, k)).copy_from(g);
    big.view_mut((k, k), (k, k)).copy_from(g);
    big.view_mut((0, k), (k, k)).copy_from(e);
    let ex = big.exp();
    (
        ex.view((0, 0), (k, k)).into_owned(),
        ex.view((0, k), (k, k)).into_owned(),
    )
}
