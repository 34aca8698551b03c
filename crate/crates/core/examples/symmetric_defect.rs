//! The standard structure has `∇_{X_i} X_j + ∇_{X_j} X_i ≠ 0` away from the origin.

use twistor::acsfield::{covderiv10_formula, lebrun_symmetry_norm, make_constant_field};
use twistor::matcore::ComplexStructure;
use twistor::spheregeo::ChartPoint;

fn main() -> twistor::Result<()> {
    let field = make_constant_field(ComplexStructure::standard(3)?.into_matrix())?;
    let p = ChartPoint::from_slice(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0])?;
    let v = covderiv10_formula(&field, &p, 1, 1)?;
    println!("∇_X1 X1 = {:?} + i {:?}", v.re.as_slice(), v.im.as_slice());
    for (i, j) in [(1, 1), (1, 2), (1, 3), (3, 3)] {
        println!("({i}, {j}): {:.6}", lebrun_symmetry_norm(&field, &p, i, j)?);
    }
    Ok(())
}
