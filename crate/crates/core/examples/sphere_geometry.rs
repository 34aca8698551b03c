//! Stereographic chart of the round sphere: frame, connection and curvature.

use nalgebra::DVector;
use twistor::spheregeo::{connection_coefficients, curvature, embed, sectional_curvature, ChartPoint};

fn main() -> twistor::Result<()> {
    let p = ChartPoint::from_slice(&[0.5, -0.2, 1.0, 0.3])?;
    let frame = embed(&p);
    println!("y = {:?}, conformal factor {:.4}", p.coords().as_slice(), p.conformal_factor());
    println!("sigma(y) = {:?}", frame.e0.as_slice());
    println!("frame orthonormality residual {:.1e}", frame.orthonormality_residual());
    println!("Gamma_(1,2)^k = {:?}", connection_coefficients(&p, 1, 2)?.as_slice());
    println!("R(e1, e2) e2 = {:?}", curvature(&p, 1, 2, 2)?.as_slice());
    let u = DVector::from_vec(vec![1.0, 2.0, 0.0, -1.0]);
    let v = DVector::from_vec(vec![0.0, 1.0, 3.0, 1.0]);
    println!("K(u, v) = {:.8}", sectional_curvature(&p, &u, &v)?);
    Ok(())
}
