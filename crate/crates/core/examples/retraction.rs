//! Polar retraction of a complex structure onto the orthogonal ones.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistor::matcore::ComplexStructure;
use twistor::retract::{decompose, retract_to_orthogonal};
use twistor::sample;

fn main() -> twistor::Result<()> {
    let a = ComplexStructure::from_matrix(DMatrix::from_row_slice(2, 2, &[0.0, -2.0, 0.5, 0.0]))?;
    let d = decompose(&a)?;
    println!("A = {}", a.matrix());
    println!("B = {}", d.b.matrix());
    println!("P = {}", d.p);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = sample::complex_structure(&mut rng, 3);
    let d = decompose(&a)?;
    println!("random 6x6: largest identity residual {:.2e}", d.residuals().max());
    println!("spectrum of A2: {:?}", d.lambda.iter().map(|l| format!("{l:.3}")).collect::<Vec<_>>());
    for k in 0..=4 {
        let t = k as f64 / 4.0;
        let at = d.at(t)?;
        println!(
            "t = {t:.2}: |A(t)^2 + I| = {:.1e}, |A(t) + A(t)^t| = {:.3}",
            at.membership_residual(),
            (at.matrix() + at.matrix().transpose()).norm()
        );
    }
    let b = retract_to_orthogonal(a.matrix())?;
    println!("retraction is orthogonal: {}", b.is_orthogonal());
    Ok(())
}
