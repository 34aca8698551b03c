//! The structure `J~X = AX` is parallel for the projected connection: the
//! finite-difference residual decays like `h^2`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistor::matcore::{jtilde_apply, kaehler_convergence, tangent_project, ComplexStructure};
use twistor::sample;

fn main() -> twistor::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let a = sample::complex_structure(&mut rng, 2);
    let x = tangent_project(&a, &sample::gaussian(&mut rng, 4, 4))?;
    let jx = jtilde_apply(&a, &x)?;
    let jjx = jtilde_apply(&a, &jx)?;
    println!("|J~J~X + X| = {:.1e}", (jjx.matrix() + x.matrix()).norm());

    for (label, curve) in [
        ("orthogonal", sample::orthogonal_curve(&mut rng, 2)),
        ("general", sample::structure_curve(&mut rng, 2)),
    ] {
        let field = sample::field_along(&mut rng, &curve, label == "orthogonal");
        let steps = [1e-2, 5e-3, 2.5e-3, 1.25e-3];
        let st = kaehler_convergence(|s| curve.at(s), |s| field.at(s), 0.0, &steps, 1e-8)?;
        println!("{label} curve");
        for (h, r) in st.steps.iter().zip(&st.residuals) {
            println!("  h = {h:.2e}  residual = {r:.3e}");
        }
        println!("  order {:.3}, extrapolated {:.2e}", st.order, st.extrapolated);
    }
    println!("standard J0 for n = 2:\n{}", ComplexStructure::standard(2)?.matrix());
    Ok(())
}
