//! Torsion of almost complex structures on the sphere chart.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistor::acsfield::{
    integrability_residual, make_constant_field, make_rotated_field, nijenhuis_direct, nijenhuis_formula,
    ResidualForm,
};
use twistor::sample;
use twistor::spheregeo::ChartPoint;

fn main() -> twistor::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let n = 2;
    let b0 = sample::orthogonal_structure(&mut rng, n).into_matrix();
    let gens = (0..2 * n).map(|_| sample::skew(&mut rng, 2 * n)).collect();
    let rotated = make_rotated_field(b0.clone(), gens, 1.0)?;
    let constant = make_constant_field(b0)?;
    let p = ChartPoint::from_slice(&[0.3, -0.4, 0.1, 0.8])?;

    for (name, f) in [("constant", &constant), ("rotated", &rotated)] {
        println!("{name} field");
        for (i, j) in [(1, 2), (1, 3), (2, 4)] {
            let direct = nijenhuis_direct(f, &p, i, j)?;
            let formula = nijenhuis_formula(f, &p, i, j)?;
            let general = integrability_residual(f, &p, i, j, ResidualForm::General)?;
            let orthogonal = integrability_residual(f, &p, i, j, ResidualForm::Orthogonal)?;
            println!(
                "  N(e{i}, e{j}): |N| = {:.4}, direct-formula gap {:.1e}, residual forms {:.4} / {:.4}",
                formula.norm(),
                (direct - &formula).amax(),
                general.norm(),
                orthogonal.norm()
            );
        }
    }
    Ok(())
}
