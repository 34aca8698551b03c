//! A field as a section of the twistor bundle and the split of its differential.

use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistor::acsfield::make_rotated_field;
use twistor::sample;
use twistor::spheregeo::ChartPoint;
use twistor::twistorsec::{
    adapted_generators, decomposition_residual, embed_section, lemma33_check, split, Differentiation,
};

fn main() -> twistor::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 2;
    let b0 = sample::orthogonal_structure(&mut rng, n).into_matrix();
    let gens = (0..2 * n).map(|_| sample::skew(&mut rng, 2 * n)).collect();
    let field = make_rotated_field(b0, gens, 0.5)?;
    let p = ChartPoint::from_slice(&[0.2, 0.7, -0.3, 0.0])?;

    let sv = embed_section(&field, &p)?;
    println!("|f^2 + I| = {:.1e}, |f + f^t| = {:.1e}", sv.membership_residual(), sv.skew_residual());
    let x = DVector::from_vec(vec![1.0, 0.0, -2.0, 0.5]);
    let s = split(&field, &p, &x)?;
    println!("|vertical| = {:.4}, |horizontal| = {:.4}", s.vertical.norm(), s.horizontal.norm());
    for mode in [Differentiation::default(), Differentiation::Analytic] {
        println!("decomposition residual ({mode:?}) {:.2e}", decomposition_residual(&field, &p, &x, mode)?);
    }
    println!("(f f_* X) e_-1 against BX: {:.2e}", lemma33_check(&field, &p, &x)?);
    let g = adapted_generators(&sv)?;
    println!("{} fiber and {} horizontal generators", g.alpha.len() + g.beta.len(), g.horizontal.len());
    Ok(())
}
