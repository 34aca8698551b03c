//! Serializing a field and rebuilding it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistor::acsfield::{make_rotated_field, FieldSpec};
use twistor::sample;

fn main() -> twistor::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let b0 = sample::orthogonal_structure(&mut rng, 1).into_matrix();
    let gens = (0..2).map(|_| sample::skew(&mut rng, 2)).collect();
    let field = make_rotated_field(b0, gens, 0.5)?;
    let json = field.spec().expect("rotated fields serialize").to_json();
    println!("{json}");
    let back = FieldSpec::from_json(&json)?.build()?;
    let y = sample::chart_coords(&mut rng, 2, 1.0);
    println!("rebuilt field agrees: {}", back.value(&y) == field.value(&y));
    Ok(())
}
