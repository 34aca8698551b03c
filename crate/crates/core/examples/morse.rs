//! Height function on the twistor fiber over the sphere: critical sets,
//! Hessians, gradient ascent and the Poincare polynomial.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistor::chartop::{
    critical_point, gradient_ascent, morse_hessian_spectrum, poincare_polynomial, random_state, AscentConfig,
};

fn main() -> twistor::Result<()> {
    let n = 2;
    for sign in [1.0, -1.0] {
        let s = morse_hessian_spectrum(&critical_point(n, sign, None)?)?;
        println!(
            "h = {:+.1}: horizontal eigenvalues {:?}, index {}, fiber {:.1e}",
            s.critical_value,
            s.horizontal.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>(),
            s.index,
            s.fiber_max
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..3 {
        let out = gradient_ascent(&random_state(&mut rng, n)?, &AscentConfig::default())?;
        println!("ascent {:.4} -> {:.9} in {} steps", out.initial_h, out.final_h, out.steps);
    }
    for k in 1..=4 {
        let p = poincare_polynomial(k)?;
        println!("P_t(n = {k}) = {:?}", p.coefficients());
    }
    Ok(())
}
