//! Exact characteristic numbers that rule out almost complex structures on spheres.

use twistor::chartop::{chern_character_coefficient, dolbeault_index_s4, newton_chern_identity, signature_index};

fn main() -> twistor::Result<()> {
    for n in 1..=6 {
        println!(
            "n = {n}: p_n = {} e_n, ch_n = {} c_n",
            newton_chern_identity(n)?,
            chern_character_coefficient(n)?
        );
    }
    for n in 2..=8 {
        let v = signature_index(n)?;
        println!("S^{}: index {} ({})", 2 * n, v.value, if v.integral { "integral" } else { "not integral" });
    }
    println!("Dolbeault index on S^4: {}", dolbeault_index_s4().value);
    Ok(())
}
