//! Paired sweep: a section is holomorphic exactly where its structure is
//! orthogonal and torsion-free.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistor::twistorsec::{equivalence_sweep, SweepConfig};

fn main() -> twistor::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 1..=3 {
        let report = equivalence_sweep(&mut rng, &SweepConfig::new(n, 60))?;
        println!(
            "n = {n}: {} samples, {} mismatches, {} redrawn",
            report.samples.len(),
            report.mismatches,
            report.redrawn
        );
        for s in report.samples.iter().take(3) {
            println!(
                "  {:?}: holomorphy {:.2e}, |B + B^t| {:.2e}, max|N| {:.2e}",
                s.kind, s.holomorphy, s.orthogonality_defect, s.nijenhuis
            );
        }
    }
    Ok(())
}
