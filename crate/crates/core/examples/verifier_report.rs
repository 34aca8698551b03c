//! Running a verifier check from code instead of the `verify` binary.

use twistor::verify::{run, Check, RunConfig};

fn main() -> twistor::Result<()> {
    let mut config = RunConfig::new(Check::Sphere);
    config.n = 2;
    config.samples = 5;
    let report = run(&config)?;
    print!("{}", report.to_text());
    println!("pass = {}, max residual {:.2e}", report.pass, report.max_residual);
    Ok(())
}
