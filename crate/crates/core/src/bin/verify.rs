use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use twistor::verify::{run, Check, OutputFormat, RunConfig};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckArg {
    Kaehler,
    Retract,
    Sphere,
    Nijenhuis,
    Section,
    Holomorphy,
    Morse,
    Index,
    Poincare,
    All,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Kaehler => Check::Kaehler,
            CheckArg::Retract => Check::Retract,
            CheckArg::Sphere => Check::Sphere,
            CheckArg::Nijenhuis => Check::Nijenhuis,
            CheckArg::Section => Check::Section,
            CheckArg::Holomorphy => Check::Holomorphy,
            CheckArg::Morse => Check::Morse,
            CheckArg::Index => Check::Index,
            CheckArg::Poincare => Check::Poincare,
            CheckArg::All => Check::All,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

/// Numerical and exact checks for twistor spaces of complex structures.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    check: CheckArg,
    /// Half the real dimension of the sphere `S^{2n}`.
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Override the check's pass tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Override the check's step size.
    #[arg(long)]
    h: Option<f64>,
    #[arg(long, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        check: cli.check.into(),
        n: cli.n,
        seed: cli.seed,
        samples: cli.samples,
        tol: cli.tol,
        h: cli.h,
        output: match cli.output {
            OutputArg::Text => OutputFormat::Text,
            OutputArg::Json => OutputFormat::Json,
        },
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match config.output {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Text => report.to_text(),
    };
    // a closed pipe downstream is not an error of the check
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    eprintln!("wall time {:.3}s", report.wall_time.as_secs_f64());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
