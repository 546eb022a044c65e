//! Command-line front end for the dual-space pipeline.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use numdual::gcorner::Strategy;
use numdual::input::{parse_point, parse_system};
use numdual::order::Tiebreak;
use numdual::pipeline::{dualinfo_run, RunOptions};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum StrategyArg {
    Sylvester,
    Mourrain,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OrderArg {
    /// Anti-graded lexicographic.
    Alex,
    /// Anti-graded reverse lexicographic.
    Arevlex,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

/// Numerically characterizes a polynomial ideal localized at a point:
/// truncated dual basis, g-corners, Hilbert function and polynomial,
/// regularity bound, local dimension, and optionally a standard basis.
#[derive(Parser, Debug)]
#[command(name = "dualinfo", version)]
struct Args {
    /// System description file ('-' reads stdin).
    input: PathBuf,

    /// Override the point from the file (comma-separated coordinates,
    /// complex expressions allowed).
    #[arg(long)]
    point: Option<String>,

    /// Override the tolerance from the file.
    #[arg(long)]
    tolerance: Option<f64>,

    /// Dual-space strategy per degree.
    #[arg(long, value_enum, default_value = "mourrain")]
    strategy: StrategyArg,

    /// Also recover a reduced standard basis.
    #[arg(long = "standard-basis")]
    standard_basis: bool,

    /// Hard cap on the search degree (reported as truncated when hit).
    #[arg(long = "max-degree")]
    max_degree: Option<u32>,

    /// Monomial order tie-break.
    #[arg(long, value_enum)]
    order: Option<OrderArg>,

    /// Use the sharper pairwise-lcm stopping bound.
    #[arg(long = "tighter-stop")]
    tighter_stop: bool,

    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
}

fn main() -> ExitCode {
    let args = Args::parse();

    let text = if args.input.as_os_str() == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("error: cannot read stdin: {}", e);
            return ExitCode::from(2);
        }
        buf
    } else {
        match std::fs::read_to_string(&args.input) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {}", args.input.display(), e);
                return ExitCode::from(2);
            }
        }
    };

    let mut spec = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };

    if let Some(point) = &args.point {
        match parse_point(point) {
            Ok(p) if p.len() == spec.variables.len() => spec.point = p,
            Ok(p) => {
                eprintln!(
                    "error: point has {} coordinates but there are {} variables",
                    p.len(),
                    spec.variables.len()
                );
                return ExitCode::from(2);
            }
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
        }
    }
    if let Some(tol) = args.tolerance {
        if !(tol > 0.0) {
            eprintln!("error: tolerance must be positive");
            return ExitCode::from(2);
        }
        spec.tolerance = tol;
    }
    if let Some(order) = args.order {
        spec.tiebreak = match order {
            OrderArg::Alex => Tiebreak::Lex,
            OrderArg::Arevlex => Tiebreak::RevLex,
        };
    }
    if args.max_degree.is_some() {
        spec.max_degree_override = args.max_degree;
    }

    let options = RunOptions {
        strategy: match args.strategy {
            StrategyArg::Sylvester => Strategy::SylvesterArray,
            StrategyArg::Mourrain => Strategy::MourrainHomogeneous,
        },
        standard_basis: args.standard_basis,
        tighter_stop: args.tighter_stop,
    };

    match dualinfo_run(&spec, &options) {
        Ok(report) => {
            match args.output {
                OutputArg::Text => print!("{}", report.to_text()),
                OutputArg::Json => println!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
