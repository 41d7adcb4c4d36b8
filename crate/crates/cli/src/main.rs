use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use urtetrad::C64;
use urtetrad_cli::commands::{self, ElementInput, FockQuery, OperatorName, TetradKind};
use urtetrad_cli::verify::{self, Suite, VerifyConfig};
use urtetrad_cli::{json, CliError};

#[derive(Parser)]
#[command(
    name = "urtetrad",
    version,
    about = "Spinor dyads, tetrads and the quantized ur-tetrad"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the null or real tetrad of a U(2) element.
    #[command(allow_negative_numbers = true)]
    #[command(group(ArgGroup::new("element").required(true).args(["a", "quat"])))]
    #[command(group(ArgGroup::new("kind").args(["null", "real"])))]
    Tetrad {
        /// Real and imaginary part of a.
        #[arg(long, num_args = 2, value_names = ["RE", "IM"], requires = "b")]
        a: Option<Vec<f64>>,
        /// Real and imaginary part of b.
        #[arg(long, num_args = 2, value_names = ["RE", "IM"], requires = "a")]
        b: Option<Vec<f64>>,
        /// Point (w, x, y, z) of the unit three-sphere.
        #[arg(long, num_args = 4, value_names = ["W", "X", "Y", "Z"], conflicts_with_all = ["a", "b"])]
        quat: Option<Vec<f64>>,
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Null tetrad (l, l*, m, n). The default.
        #[arg(long)]
        null: bool,
        /// Real tetrad (t, z, x, y).
        #[arg(long)]
        real: bool,
    },
    /// Run seeded verification sweeps and print a report.
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance for algebraic identities.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Total-quanta cutoff for the Fock suite.
        #[arg(long, default_value_t = 4)]
        cutoff: usize,
    },
    /// Inspect an operator of the quantized tetrad.
    #[command(allow_negative_numbers = true)]
    #[command(group(ArgGroup::new("query").required(true).args(["matrix", "expect_coherent"])))]
    Fock {
        #[arg(long)]
        cutoff: usize,
        /// t0, z1..z3, x1..x3, y1..y3, or `tau R S`.
        #[arg(long, num_args = 1..=3, value_names = ["NAME", "R S"], required = true)]
        op: Vec<String>,
        /// Print the sparse matrix as triplets in basis order.
        #[arg(long)]
        matrix: bool,
        /// Expectation in a coherent state built from (a, b, phi) and scaled by SCALE.
        #[arg(long, num_args = 6, value_names = ["A_RE", "A_IM", "B_RE", "B_IM", "PHI", "SCALE"])]
        expect_coherent: Option<Vec<f64>>,
    },
    /// Evaluate the linear expansion law R(T) = R(0) + c T.
    #[command(allow_negative_numbers = true)]
    Cosmos {
        #[arg(long)]
        r0: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        epoch: f64,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Tetrad {
            a,
            b,
            quat,
            phi,
            null: _,
            real,
        } => {
            let input = match (a, b, quat) {
                (Some(a), Some(b), None) => ElementInput::Complex {
                    a: C64::new(a[0], a[1]),
                    b: C64::new(b[0], b[1]),
                    phi,
                },
                (None, None, Some(q)) => ElementInput::Quaternion {
                    q: [q[0], q[1], q[2], q[3]],
                    phi,
                },
                _ => return Err(CliError::Usage("give either --a and --b, or --quat".into())),
            };
            let kind = if real {
                TetradKind::Real
            } else {
                TetradKind::Null
            };
            commands::tetrad(&input, kind)
        }
        Command::Verify {
            samples,
            seed,
            tol,
            suite,
            cutoff,
        } => {
            if !(tol.is_finite() && tol >= 0.0) {
                return Err(CliError::Usage(format!("bad tolerance {tol}")));
            }
            let cfg = VerifyConfig {
                samples: samples as usize,
                seed,
                tolerance: tol,
                suite,
                cutoff,
            };
            let report = verify::run(&cfg);
            let text = json::to_string(&report);
            if report.pass {
                Ok(text)
            } else {
                emit(&text);
                let failed: Vec<&str> = report
                    .records
                    .iter()
                    .filter(|r| !r.pass)
                    .map(|r| r.name.as_str())
                    .collect();
                Err(CliError::Failure(format!("failed: {}", failed.join(", "))))
            }
        }
        Command::Fock {
            cutoff,
            op,
            matrix: _,
            expect_coherent,
        } => {
            let op = OperatorName::parse(&op)?;
            let query = match expect_coherent {
                Some(p) => FockQuery::ExpectCoherent {
                    a: C64::new(p[0], p[1]),
                    b: C64::new(p[2], p[3]),
                    phi: p[4],
                    scale: p[5],
                },
                None => FockQuery::Matrix,
            };
            commands::fock(cutoff, op, query)
        }
        Command::Cosmos { r0, c, epoch } => commands::cosmos(r0, c, epoch),
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("urtetrad: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
