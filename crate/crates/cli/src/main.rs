//! `catlattice` command-line front end. JSON goes to stdout, diagnostics to
//! stderr; see `ExitCode` for the exit status contract.

mod commands;
mod scan;

use std::io::Write;
use std::process;

use clap::{Args, Parser, Subcommand};

use catlattice::Mat2Z;

/// Periodic orbits, zeta functions and local conjugacy of 2×2 integer matrices.
///
/// Matrices are written "a,b;c,d" (row-major) or as a JSON object
/// {"a":…,"b":…,"c":…,"d":…}.
#[derive(Parser, Debug)]
#[command(name = "catlattice", version, about)]
struct Cli {
    /// Largest modulus n for which all n² lattice points are enumerated.
    #[arg(long, global = true, env = "CATLATTICE_BUDGET", default_value_t = catlattice::lattice::DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// det, trace, mgcd, hyperbolicity and discriminant.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        matrix: Mat2Z,
    },
    /// Dynamical zeta function: closed form when known, and its Taylor series.
    Zeta {
        #[arg(allow_hyphen_values = true)]
        matrix: Mat2Z,
        /// Number of series coefficients after the constant term.
        #[arg(long, default_value_t = 10)]
        series: usize,
    },
    /// Orbit census of the matrix on the lattice L_n, one JSON line per n.
    Census {
        #[arg(allow_hyphen_values = true)]
        matrix: Mat2Z,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Local conjugacy of two matrices.
    Conj {
        #[arg(allow_hyphen_values = true)]
        a: Mat2Z,
        #[arg(allow_hyphen_values = true)]
        b: Mat2Z,
        /// Produce a certificate (or a non-existence witness) modulo N.
        #[arg(long, conflicts_with = "all_n_decision", required_unless_present = "all_n_decision")]
        n: Option<u64>,
        /// Decide conjugacy modulo every n ≥ 2 at once.
        #[arg(long)]
        all_n_decision: bool,
    },
    /// Elementary divisors of the group of fixed points of M^m.
    Group {
        #[arg(allow_hyphen_values = true)]
        matrix: Mat2Z,
        m: u64,
    },
    /// Censuses of several matrices over a range of moduli.
    ///
    /// Put options first and a `--` before matrices that start with a minus
    /// sign: `catlattice scan --range 2..9 -- "-1,1;1,0" "0,1;1,1"`.
    Scan {
        #[arg(required = true)]
        matrices: Vec<Mat2Z>,
        #[command(flatten)]
        scan: ScanArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct ScanArgs {
    /// Single modulus.
    #[arg(long, conflicts_with = "range", required_unless_present = "range")]
    n: Option<u64>,
    /// Inclusive range of moduli, e.g. 2..40.
    #[arg(long, value_parser = scan::parse_range)]
    range: Option<(u64, u64)>,
    /// Worker threads; output order does not depend on it.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// JSON-lines cache file; existing records are reused, new ones appended.
    #[arg(long)]
    cache: Option<std::path::PathBuf>,
    /// Emit CSV instead of JSON lines.
    #[arg(long)]
    csv: bool,
    /// Largest Z_n degree for which the polynomial is expanded in the output.
    #[arg(long, default_value_t = 4096)]
    poly_limit: u64,
}

impl ScanArgs {
    fn moduli(&self) -> Vec<u64> {
        match (self.n, self.range) {
            (Some(n), _) => vec![n],
            (None, Some((lo, hi))) => (lo..=hi).collect(),
            (None, None) => unreachable!("clap requires --n or --range"),
        }
    }
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Internal = 1,
    Parse = 2,
    Budget = 3,
    Precondition = 4,
}

#[derive(Debug)]
pub enum CliError {
    Lib(catlattice::Error),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        use catlattice::Error as E;
        match self {
            CliError::Lib(E::Parse(_)) => ExitCode::Parse,
            CliError::Lib(E::BudgetExceeded { .. }) => ExitCode::Budget,
            CliError::Lib(E::Verification(_)) | CliError::Io(_) => ExitCode::Internal,
            CliError::Lib(_) => ExitCode::Precondition,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<catlattice::Error> for CliError {
    fn from(e: catlattice::Error) -> Self {
        CliError::Lib(e)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { ExitCode::Parse as i32 } else { 0 };
            process::exit(code);
        }
    };
    let budget = catlattice::Budget::new(cli.budget);
    let one = |v: serde_json::Value| vec![v.to_string()];
    let result = match cli.command {
        Command::Invariants { matrix } => Ok(one(commands::invariants(&matrix))),
        Command::Zeta { matrix, series } => commands::zeta(&matrix, series).map(one),
        Command::Group { matrix, m } => commands::group(&matrix, m).map(one),
        Command::Conj { a, b, n, all_n_decision } => {
            if all_n_decision {
                Ok(one(commands::conj_all_n(&a, &b)))
            } else {
                commands::conj_mod(&a, &b, n.expect("clap enforces --n")).map(one)
            }
        }
        Command::Census { matrix, scan } => run_scan(&[matrix], &scan, budget, false),
        Command::Scan { matrices, scan } => run_scan(&matrices, &scan, budget, true),
    };
    match result {
        Ok(lines) => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
        }
        Err(e) => {
            eprintln!("catlattice: {e}");
            process::exit(e.exit_code() as i32);
        }
    }
}

fn run_scan(
    matrices: &[Mat2Z],
    args: &ScanArgs,
    budget: catlattice::Budget,
    with_matrix: bool,
) -> Result<Vec<String>, CliError> {
    let opts = scan::ScanOptions {
        moduli: args.moduli(),
        jobs: args.jobs.max(1),
        cache: args.cache.clone(),
        budget,
    };
    let records = scan::run(matrices, &opts)?;
    if args.csv {
        scan::to_csv(&records, with_matrix).map(|s| vec![s.trim_end().to_string()])
    } else {
        Ok(records.iter().map(|r| r.output_line(with_matrix, args.poly_limit)).collect())
    }
}
