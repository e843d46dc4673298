//! The `chebres` command line. Every subcommand renders as a table, as
//! line-delimited JSON records or as CSV.

mod commands;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::{BigInt, BigUint};

use crate::criteria::PseudoprimeKind;
use crate::error::{Error, Result};
pub use output::{OutputFormat, Report};

#[derive(Debug, Parser)]
#[command(
    name = "chebres",
    version,
    about = "Chebyshev polynomials over residue rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Seed for randomized choices such as key-exchange secrets.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// T_n(a) and U_{n-1}(a) mod m.
    Eval {
        #[arg(short, allow_negative_numbers = true)]
        a: BigInt,
        #[arg(short)]
        n: BigUint,
        #[arg(short)]
        m: BigUint,
    },
    /// The characters eps = ((a^2-1)/p) and delta = (2(a+1)/p).
    Characters {
        #[arg(short, allow_negative_numbers = true)]
        a: i64,
        #[arg(short)]
        p: u64,
    },
    /// The four Euler congruences at (a, p).
    Euler {
        #[arg(short, allow_negative_numbers = true)]
        a: i64,
        #[arg(short)]
        p: u64,
        /// Also check T_{(p-eps)/2}(a) = delta mod p^2.
        #[arg(long = "mod-p2")]
        mod_p2: bool,
    },
    /// The sets A_{eps delta} partitioning R_p.
    Partition {
        #[arg(short)]
        p: u64,
    },
    /// The order classes I_d of R_p.
    Orders {
        #[arg(short)]
        p: u64,
    },
    /// Roots of Phi_d^+(2x) mod p.
    Splitting {
        #[arg(short)]
        d: u64,
        #[arg(short)]
        p: u64,
    },
    /// T_n(x) - 1 as a product of the factors Psi_d.
    CycloCheck {
        #[arg(short)]
        n: u64,
    },
    /// Odd composites up to the limit passing a Chebyshev test.
    Pseudoprimes {
        #[arg(long, allow_negative_numbers = true)]
        base: i64,
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value = "full")]
        kind: PseudoprimeKind,
    },
    /// Chebyshev-Wieferich primes up to the limit.
    Wieferich {
        #[arg(long, allow_negative_numbers = true)]
        base: i64,
        #[arg(long)]
        limit: u64,
    },
    /// Lucas-Lehmer test of 2^p - 1, with its Chebyshev closed form.
    LucasLehmer {
        #[arg(short)]
        p: u64,
    },
    /// Least odd composite n with n | 2^n - 2 and n | T_n(2) - 2.
    Taxicab {
        #[arg(long)]
        limit: u64,
    },
    /// Exponential sums over the four cells of R_p.
    Expsum {
        #[arg(short)]
        p: u64,
    },
    /// Cell sum magnitudes for every prime 5 <= p <= max.
    ExpsumSweep {
        #[arg(long)]
        max: u64,
    },
    /// Least primes where a has Chebyshev order p - 1 and p + 1.
    Primroot {
        #[arg(short, allow_negative_numbers = true)]
        a: i64,
        #[arg(long)]
        limit: u64,
    },
    /// Chebyshev Diffie-Hellman, in process or over TCP.
    DhDemo {
        #[arg(short)]
        p: BigUint,
        #[arg(short)]
        g: BigUint,
        /// Alice's secret, or this side's secret over TCP.
        #[arg(long = "secret-a")]
        secret_a: Option<BigUint>,
        #[arg(long = "secret-b")]
        secret_b: Option<BigUint>,
        /// Wait for one peer on HOST:PORT.
        #[arg(long, conflicts_with = "connect")]
        listen: Option<String>,
        /// Exchange with a listening peer at HOST:PORT.
        #[arg(long)]
        connect: Option<String>,
    },
    /// Least n >= 1 with T_n(g) = t mod p.
    Dlog {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        g: u64,
        #[arg(short)]
        t: u64,
    },
    /// T_n(x) = x^n mod n, or T_n(x + a) = T_n(x) + a mod n with --shift.
    AksCheck {
        #[arg(short)]
        n: u64,
        #[arg(long, allow_negative_numbers = true)]
        shift: Option<i64>,
    },
    /// The coefficient of x^(n-2k) in T_n(x).
    Coeff {
        #[arg(short)]
        n: u64,
        #[arg(short)]
        k: u64,
    },
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let result = execute(&cli).and_then(|report| {
        for w in &report.warnings {
            writeln!(err, "warning: {w}")?;
        }
        report.write(cli.format, out)
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => 2,
        _ => 1,
    }
}

/// Runs the parsed command inside a pool of `--threads` workers.
pub fn execute(cli: &Cli) -> Result<Report> {
    match cli.threads {
        None => commands::dispatch(cli),
        Some(0) => Err(Error::Usage("--threads must be at least 1".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Resource(e.to_string()))?
            .install(|| commands::dispatch(cli)),
    }
}
