//! Lucas–Lehmer as a Chebyshev evaluation: s_k = 2T_{2^k}(2).
//!
//!     cargo run --release --example lucas_lehmer

use chebres::criteria::{lucas_lehmer, lucas_lehmer_run};
use chebres::primes::odd_primes;

fn main() -> chebres::Result<()> {
    let mut exponents = Vec::new();
    for p in odd_primes(700) {
        if lucas_lehmer(p)? {
            exponents.push(p);
        }
    }
    println!("2^p - 1 prime for p in {exponents:?}");
    let run = lucas_lehmer_run(11)?;
    println!(
        "p = 11: s_9 = {} = 2T_512(2) mod 2047",
        run.chebyshev_residue
    );
    Ok(())
}
