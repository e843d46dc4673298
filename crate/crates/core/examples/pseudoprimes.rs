//! Weak, full and strong Chebyshev pseudoprimes to base 2, and the least
//! number that fools both Fermat and the weak test.
//!
//!     cargo run --release --example pseudoprimes

use chebres::criteria::{pseudoprime_search, strong_profile, taxicab_search, PseudoprimeKind};
use chebres::primes::format_factorization;

fn main() -> chebres::Result<()> {
    let limit = 20_000;
    let weak = pseudoprime_search(2, limit, PseudoprimeKind::Weak)?;
    println!("{} weak pseudoprimes below {limit}", weak.len());

    for v in pseudoprime_search(2, limit, PseudoprimeKind::Full)? {
        let s = strong_profile(v.n, 2)?;
        println!(
            "{:6} = {:10} {:32} strong: {}",
            v.n,
            format_factorization(v.n),
            s.profile_string(),
            if s.passed { "pass" } else { "fail" }
        );
    }

    if let Some(n) = taxicab_search(100_000) {
        println!(
            "least Fermat and weak Chebyshev pseudoprime: {n} = {}",
            format_factorization(n)
        );
    }
    Ok(())
}
