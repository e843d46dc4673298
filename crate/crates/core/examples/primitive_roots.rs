//! Least primes at which ω_a has the full order p − 1 or p + 1.
//!
//!     cargo run --example primitive_roots

use chebres::crypto::{is_chebyshev_square, primitive_root_search};

fn main() -> chebres::Result<()> {
    let show = |x: Option<u64>| x.map_or("-".to_string(), |p| p.to_string());
    println!(" a  p-1  p+1");
    for a in 2..=10 {
        let r = primitive_root_search(a, 10_000)?;
        let note = if is_chebyshev_square(a) {
            "  Chebyshev square"
        } else {
            ""
        };
        println!(
            "{a:2} {:>4} {:>4}{note}",
            show(r.least_p_minus),
            show(r.least_p_plus)
        );
    }
    Ok(())
}
