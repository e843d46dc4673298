//! Chebyshev–Wieferich primes: U_{(p−ε)/2−1}(a) ≡ 0 mod p².
//!
//!     cargo run --release --example wieferich [limit]

use chebres::criteria::wieferich_search;

fn main() -> chebres::Result<()> {
    let limit = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000);
    for base in 2..=18 {
        let hits: Vec<String> = wieferich_search(base, limit)?
            .iter()
            .map(|h| h.p.to_string())
            .collect();
        println!(
            "{base:2} | {}",
            if hits.is_empty() {
                "-".into()
            } else {
                hits.join(", ")
            }
        );
    }
    Ok(())
}
