//! Polynomial congruences that characterise primes, and the coefficients
//! of T_n that witness compositeness.
//!
//!     cargo run --release --example aks

use chebres::aks::{
    coefficient_formula, lucas_step, prime_iff_power_check, shifted_congruence_check,
};
use chebres::primes::{factorize, is_prime};

fn main() -> chebres::Result<()> {
    let passing: Vec<u64> = (3..200)
        .step_by(2)
        .filter(|&n| prime_iff_power_check(n).unwrap())
        .collect();
    println!("T_n(x) = x^n mod n for odd n < 200: {passing:?}");
    assert!(passing.iter().all(|&n| is_prime(n)));

    for n in [13, 15, 21] {
        println!(
            "T_{n}(x+1) = T_{n}(x)+1 mod {n}: {}",
            shifted_congruence_check(n, 1)?
        );
    }

    let n = 45;
    for (p, _) in factorize(n) {
        let a_p = coefficient_formula(n, p)?;
        let s = lucas_step(n, p)?;
        println!(
            "n = {n}, p = {p}: a_p = {a_p}, C(n-p-1, p-1) mod p = {}",
            s.binomial_mod_p
        );
    }
    Ok(())
}
