//! T_n(x) − 1 as a product of rescaled real cyclotomic polynomials, and
//! how those factors split mod p.
//!
//!     cargo run --example cyclotomic

use chebres::structure::{
    cyclotomic_factorization, cyclotomic_factorization_check, real_cyclotomic, splitting,
};

fn main() -> chebres::Result<()> {
    let n = 12;
    println!("T_{n}(x) - 1:");
    for (d, psi) in cyclotomic_factorization(n)? {
        println!("  Psi_{d} = {psi}");
    }
    println!("product matches: {}", cyclotomic_factorization_check(n)?);

    println!("Phi_24^+(x) = {}", real_cyclotomic(24)?);
    for d in [5, 8, 11, 24] {
        let s = splitting(d, 23)?;
        println!(
            "Phi_{d}^+(2x) mod 23 roots {:?} (degree {})",
            s.roots, s.degree
        );
    }
    Ok(())
}
