//! Powers of ω_a = a + √(a²−1) as pairs (T_n(a), U_{n−1}(a)).
//!
//!     cargo run --example evaluate

use chebres::modarith::{cheb_eval, cheb_eval_matrix, fast, Modulus};

fn main() -> chebres::Result<()> {
    let m = Modulus::new(23u32)?;
    let a = m.element(19);
    println!("powers of ω_19 mod 23:");
    for n in 1..=24u32 {
        let w = cheb_eval(&a, n);
        print!(
            "[{},{}]{}",
            w.t.value(),
            w.u.value(),
            if n % 12 == 0 { "\n" } else { " " }
        );
    }

    // every power has norm T² − (a²−1)U² = 1
    let w = cheb_eval(&a, 1_000_000u32);
    println!("norm of ω_19^1000000: {}", w.norm().value());
    assert_eq!(cheb_eval_matrix(&a, 1_000_000u32), w);

    // a 1024-bit exponent against a Mersenne modulus
    let big = Modulus::new((num_bigint::BigUint::from(1u32) << 521) - 1u32)?;
    let n = num_bigint::BigUint::from(3u32).pow(600);
    let t = cheb_eval(&big.element(5), n).t;
    println!("T_(3^600)(5) mod 2^521 - 1 has {} bits", t.value().bits());

    println!(
        "word-sized path: T_12(19) mod 23 = {}",
        fast::cheb_t(19, 12, 23)
    );
    Ok(())
}
