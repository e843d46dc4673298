//! The Chebyshev analogue of Euler's criterion, checked mod p and mod p².
//!
//!     cargo run --example euler_criterion

use chebres::criteria::{characters, euler_relations, euler_test, euler_test_modp2};

fn main() -> chebres::Result<()> {
    let p = 23;
    println!(" a  eps delta  T_k(a)  all four hold");
    for a in [0, 2, 3, 4, 6, 8, 19] {
        let r = euler_relations(a, p)?;
        println!(
            "{a:2}  {:3} {:5}  {:6}  {}",
            r.chars.eps,
            r.chars.delta,
            r.t_at_k,
            r.all_hold()
        );
    }

    let total: usize = (5..200u64)
        .filter(|&p| chebres::primes::is_prime(p))
        .map(|p| {
            (2..p - 1)
                .filter(|&a| euler_test_modp2(a as i64, p).unwrap())
                .count()
        })
        .sum();
    println!("T_(p-eps)/2(a) = delta mod p^2 held for {total} pairs with p < 200");

    // composites usually fail; characters become Jacobi symbols
    let c = characters(2, 91)?;
    println!(
        "n = 91, a = 2: eps={} delta={} passes: {}",
        c.eps,
        c.delta,
        euler_test(2, 91)?
    );
    Ok(())
}
