use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::{check_odd_prime, ord};
use crate::error::{invariant, usage, Result};
use crate::modarith::fast;
use crate::poly::IntPolynomial;
use crate::primes;

/// `Φ_d(x)` over ℤ, from `xᵈ − 1 = ∏_{e | d} Φ_e(x)`.
pub fn cyclotomic(d: u64) -> Result<IntPolynomial> {
    if d == 0 {
        return Err(usage!("cyclotomic index must be positive"));
    }
    let divs = primes::divisors(d);
    let mut table: HashMap<u64, IntPolynomial> = HashMap::with_capacity(divs.len());
    for &e in &divs {
        let x_e_minus_1 = &IntPolynomial::monomial(1, e as usize) - &IntPolynomial::constant(1);
        let mut denom = IntPolynomial::constant(1);
        for &f in divs.iter().take_while(|&&f| f < e).filter(|&&f| e % f == 0) {
            denom = &denom * &table[&f];
        }
        table.insert(e, x_e_minus_1.div_exact(&denom)?);
    }
    Ok(table.remove(&d).expect("d divides itself"))
}

/// `Φ_d⁺(y)` for `d ≥ 3`, the minimal polynomial of `2cos(2π/d)`: writes the
/// palindromic `Φ_d(x)/x^{φ(d)/2}` in the basis `x^k + x^{−k}`.
pub fn real_cyclotomic(d: u64) -> Result<IntPolynomial> {
    if d < 3 {
        return Err(usage!("real cyclotomic index must be at least 3, got {d}"));
    }
    let phi = cyclotomic(d)?;
    let h = (primes::euler_phi(d) / 2) as usize;
    if (0..=h).any(|k| phi.coeff(h - k) != phi.coeff(h + k)) {
        return Err(invariant!("Φ_{d} is not palindromic"));
    }
    // D_k(y) = x^k + x^{−k} with y = x + 1/x
    let y = IntPolynomial::x();
    let mut out = IntPolynomial::constant(phi.coeff(h));
    let mut prev = IntPolynomial::constant(2);
    let mut cur = y.clone();
    for k in 1..=h {
        out = &out + &cur.scale(&phi.coeff(h + k));
        let next = &(&y * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(out)
}

/// The factor `Ψ_d` of `T_n(x) − 1`: `x − 1`, `2(x + 1)`, then `Φ_d⁺(2x)²`.
pub fn psi(d: u64) -> Result<IntPolynomial> {
    match d {
        0 => Err(usage!("Ψ index must be positive")),
        1 => Ok(IntPolynomial::from_i64s(&[-1, 1])),
        2 => Ok(IntPolynomial::from_i64s(&[2, 2])),
        _ => {
            let f = real_cyclotomic(d)?.rescale_argument(&BigInt::from(2));
            Ok(&f * &f)
        }
    }
}

/// `(d, Ψ_d)` for every divisor `d` of `n`, ascending.
pub fn cyclotomic_factorization(n: u64) -> Result<Vec<(u64, IntPolynomial)>> {
    if n == 0 {
        return Err(usage!("factorization index must be positive"));
    }
    primes::divisors(n)
        .into_iter()
        .map(|d| Ok((d, psi(d)?)))
        .collect()
}

/// Whether `∏_{d | n} Ψ_d(x)` equals `T_n(x) − 1` exactly.
pub fn cyclotomic_factorization_check(n: u64) -> Result<bool> {
    let factors = cyclotomic_factorization(n)?;
    let product = factors
        .iter()
        .fold(IntPolynomial::constant(1), |acc, (_, f)| &acc * f);
    let target = &IntPolynomial::chebyshev_t(n as usize) - &IntPolynomial::constant(1);
    Ok(product == target)
}

/// Roots of `Φ_d⁺(2x)` mod `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub d: u64,
    pub p: u64,
    pub degree: u64,
    pub roots: Vec<u64>,
    /// `φ(d)/2` distinct roots.
    pub splits: bool,
}

/// Finds the roots of `Φ_d⁺(2x)` by scanning `[0, p)`. For `p ∤ d` also
/// checks that the polynomial splits exactly when `d | p ± 1`, with roots of
/// order `d`; for `p | d` only the linear cases `(d, p) = (3, 3), (6, 3)` split.
pub fn splitting(d: u64, p: u64) -> Result<Splitting> {
    check_odd_prime(p)?;
    let f = real_cyclotomic(d)?.rescale_argument(&BigInt::from(2));
    let coeffs = f.reduce_mod(p);
    let roots: Vec<u64> = (0..p)
        .filter(|&x| {
            coeffs.iter().rev().fold(0u64, |acc, &c| {
                fast::add_mod(fast::mul_mod(acc, x, p), c, p)
            }) == 0
        })
        .collect();
    let degree = primes::euler_phi(d) / 2;
    let splits = roots.len() as u64 == degree;
    let divides = (p - 1) % d == 0 || (p + 1) % d == 0;
    if d % p == 0 {
        return Ok(Splitting {
            d,
            p,
            degree,
            roots,
            splits,
        });
    }
    if splits != divides {
        return Err(invariant!(
            "Φ_{d}⁺(2x) mod {p}: {} roots of {degree}, yet d | p ± 1 is {divides}",
            roots.len()
        ));
    }
    if splits {
        for &r in &roots {
            let o = ord(r, p)?;
            if o != d {
                return Err(invariant!("root {r} of Φ_{d}⁺(2x) mod {p} has order {o}"));
            }
        }
    }
    Ok(Splitting {
        d,
        p,
        degree,
        roots,
        splits,
    })
}

pub fn splitting_check(d: u64, p: u64) -> Result<bool> {
    Ok(splitting(d, p)?.splits)
}
