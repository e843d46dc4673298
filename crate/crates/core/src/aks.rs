//! Polynomial congruences behind a Chebyshev analogue of AKS:
//! `T_n(x) ≡ xⁿ (mod n)` and `T_n(x + a) ≡ T_n(x) + a (mod n)` for prime `n`,
//! the closed form of the coefficients of `T_n`, and the binomial step
//! `C(n−p−1, p−1) ≡ 1 (mod p)` used to show composites fail.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{invariant, usage, Error, Result};
use crate::modarith::fast;
use crate::primes;

/// Largest degree for which `T_n` is expanded densely.
pub const AKS_DEGREE_LIMIT: u64 = 10_000;

/// Polynomial with coefficients in `ℤ/m`, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPolynomial {
    coeffs: Vec<u64>,
    modulus: u64,
}

impl ModPolynomial {
    pub fn new(mut coeffs: Vec<u64>, modulus: u64) -> Self {
        for c in &mut coeffs {
            *c %= modulus;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolynomial { coeffs, modulus }
    }

    /// `xᵏ`
    pub fn monomial(k: usize, modulus: u64) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Self::new(coeffs, modulus)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `p(x + a)`, by Horner's rule on the coefficient vector.
    pub fn shift(&self, a: u64) -> ModPolynomial {
        let m = self.modulus;
        let a = a % m;
        let mut out: Vec<u64> = Vec::with_capacity(self.coeffs.len());
        for &c in self.coeffs.iter().rev() {
            // out ← out·(x + a) + c
            out.push(0);
            for i in (1..out.len()).rev() {
                out[i] = fast::add_mod(out[i - 1], fast::mul_mod(out[i], a, m), m);
            }
            out[0] = fast::add_mod(fast::mul_mod(out[0], a, m), c, m);
        }
        ModPolynomial::new(out, m)
    }

    /// Adds a constant.
    pub fn add_constant(&self, c: u64) -> ModPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        coeffs[0] = fast::add_mod(coeffs[0], c % self.modulus, self.modulus);
        ModPolynomial::new(coeffs, self.modulus)
    }
}

impl fmt::Debug for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPolynomial({:?} mod {})", self.coeffs, self.modulus)
    }
}

/// `T_n(x)` with coefficients reduced mod `m`, from `T_{k+1} = 2x·T_k − T_{k−1}`.
pub fn chebyshev_poly_mod(n: u64, m: u64) -> Result<ModPolynomial> {
    if m < 2 {
        return Err(usage!("modulus must be at least 2, got {m}"));
    }
    if n > AKS_DEGREE_LIMIT {
        return Err(Error::Resource(format!(
            "T_n is expanded only for n ≤ {AKS_DEGREE_LIMIT}, got {n}"
        )));
    }
    let n = n as usize;
    let mut prev = vec![1 % m];
    if n == 0 {
        return Ok(ModPolynomial::new(prev, m));
    }
    let mut cur = vec![0, 1 % m];
    for _ in 1..n {
        let mut next = vec![0u64; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] = fast::mul_mod(2, c, m);
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] = fast::sub_mod(next[i], c, m);
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(ModPolynomial::new(cur, m))
}

/// `T_n(x) ≡ xⁿ (mod n)`. `n = 2` counts as prime although the literal
/// congruence fails there (`T₂ = 2x² − 1 ≡ 1`).
pub fn prime_iff_power_check(n: u64) -> Result<bool> {
    if n < 2 {
        return Err(usage!("n must be at least 2, got {n}"));
    }
    if n == 2 {
        return Ok(true);
    }
    let t = chebyshev_poly_mod(n, n)?;
    Ok(t == ModPolynomial::monomial(n as usize, n))
}

/// `T_n(x + a) ≡ T_n(x) + a (mod n)`, evaluated literally.
pub fn shifted_congruence_check(n: u64, a: i64) -> Result<bool> {
    if n < 2 {
        return Err(usage!("n must be at least 2, got {n}"));
    }
    let r = fast::reduce_i128(a as i128, n);
    let g = primes::gcd_u64(r, n);
    if g != 1 {
        return Err(Error::Precondition(format!("gcd({a}, {n}) = {g}")));
    }
    let t = chebyshev_poly_mod(n, n)?;
    Ok(t.shift(r) == t.add_constant(r))
}

fn check_coefficient_range(n: u64, k: u64) -> Result<()> {
    if k < 1 || k > n / 2 {
        return Err(usage!(
            "coefficient index must satisfy 1 ≤ k ≤ ⌊n/2⌋, got n = {n}, k = {k}"
        ));
    }
    Ok(())
}

fn signed(k: u64, magnitude: BigUint) -> BigInt {
    let v = BigInt::from(magnitude);
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

/// The coefficient `a_k` of `x^{n−2k}` in `T_n(x)`, from
/// `a_k = (−1)^k·C(n−k−1, k−1)·(n/k)·2^{n−2k−1}`. Errors if the quotient is
/// not an integer.
pub fn coefficient_formula(n: u64, k: u64) -> Result<BigInt> {
    check_coefficient_range(n, k)?;
    let mut num = primes::binomial(n - k - 1, k - 1) * n;
    let mut den = BigUint::from(k);
    if n == 2 * k {
        den *= 2u32;
    } else {
        num <<= n - 2 * k - 1;
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(invariant!("a_{k} of T_{n} is not an integer"));
    }
    Ok(signed(k, q))
}

/// The same coefficient as `(−1)^k Σ_t C(n, 2t)·C(t, k)`.
pub fn coefficient_double_sum(n: u64, k: u64) -> Result<BigInt> {
    check_coefficient_range(n, k)?;
    let sum: BigUint = (k..=n / 2)
        .map(|t| primes::binomial(n, 2 * t) * primes::binomial(t, k))
        .sum();
    Ok(signed(k, sum))
}

/// Both sides of the binomial step for `p | n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LucasStep {
    pub n: u64,
    pub p: u64,
    /// `C(n−p−1, p−1) mod p`
    pub binomial_mod_p: u64,
    /// Lowest base-`p` digit of `n − p − 1`.
    pub low_digit: u64,
}

impl LucasStep {
    pub fn holds(&self) -> bool {
        self.binomial_mod_p == 1 && self.low_digit == self.p - 1
    }
}

/// `C(n−p−1, p−1) mod p` computed exactly, with the low base-`p` digit of
/// `n − p − 1` alongside.
pub fn lucas_step(n: u64, p: u64) -> Result<LucasStep> {
    if !primes::is_prime(p) || n % p != 0 {
        return Err(usage!("{p} is not a prime divisor of {n}"));
    }
    if n % 2 == 0 || n / p < 3 {
        return Err(usage!("need n = ap with a ≥ 3 odd, got n = {n}, p = {p}"));
    }
    let m = n - p - 1;
    let binomial_mod_p = (primes::binomial(m, p - 1) % p)
        .to_u64()
        .expect("reduced below p");
    Ok(LucasStep {
        n,
        p,
        binomial_mod_p,
        low_digit: m % p,
    })
}

pub fn lucas_step_check(n: u64, p: u64) -> Result<bool> {
    Ok(lucas_step(n, p)?.holds())
}

/// `a_0 = 2^{n−1}`, the leading coefficient of `T_n` for `n ≥ 1`.
pub fn leading_coefficient(n: u64) -> BigInt {
    BigInt::one() << (n - 1)
}
