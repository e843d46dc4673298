//! The characters `ε(a) = ((a²−1)/p)`, `δ(a) = (2(a+1)/p)` and the
//! Chebyshev–Euler criterion built on them:
//!
//! ```text
//! T_{(p−ε)/2}(a) ≡ δ,   U_{(p−ε)/2−1}(a) ≡ 0        (mod p)
//! T_{(p+ε)/2}(a) ≡ δa,  U_{(p+ε)/2−1}(a) ≡ δε       (mod p)
//! ```
//!
//! for every odd prime `p` and `a ≢ ±1`. Submodules hold the searches derived
//! from it: Chebyshev–Wieferich primes, Chebyshev pseudoprimes, Lucas–Lehmer
//! and the taxi-cab characterization of 1729.

mod lucas_lehmer;
mod pseudoprime;
mod wieferich;

pub use lucas_lehmer::{lucas_lehmer, lucas_lehmer_run, LucasLehmerRun};
pub use pseudoprime::{
    full_pseudoprime_test, profile_is_consistent, pseudoprime_search, strong_profile,
    taxicab_search, weak_pseudoprime_test, PseudoprimeKind, PseudoprimeVerdict,
};
pub use wieferich::{wieferich_search, WieferichHit, WIEFERICH_LIMIT_CAP};

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{usage, Error, Result};
use crate::modarith::{cheb_eval, fast, Modulus};

/// The character values `(ε(a), δ(a))`, each in `{−1, 0, +1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharPair {
    pub eps: i8,
    pub delta: i8,
}

impl CharPair {
    pub const PLUS_PLUS: CharPair = CharPair { eps: 1, delta: 1 };
    pub const PLUS_MINUS: CharPair = CharPair { eps: 1, delta: -1 };
    pub const MINUS_PLUS: CharPair = CharPair { eps: -1, delta: 1 };
    pub const MINUS_MINUS: CharPair = CharPair { eps: -1, delta: -1 };

    /// The four nondegenerate cells in the order tables print them: `−−, −+, +−, ++`.
    pub const CELLS: [CharPair; 4] = [
        Self::MINUS_MINUS,
        Self::MINUS_PLUS,
        Self::PLUS_MINUS,
        Self::PLUS_PLUS,
    ];

    /// Two-character label such as `"+-"`; zeros print as `0`.
    pub fn label(&self) -> String {
        let c = |s: i8| match s {
            1 => '+',
            -1 => '-',
            _ => '0',
        };
        format!("{}{}", c(self.eps), c(self.delta))
    }

    pub fn is_degenerate(&self) -> bool {
        self.eps == 0 || self.delta == 0
    }
}

impl fmt::Display for CharPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub(crate) fn check_odd_modulus(p: u64, what: &str) -> Result<()> {
    if p < 3 || p % 2 == 0 {
        return Err(usage!("{what} must be odd and at least 3, got {p}"));
    }
    Ok(())
}

/// `a mod m` for a signed base.
#[inline]
pub(crate) fn reduce(a: i64, m: u64) -> u64 {
    fast::reduce_i128(a as i128, m)
}

/// `±1` as a canonical residue mod `m`.
#[inline]
pub(crate) fn sign_residue(s: i8, m: u64) -> u64 {
    match s {
        1 => 1 % m,
        -1 => m - 1,
        _ => 0,
    }
}

/// Characters of `a` modulo the odd number `p`. For composite `p` these are
/// Jacobi symbols, which is how the pseudoprime tests evaluate them.
pub fn characters(a: i64, p: u64) -> Result<CharPair> {
    check_odd_modulus(p, "modulus")?;
    let r = reduce(a, p);
    let disc = fast::sub_mod(fast::mul_mod(r, r, p), 1 % p, p);
    let two_a_plus_1 = fast::mul_mod(2, fast::add_mod(r, 1, p), p);
    Ok(CharPair {
        eps: fast::jacobi(disc, p),
        delta: fast::jacobi(two_a_plus_1, p),
    })
}

fn nondegenerate_characters(a: i64, p: u64) -> Result<CharPair> {
    let c = characters(a, p)?;
    if c.eps == 0 {
        return Err(Error::Degenerate(format!("a = {a} is ±1 mod {p} (ε = 0)")));
    }
    Ok(c)
}

/// `(p − ε)/2`, computed without overflow.
#[inline]
pub(crate) fn half_index(p: u64, eps: i8) -> u64 {
    ((p as i128 - eps as i128) / 2) as u64
}

/// Outcome of evaluating all four congruences of the criterion at one `(a, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerRelations {
    pub chars: CharPair,
    /// `k = (p − ε)/2`
    pub k: u64,
    pub t_at_k: u64,
    /// `T_k(a) ≡ δ`
    pub t_half: bool,
    /// `U_{k−1}(a) ≡ 0`
    pub u_half: bool,
    /// `T_{(p+ε)/2}(a) ≡ δa`
    pub t_next: bool,
    /// `U_{(p+ε)/2−1}(a) ≡ δε`
    pub u_next: bool,
}

impl EulerRelations {
    pub fn all_hold(&self) -> bool {
        self.t_half && self.u_half && self.t_next && self.u_next
    }
}

/// Evaluates both halves of the criterion mod `p`.
pub fn euler_relations(a: i64, p: u64) -> Result<EulerRelations> {
    let chars = nondegenerate_characters(a, p)?;
    let r = reduce(a, p);
    let k = half_index(p, chars.eps);
    let k_next = ((p as i128 + chars.eps as i128) / 2) as u64;
    let (t, u) = fast::cheb_eval(r, k, p);
    let (t2, u2) = fast::cheb_eval(r, k_next, p);
    let delta = sign_residue(chars.delta, p);
    Ok(EulerRelations {
        chars,
        k,
        t_at_k: t,
        t_half: t == delta,
        u_half: u == 0,
        t_next: t2 == fast::mul_mod(delta, r, p),
        u_next: u2 == sign_residue(chars.delta * chars.eps, p),
    })
}

/// `T_{(p−ε)/2}(a) ≡ δ` and `U_{(p−ε)/2−1}(a) ≡ 0 (mod p)`. Always true when `p` is prime.
pub fn euler_test(a: i64, p: u64) -> Result<bool> {
    let chars = nondegenerate_characters(a, p)?;
    let (t, u) = fast::cheb_eval(reduce(a, p), half_index(p, chars.eps), p);
    Ok(t == sign_residue(chars.delta, p) && u == 0)
}

/// `T_{(p−ε)/2}(a) ≡ δ (mod p²)`, which every prime satisfies.
pub fn euler_test_modp2(a: i64, p: u64) -> Result<bool> {
    let chars = nondegenerate_characters(a, p)?;
    let p2 = BigUint::from(p) * p;
    let modulus = Modulus::new(p2.clone())?;
    let pair = cheb_eval(&modulus.element(a), half_index(p, chars.eps));
    let delta = if chars.delta == 1 {
        BigUint::from(1u32)
    } else {
        p2 - 1u32
    };
    Ok(pair.t.value() == &delta)
}

/// `U_{(p−ε)/2−1}(a) mod p²`, the quantity the Wieferich condition inspects.
pub fn u_half_mod_p2(a: i64, p: u64) -> Result<BigUint> {
    let chars = nondegenerate_characters(a, p)?;
    let modulus = Modulus::new(BigUint::from(p) * p)?;
    Ok(cheb_eval(&modulus.element(a), half_index(p, chars.eps))
        .u
        .value()
        .clone())
}

pub(crate) fn to_i64(v: u64) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| usage!("{v} exceeds the signed 64-bit range used for profiles"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn characters_at_zero() {
        for p in crate::primes::odd_primes(200) {
            let c = characters(0, p).unwrap();
            assert_eq!(c.eps, fast::jacobi_i128(-1, p));
            assert_eq!(c.delta, fast::jacobi(2, p));
        }
    }

    #[test]
    fn characters_examples() {
        assert_eq!(characters(19, 23).unwrap(), CharPair::MINUS_MINUS);
        let c = characters(1, 23).unwrap();
        assert_eq!(c.eps, 0);
        assert_ne!(c.delta, 0);
        let c = characters(-1, 23).unwrap();
        assert_eq!((c.eps, c.delta), (0, 0));
        assert!(characters(3, 8).is_err());
        assert!(characters(3, 1).is_err());
    }

    #[test]
    fn euler_examples() {
        assert!(euler_test(19, 23).unwrap());
        let rel = euler_relations(19, 23).unwrap();
        assert_eq!(rel.k, 12);
        assert_eq!(rel.t_at_k, 22);
        assert!(rel.all_hold());
        assert!(matches!(euler_test(24, 23), Err(Error::Degenerate(_))));
        assert!(matches!(euler_test(22, 23), Err(Error::Degenerate(_))));
    }

    #[test]
    fn modp2_examples() {
        assert!(euler_test_modp2(2, 103).unwrap());
        assert_eq!(u_half_mod_p2(2, 103).unwrap(), BigUint::from(0u32));
        // p = 3, a = 0: ε = −1, k = 2, T_2(0) = −1 = δ(0) = (2/3)
        assert!(euler_test_modp2(0, 3).unwrap());
    }

    #[test]
    fn euler_criterion_has_no_false_negatives_below_2000() {
        for p in crate::primes::odd_primes(2000) {
            for a in 0..p as i64 {
                match euler_relations(a, p) {
                    Ok(rel) => assert!(rel.all_hold(), "a={a} p={p}: {rel:?}"),
                    Err(Error::Degenerate(_)) => assert!(a == 1 || a == p as i64 - 1),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn composite_modulus_is_not_rejected_by_characters() {
        // Jacobi generalization: (ε, δ) are defined for odd composites too
        let c = characters(2, 989).unwrap();
        assert!(!c.is_degenerate());
    }
}
