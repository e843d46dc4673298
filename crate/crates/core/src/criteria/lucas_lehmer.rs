use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invariant, usage, Result};
use crate::modarith::{cheb_t, Modulus};
use crate::primes;

/// Residues produced by one Lucas–Lehmer run on `M_p = 2^p − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LucasLehmerRun {
    pub p: u64,
    /// `s_{p−2} mod M_p` from `s₀ = 4, s_{k+1} = s_k² − 2`.
    #[serde(with = "crate::decimal")]
    pub residue: BigUint,
    /// `2·T_{2^{p−2}}(2) mod M_p`, which must equal `residue`.
    #[serde(with = "crate::decimal")]
    pub chebyshev_residue: BigUint,
    pub is_prime: bool,
}

/// Runs the iteration and the Chebyshev closed form side by side.
/// `p = 2` is answered directly (`M_2 = 3`); other `p` must be odd primes.
pub fn lucas_lehmer_run(p: u64) -> Result<LucasLehmerRun> {
    if p == 2 {
        return Ok(LucasLehmerRun {
            p,
            residue: BigUint::zero(),
            chebyshev_residue: BigUint::zero(),
            is_prime: true,
        });
    }
    if !primes::is_prime(p) {
        return Err(usage!("Lucas–Lehmer exponent must be prime, got {p}"));
    }
    let p32 = u32::try_from(p).map_err(|_| usage!("exponent {p} too large"))?;
    let mersenne = (BigUint::one() << p32) - 1u32;
    let two = BigUint::from(2u32);
    let mut s = BigUint::from(4u32) % &mersenne;
    for _ in 0..p - 2 {
        s = (&s * &s + &mersenne - &two) % &mersenne;
    }
    let modulus = Modulus::new(mersenne.clone())?;
    let t = cheb_t(&modulus.element(2), BigUint::one() << (p32 - 2));
    let chebyshev_residue = (t.value() * 2u32) % &mersenne;
    Ok(LucasLehmerRun {
        p,
        is_prime: s.is_zero(),
        residue: s,
        chebyshev_residue,
    })
}

/// Whether `M_p` is prime, failing if `s_{p−2} ≢ 2T_{2^{p−2}}(2)`.
pub fn lucas_lehmer(p: u64) -> Result<bool> {
    let run = lucas_lehmer_run(p)?;
    if run.residue != run.chebyshev_residue {
        return Err(invariant!(
            "s_(p-2) = {} but 2T_(2^(p-2))(2) = {} mod M_{p}",
            run.residue,
            run.chebyshev_residue
        ));
    }
    Ok(run.is_prime)
}
