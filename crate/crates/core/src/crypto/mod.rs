//! Chebyshev primitive roots and squares, a Diffie–Hellman exchange built on
//! `T_a(T_b(g)) = T_{ab}(g) = T_b(T_a(g))`, and a brute-force discrete log.

pub mod net;
pub mod wire;

use num_bigint::{BigUint, RandBigInt};
use num_integer::Roots;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{usage, Error, Result};
use crate::modarith::{cheb_t, fast, Modulus};
use crate::primes;
use crate::structure::ord;

pub use wire::DhMessage;

/// Brute-force discrete logs refuse primes above this.
pub const DLOG_LIMIT: u64 = 1_000_000;

/// `a = T₂(x) = 2x² − 1` for some integer `x ≥ 0`.
pub fn is_chebyshev_square(a: i64) -> bool {
    let b = a as i128 + 1;
    if b < 0 || b % 2 != 0 {
        return false;
    }
    let h = (b / 2) as u128;
    let r = h.sqrt();
    r * r == h
}

/// Least primes at which `ω_a` has order `p − 1` and `p + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveRootReport {
    pub a: i64,
    pub least_p_minus: Option<u64>,
    pub least_p_plus: Option<u64>,
    pub chebyshev_square: bool,
}

/// Scans odd primes `p ≤ limit` in ascending order, skipping `p | a² − 1`,
/// until both orders `p − 1` and `p + 1` have been seen.
pub fn primitive_root_search(a: i64, limit: u64) -> Result<PrimitiveRootReport> {
    if matches!(a, -1..=1) {
        return Err(usage!("primitive root base must not be 0 or ±1, got {a}"));
    }
    let mut report = PrimitiveRootReport {
        a,
        least_p_minus: None,
        least_p_plus: None,
        chebyshev_square: is_chebyshev_square(a),
    };
    for p in primes::odd_primes(limit) {
        let r = fast::reduce_i128(a as i128, p);
        if r == 1 || r == p - 1 {
            continue;
        }
        let d = ord(r, p)?;
        if d == p - 1 && report.least_p_minus.is_none() {
            report.least_p_minus = Some(p);
        }
        if d == p + 1 && report.least_p_plus.is_none() {
            report.least_p_plus = Some(p);
        }
        if report.least_p_minus.is_some() && report.least_p_plus.is_some() {
            break;
        }
    }
    Ok(report)
}

/// Least `g ≥ 2` in `R_p` whose order is the full `p − ε(g)`.
pub fn chebyshev_primitive_root(p: u64) -> Result<u64> {
    crate::structure::ResidueDomain::new(p)?;
    for g in 2..p - 1 {
        let disc = fast::sub_mod(fast::mul_mod(g, g, p), 1, p);
        let full = (p as i128 - fast::jacobi(disc, p) as i128) as u64;
        if ord(g, p)? == full {
            return Ok(g);
        }
    }
    Err(Error::Invariant(format!(
        "no Chebyshev primitive root mod {p}"
    )))
}

/// One side of the exchange. Each protocol step returns a new value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DhParty {
    #[serde(with = "crate::decimal")]
    pub p: BigUint,
    #[serde(with = "crate::decimal")]
    pub g: BigUint,
    #[serde(skip)]
    secret: BigUint,
    #[serde(with = "crate::decimal")]
    pub sent: BigUint,
    #[serde(with = "crate::decimal::option")]
    pub received: Option<BigUint>,
    #[serde(with = "crate::decimal::option")]
    pub shared: Option<BigUint>,
}

impl DhParty {
    pub fn secret(&self) -> &BigUint {
        &self.secret
    }

    /// The public part of this party, ready for the wire.
    pub fn message(&self) -> DhMessage {
        DhMessage {
            p: self.p.clone(),
            g: self.g.clone(),
            sent: self.sent.clone(),
        }
    }
}

/// Publishes `T_secret(g) mod p`. `p` must be an odd (probable) prime and
/// `g ∈ R_p`.
pub fn dh_keygen(p: &BigUint, g: &BigUint, secret: &BigUint) -> Result<DhParty> {
    if p < &BigUint::from(5u32) || !primes::is_probable_prime(p) {
        return Err(usage!("DH modulus must be an odd prime ≥ 5, got {p}"));
    }
    if g >= p || g == &BigUint::from(1u32) || g == &(p - 1u32) {
        return Err(usage!("DH base must lie in R_p, got {g}"));
    }
    if secret.is_zero() {
        return Err(usage!("DH secret must be positive"));
    }
    let modulus = Modulus::new(p.clone())?;
    let sent = cheb_t(&modulus.element(g.clone()), secret.clone())
        .value()
        .clone();
    Ok(DhParty {
        p: p.clone(),
        g: g.clone(),
        secret: secret.clone(),
        sent,
        received: None,
        shared: None,
    })
}

/// Takes the peer's value and derives `T_secret(peer) mod p`.
pub fn dh_finish(party: &DhParty, peer_value: &BigUint) -> Result<DhParty> {
    if party.shared.is_some() {
        return Err(Error::Protocol("exchange already finished".into()));
    }
    if peer_value >= &party.p {
        return Err(Error::Protocol(format!(
            "peer value {peer_value} is not below p = {}",
            party.p
        )));
    }
    let modulus = Modulus::new(party.p.clone())?;
    let shared = cheb_t(&modulus.element(peer_value.clone()), party.secret.clone());
    Ok(DhParty {
        received: Some(peer_value.clone()),
        shared: Some(shared.value().clone()),
        ..party.clone()
    })
}

/// A secret drawn uniformly from `[2, p − 1)`.
pub fn random_secret<R: Rng + ?Sized>(rng: &mut R, p: &BigUint) -> BigUint {
    rng.gen_biguint_range(&BigUint::from(2u32), &(p - 1u32))
}

/// Both sides of an in-process exchange.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DhTranscript {
    pub alice: DhParty,
    pub bob: DhParty,
    /// The two wire frames, Alice's first.
    pub frames: [String; 2],
}

impl DhTranscript {
    pub fn agreed(&self) -> bool {
        self.alice.shared.is_some() && self.alice.shared == self.bob.shared
    }
}

/// Runs both parties, passing every message through the wire encoding.
pub fn dh_demo(
    p: &BigUint,
    g: &BigUint,
    secret_a: &BigUint,
    secret_b: &BigUint,
) -> Result<DhTranscript> {
    let alice = dh_keygen(p, g, secret_a)?;
    let bob = dh_keygen(p, g, secret_b)?;
    let frames = [alice.message().encode(), bob.message().encode()];
    let to_bob = DhMessage::decode(&frames[0])?;
    let to_alice = DhMessage::decode(&frames[1])?;
    let bob = net::accept_message(&bob, &to_bob)?;
    let alice = net::accept_message(&alice, &to_alice)?;
    Ok(DhTranscript { alice, bob, frames })
}

/// Least `n ≥ 1` with `T_n(g) ≡ target (mod p)`, walking the recurrence for
/// one period of `g`.
pub fn discrete_log_bruteforce(p: u64, g: u64, target: u64) -> Result<Option<u64>> {
    if p > DLOG_LIMIT {
        return Err(Error::Resource(format!(
            "brute-force discrete log is capped at p ≤ {DLOG_LIMIT}, got {p}"
        )));
    }
    if target >= p {
        return Err(usage!("target {target} is not a residue mod {p}"));
    }
    let period = ord(g, p)?;
    let two_g = fast::add_mod(g, g, p);
    let (mut prev, mut cur) = (1u64, g);
    for n in 1..=period {
        if cur == target {
            return Ok(Some(n));
        }
        let next = fast::sub_mod(fast::mul_mod(two_g, cur, p), prev, p);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(None)
}
