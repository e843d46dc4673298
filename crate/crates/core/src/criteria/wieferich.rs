use rayon::prelude::*;
use serde::Serialize;

use super::{half_index, reduce};
use crate::error::{usage, Error, Result};
use crate::modarith::fast;
use crate::primes;

/// Searches stop short of `2³²` so that `p²` stays a machine word.
pub const WIEFERICH_LIMIT_CAP: u64 = 1 << 32;

/// A prime with `U_{(p−ε)/2−1}(a) ≡ 0 (mod p²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WieferichHit {
    pub p: u64,
    pub base: i64,
    pub u_mod_p2: u64,
}

/// Chebyshev–Wieferich primes `p ≤ limit` to the given base, ascending.
///
/// Primes dividing `a(a²−1)` are skipped: the criterion is only stated for
/// `a ≢ 0, ±1 (mod p)`.
pub fn wieferich_search(base: i64, limit: u64) -> Result<Vec<WieferichHit>> {
    if matches!(base, -1..=1) {
        return Err(usage!("Wieferich base must not be 0 or ±1, got {base}"));
    }
    if limit >= WIEFERICH_LIMIT_CAP {
        return Err(Error::Resource(format!(
            "Wieferich limit {limit} must stay below 2^32"
        )));
    }
    let hits = primes::odd_primes(limit)
        .into_par_iter()
        .filter_map(|p| {
            let r = reduce(base, p);
            if r == 0 || r == 1 || r == p - 1 {
                return None;
            }
            let disc = fast::sub_mod(fast::mul_mod(r, r, p), 1, p);
            let eps = fast::jacobi(disc, p);
            let m = p * p;
            let (_, u) = fast::cheb_eval(reduce(base, m), half_index(p, eps), m);
            (u == 0).then_some(WieferichHit {
                p,
                base,
                u_mod_p2: u,
            })
        })
        .collect();
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(base: i64, limit: u64) -> Vec<u64> {
        wieferich_search(base, limit)
            .unwrap()
            .into_iter()
            .map(|h| h.p)
            .collect()
    }

    #[test]
    fn table_rows() {
        assert_eq!(ps(13, 100), vec![5, 43, 71]);
        assert_eq!(ps(2, 10_000), vec![103]);
        assert_eq!(ps(8, 100_000), Vec::<u64>::new());
    }

    #[test]
    fn rejects_trivial_bases() {
        for b in [-1, 0, 1] {
            assert!(wieferich_search(b, 100).is_err());
        }
        assert!(ps(2, 2).is_empty());
    }

    #[test]
    fn agrees_with_bigint_route() {
        for p in ps(5, 1000) {
            assert_eq!(super::super::u_half_mod_p2(5, p).unwrap(), 0u32.into());
        }
    }
}
