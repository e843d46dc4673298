//! Weak, full and strong Chebyshev pseudoprime tests and range searches.
//!
//! * weak: `T_n(a) ≡ a (mod n)`
//! * full: both congruences of the Euler criterion hold mod `n`, with `ε`, `δ`
//!   taken as Jacobi symbols
//! * strong: full, and the 2-power profile `[T_{Q}, T_{2Q}, …, T_{(n−ε)/2}]`
//!   never shows a 1 after something other than ±1, nor a −1 after anything
//!   other than 0

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{characters, check_odd_modulus, half_index, reduce, sign_residue, to_i64};
use crate::error::{usage, Error, Result};
use crate::modarith::fast;
use crate::primes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PseudoprimeKind {
    Weak,
    Full,
    Strong,
}

impl fmt::Display for PseudoprimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PseudoprimeKind::Weak => "weak",
            PseudoprimeKind::Full => "full",
            PseudoprimeKind::Strong => "strong",
        })
    }
}

impl FromStr for PseudoprimeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(PseudoprimeKind::Weak),
            "full" => Ok(PseudoprimeKind::Full),
            "strong" => Ok(PseudoprimeKind::Strong),
            other => Err(usage!("unknown pseudoprime kind '{other}'")),
        }
    }
}

/// Result of one test. `profile` is nonempty exactly for the strong kind;
/// its entries are residues mod `n` except that `n − 1` is written `−1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoprimeVerdict {
    pub n: u64,
    pub base: i64,
    pub kind: PseudoprimeKind,
    pub passed: bool,
    pub profile: Vec<i64>,
}

impl PseudoprimeVerdict {
    /// Profile printed as `[9083,0,-1,1]`.
    pub fn profile_string(&self) -> String {
        let items: Vec<String> = self.profile.iter().map(i64::to_string).collect();
        format!("[{}]", items.join(","))
    }
}

/// `T_n(a) ≡ a (mod n)`.
pub fn weak_pseudoprime_test(n: u64, base: i64) -> Result<bool> {
    check_odd_modulus(n, "n")?;
    let r = reduce(base, n);
    Ok(fast::cheb_t(r, n, n) == r)
}

struct FullOutcome {
    eps: i8,
    passed: bool,
}

fn full_outcome(n: u64, base: i64) -> Result<FullOutcome> {
    check_odd_modulus(n, "n")?;
    let r = reduce(base, n);
    let disc = fast::sub_mod(fast::mul_mod(r, r, n), 1, n);
    let g = primes::gcd_u64(disc, n);
    if g != 1 {
        return Err(Error::Precondition(format!(
            "gcd({n}, a²−1) = {g} for a = {base}"
        )));
    }
    let chars = characters(base, n)?;
    let (t, u) = fast::cheb_eval(r, half_index(n, chars.eps), n);
    Ok(FullOutcome {
        eps: chars.eps,
        passed: t == sign_residue(chars.delta, n) && u == 0,
    })
}

/// Both congruences of the Euler criterion modulo `n`. Prime squares are not
/// filtered out.
pub fn full_pseudoprime_test(n: u64, base: i64) -> Result<PseudoprimeVerdict> {
    let out = full_outcome(n, base)?;
    Ok(PseudoprimeVerdict {
        n,
        base,
        kind: PseudoprimeKind::Full,
        passed: out.passed,
        profile: Vec::new(),
    })
}

/// `false` when a 1 follows something other than ±1, or a −1 follows
/// something other than 0.
pub fn profile_is_consistent(profile: &[i64]) -> bool {
    profile.windows(2).all(|w| match w[1] {
        1 => w[0] == 1 || w[0] == -1,
        -1 => w[0] == 0,
        _ => true,
    })
}

/// The strong test: full test plus the 2-power profile of `T` values.
///
/// The profile is the complete vector `[T_{Q}(a), T_{2Q}(a), …, T_{2ᵗQ}(a)]`
/// where `(n − ε)/2 = 2ᵗQ` with `Q` odd.
pub fn strong_profile(n: u64, base: i64) -> Result<PseudoprimeVerdict> {
    let out = full_outcome(n, base)?;
    to_i64(n)?;
    let k = half_index(n, out.eps);
    let t = k.trailing_zeros();
    let q = k >> t;
    let r = reduce(base, n);
    let mut value = fast::cheb_t(r, q, n);
    let mut raw = Vec::with_capacity(t as usize + 1);
    raw.push(value);
    for _ in 0..t {
        // T_{2j} = 2T_j² − 1
        value = fast::sub_mod(fast::mul_mod(2, fast::mul_mod(value, value, n), n), 1, n);
        raw.push(value);
    }
    let profile: Vec<i64> = raw
        .iter()
        .map(|&v| if v == n - 1 { -1 } else { v as i64 })
        .collect();
    let passed = out.passed && profile_is_consistent(&profile);
    Ok(PseudoprimeVerdict {
        n,
        base,
        kind: PseudoprimeKind::Strong,
        passed,
        profile,
    })
}

fn evaluate(n: u64, base: i64, kind: PseudoprimeKind) -> Result<PseudoprimeVerdict> {
    match kind {
        PseudoprimeKind::Weak => Ok(PseudoprimeVerdict {
            n,
            base,
            kind,
            passed: weak_pseudoprime_test(n, base)?,
            profile: Vec::new(),
        }),
        PseudoprimeKind::Full => full_pseudoprime_test(n, base),
        PseudoprimeKind::Strong => strong_profile(n, base),
    }
}

/// All odd composites `9 ≤ n ≤ limit` that pass the given test, ascending.
/// For the full and strong kinds, `n` sharing a factor with `a² − 1` are not
/// candidates.
pub fn pseudoprime_search(
    base: i64,
    limit: u64,
    kind: PseudoprimeKind,
) -> Result<Vec<PseudoprimeVerdict>> {
    if limit < 9 {
        return Ok(Vec::new());
    }
    let candidates: Vec<u64> = (9..=limit)
        .step_by(2)
        .filter(|&n| !primes::is_prime(n))
        .collect();
    candidates
        .into_par_iter()
        .filter_map(|n| match evaluate(n, base, kind) {
            Ok(v) if v.passed => Some(Ok(v)),
            Ok(_) | Err(Error::Precondition(_)) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// Least odd composite `n ≤ limit` with `n | 2ⁿ − 2` and `n | T_n(2) − 2`.
pub fn taxicab_search(limit: u64) -> Option<u64> {
    if limit < 9 {
        return None;
    }
    (4..=(limit - 1) / 2)
        .into_par_iter()
        .map(|i| 2 * i + 1)
        .find_first(|&n| {
            fast::pow_mod(2, n, n) == 2 % n
                && fast::cheb_t(2, n, n) == 2 % n
                && !primes::is_prime(n)
        })
}
