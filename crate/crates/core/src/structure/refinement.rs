use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{check_odd_prime, partition};
use crate::criteria::CharPair;
use crate::error::{invariant, usage, Result};
use crate::modarith::fast;

/// One of the four translated sets `Q + 1`, `Q − 1`, `N + 1`, `N − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftSource {
    QPlus1,
    QMinus1,
    NPlus1,
    NMinus1,
}

impl ShiftSource {
    pub const ALL: [ShiftSource; 4] = [
        ShiftSource::QPlus1,
        ShiftSource::QMinus1,
        ShiftSource::NPlus1,
        ShiftSource::NMinus1,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ShiftSource::QPlus1 => "Q+1",
            ShiftSource::QMinus1 => "Q-1",
            ShiftSource::NPlus1 => "N+1",
            ShiftSource::NMinus1 => "N-1",
        }
    }

    fn residues(self) -> bool {
        matches!(self, ShiftSource::QPlus1 | ShiftSource::QMinus1)
    }

    fn shift(self) -> i8 {
        match self {
            ShiftSource::QPlus1 | ShiftSource::NPlus1 => 1,
            _ => -1,
        }
    }

    /// The cell a part must coincide with. Symmetric parts carry
    /// `ε = (−1/p)`; `δ` follows from `2(a+1) = 2x` or `2(a+1) = 2(x+2)`
    /// together with `(a−1)(a+1) = a² − 1`.
    fn expected_cell(self, symmetric: bool, minus_one: i8, two: i8) -> CharPair {
        let eps = if symmetric { minus_one } else { -minus_one };
        let chi = if self.residues() { 1 } else { -1 };
        let delta = match self.shift() {
            1 => chi * two * eps,
            _ => chi * two,
        };
        CharPair { eps, delta }
    }
}

impl fmt::Display for ShiftSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for ShiftSource {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// The symmetric or the non-symmetric half of a translated set, with `1` and
/// `p − 1` removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftPart {
    pub source: ShiftSource,
    pub symmetric: bool,
    pub cell: CharPair,
    /// Equal to `A_cell`, sorted.
    pub set: Vec<u64>,
    /// `set` translated back into `Q` or `N`, sorted.
    pub back: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftRefinement {
    pub p: u64,
    /// Two parts per source, in the order `Q+1, Q−1, N+1, N−1`, symmetric first.
    pub parts: Vec<ShiftPart>,
}

impl ShiftRefinement {
    pub fn part(&self, source: ShiftSource, symmetric: bool) -> &ShiftPart {
        self.parts
            .iter()
            .find(|x| x.source == source && x.symmetric == symmetric)
            .expect("every source has both parts")
    }
}

/// Splits each of `Q ± 1`, `N ± 1` into the part closed under `x ↦ p − x`
/// and the rest, drops `1` and `p − 1`, and matches both parts against the
/// partition of `R_p`.
pub fn residue_shift_refinement(p: u64) -> Result<ShiftRefinement> {
    check_odd_prime(p)?;
    if p < 5 {
        return Err(usage!("shift refinement needs p ≥ 5, got {p}"));
    }
    let table = partition(p)?;
    let squares: BTreeSet<u64> = (1..=(p - 1) / 2).map(|k| fast::mul_mod(k, k, p)).collect();
    let minus_one = fast::jacobi(p - 1, p);
    let two = fast::jacobi(2, p);
    let mut parts = Vec::with_capacity(8);
    for source in ShiftSource::ALL {
        let base = (1..p).filter(|x| squares.contains(x) == source.residues());
        let s = source.shift();
        let shifted: BTreeSet<u64> = base
            .map(|x| {
                if s == 1 {
                    fast::add_mod(x, 1, p)
                } else {
                    fast::sub_mod(x, 1, p)
                }
            })
            .collect();
        for symmetric in [true, false] {
            let set: Vec<u64> = shifted
                .iter()
                .copied()
                .filter(|&y| shifted.contains(&((p - y) % p)) == symmetric)
                .filter(|&y| y != 1 && y != p - 1)
                .collect();
            let cell = source.expected_cell(symmetric, minus_one, two);
            if set != table.set(cell) {
                return Err(invariant!(
                    "{source} mod {p}: {} part {set:?} differs from A_{cell} = {:?}",
                    if symmetric {
                        "symmetric"
                    } else {
                        "non-symmetric"
                    },
                    table.set(cell)
                ));
            }
            let mut back: Vec<u64> = set
                .iter()
                .map(|&y| {
                    if s == 1 {
                        fast::sub_mod(y, 1, p)
                    } else {
                        fast::add_mod(y, 1, p)
                    }
                })
                .collect();
            back.sort_unstable();
            if back
                .iter()
                .any(|x| squares.contains(x) != source.residues())
            {
                return Err(invariant!(
                    "{source} mod {p}: shifted back outside its class"
                ));
            }
            parts.push(ShiftPart {
                source,
                symmetric,
                cell,
                set,
                back,
            });
        }
    }
    Ok(ShiftRefinement { p, parts })
}
