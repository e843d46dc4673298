//! Local structure of `R_p = {0, 2, 3, …, p−2}` under the two characters:
//! the four cells `A_{εδ}`, orders of `ω_a`, the order classes `I_d`, real
//! cyclotomic polynomials and the shift refinement of `Q ± 1`, `N ± 1`.

mod cyclotomic;
mod refinement;

pub use cyclotomic::{
    cyclotomic, cyclotomic_factorization, cyclotomic_factorization_check, psi, real_cyclotomic,
    splitting, splitting_check, Splitting,
};
pub use refinement::{residue_shift_refinement, ShiftPart, ShiftRefinement, ShiftSource};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::criteria::{characters, CharPair};
use crate::error::{invariant, usage, Result};
use crate::modarith::fast;
use crate::primes;

/// Linear scans are used to double-check orders below this prime.
pub const ORDER_SCAN_LIMIT: u64 = 200;

/// `R_p`: every residue mod `p` except `1` and `p − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueDomain {
    p: u64,
}

impl ResidueDomain {
    pub fn new(p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(ResidueDomain { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.p && a != 1 && a != self.p - 1
    }

    pub fn len(&self) -> u64 {
        self.p - 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Ascending.
    pub fn elements(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.p - 1).filter(|&a| a != 1)
    }
}

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !primes::is_prime(p) {
        return Err(usage!("expected an odd prime, got {p}"));
    }
    Ok(())
}

fn check_member(a: u64, p: u64) -> Result<()> {
    if !(ResidueDomain { p }).contains(a) {
        return Err(usage!("{a} is not in R_{p} = {{0, 2, …, {}}}", p - 2));
    }
    Ok(())
}

/// The characters of `a` as read off from `T_{(p−ε)/2}(a) ≡ δ`, without
/// evaluating any Legendre symbol.
fn cell_from_congruence(a: u64, p: u64) -> Option<CharPair> {
    for eps in [1i8, -1] {
        let k = ((p as i128 - eps as i128) / 2) as u64;
        let t = fast::cheb_t(a, k, p);
        if t == 1 {
            return Some(CharPair { eps, delta: 1 });
        }
        if t == p - 1 {
            return Some(CharPair { eps, delta: -1 });
        }
    }
    None
}

/// Least `n ≥ 1` with `T_n(a) ≡ 1 (mod p)`, by walking the recurrence.
pub fn order_by_scan(a: u64, p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    check_member(a, p)?;
    let (mut prev, mut cur) = (1u64, a);
    let two_a = fast::add_mod(a, a, p);
    for n in 1..=p + 1 {
        if cur == 1 {
            return Ok(n);
        }
        let next = fast::sub_mod(fast::mul_mod(two_a, cur, p), prev, p);
        prev = std::mem::replace(&mut cur, next);
    }
    Err(invariant!(
        "no period found for a = {a} within p + 1 = {} steps",
        p + 1
    ))
}

fn ord_unchecked(a: u64, p: u64) -> Result<u64> {
    let disc = fast::sub_mod(fast::mul_mod(a, a, p), 1, p);
    let eps = fast::jacobi(disc, p);
    let full = (p as i128 - eps as i128) as u64;
    if fast::cheb_eval(a, full, p) != (1, 0) {
        return Err(invariant!("ω_{a}^(p−ε) ≠ 1 mod {p}"));
    }
    let mut order = full;
    for (q, _) in primes::factorize(full) {
        while order % q == 0 && fast::cheb_t(a, order / q, p) == 1 {
            order /= q;
        }
    }
    // T_n ≡ 1 forces U_{n−1} ≡ 0 and T_{n+1} ≡ a
    let (t, u) = fast::cheb_eval(a, order, p);
    if t != 1 || u != 0 || fast::cheb_t(a, order + 1, p) != a {
        return Err(invariant!(
            "T_{order}({a}) ≡ 1 mod {p} without ω^{order} = 1"
        ));
    }
    if p < ORDER_SCAN_LIMIT {
        let scanned = order_by_scan(a, p)?;
        if scanned != order {
            return Err(invariant!(
                "order of {a} mod {p}: divisor descent {order}, scan {scanned}"
            ));
        }
    }
    Ok(order)
}

/// Order of `ω_a` mod `p`, the least `n ≥ 1` with `T_n(a) ≡ 1`. Always
/// divides `p − ε(a)`.
pub fn ord(a: u64, p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    check_member(a, p)?;
    ord_unchecked(a, p)
}

/// The four cells `A_{εδ}` of `R_p` together with the order of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    pub p: u64,
    pub sets: BTreeMap<CharPair, Vec<u64>>,
    pub orders: BTreeMap<u64, u64>,
}

impl PartitionTable {
    /// The cell `A_{εδ}`; empty for cells with no members.
    pub fn set(&self, cell: CharPair) -> &[u64] {
        self.sets.get(&cell).map_or(&[], Vec::as_slice)
    }

    /// `(a, characters, order)` for every `a ∈ R_p`, ascending in `a`.
    pub fn rows(&self) -> Vec<(u64, CharPair, u64)> {
        let mut rows: Vec<_> = self
            .sets
            .iter()
            .flat_map(|(&cell, members)| members.iter().map(move |&a| (a, cell)))
            .map(|(a, cell)| (a, cell, self.orders[&a]))
            .collect();
        rows.sort_unstable_by_key(|r| r.0);
        rows
    }
}

impl Serialize for PartitionTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Sets<'a>(&'a PartitionTable);
        impl Serialize for Sets<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(4))?;
                for cell in CharPair::CELLS {
                    m.serialize_entry(&cell.label(), self.0.set(cell))?;
                }
                m.end()
            }
        }
        struct Orders<'a>(&'a BTreeMap<u64, u64>);
        impl Serialize for Orders<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (a, d) in self.0 {
                    m.serialize_entry(&a.to_string(), d)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("p", &self.p)?;
        m.serialize_entry("sets", &Sets(self))?;
        m.serialize_entry("orders", &Orders(&self.orders))?;
        m.end()
    }
}

/// Partitions `R_p` by characters and by the congruence `T_{(p−ε)/2}(a) ≡ δ`,
/// failing if the two disagree anywhere.
pub fn partition(p: u64) -> Result<PartitionTable> {
    check_odd_prime(p)?;
    let domain = ResidueDomain { p };
    let elements: Vec<u64> = domain.elements().collect();
    let rows: Vec<(u64, CharPair, u64)> = elements
        .into_par_iter()
        .map(|a| {
            let by_chars = characters(a as i64, p)?;
            let by_t = cell_from_congruence(a, p)
                .ok_or_else(|| invariant!("T_((p±1)/2)({a}) ≢ ±1 mod {p}"))?;
            if by_chars != by_t {
                return Err(invariant!(
                    "a = {a} mod {p}: characters {by_chars} but congruence {by_t}"
                ));
            }
            Ok((a, by_chars, ord_unchecked(a, p)?))
        })
        .collect::<Result<_>>()?;
    let mut sets: BTreeMap<CharPair, Vec<u64>> =
        CharPair::CELLS.iter().map(|&c| (c, Vec::new())).collect();
    let mut orders = BTreeMap::new();
    for (a, cell, d) in rows {
        sets.get_mut(&cell)
            .ok_or_else(|| invariant!("degenerate characters {cell} for {a} ∈ R_{p}"))?
            .push(a);
        orders.insert(a, d);
    }
    Ok(PartitionTable { p, sets, orders })
}

/// `I_d = {a ∈ R_p : ord(a) = d}` for every order that occurs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderClasses {
    pub p: u64,
    pub classes: BTreeMap<u64, Vec<u64>>,
}

impl OrderClasses {
    pub fn class(&self, d: u64) -> &[u64] {
        self.classes.get(&d).map_or(&[], Vec::as_slice)
    }
}

/// Groups `R_p` by order and checks it against the partition:
///
/// ```text
/// A_{ε+} = ⋃ I_d over d | (p−ε)/2,        d > 2
/// A_{ε−} = ⋃ I_d over d | p−ε, d ∤ (p−ε)/2, d > 2
/// ```
///
/// along with `|I_d| = φ(d)/2`, nonempty exactly when `d | p ± 1`.
pub fn order_class_decomposition(p: u64) -> Result<OrderClasses> {
    let table = partition(p)?;
    let mut classes: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for (&a, &d) in &table.orders {
        classes.entry(d).or_default().push(a);
    }
    for cell in CharPair::CELLS {
        let full = (p as i128 - cell.eps as i128) as u64;
        let half = full / 2;
        let mut union: Vec<u64> = primes::divisors(full)
            .into_iter()
            .filter(|&d| d > 2 && (half % d == 0) == (cell.delta == 1))
            .flat_map(|d| classes.get(&d).cloned().unwrap_or_default())
            .collect();
        union.sort_unstable();
        if union != table.set(cell) {
            return Err(invariant!(
                "A_{cell} mod {p} is {:?} but the order classes give {union:?}",
                table.set(cell)
            ));
        }
    }
    for (&d, members) in &classes {
        let expected = primes::euler_phi(d) / 2;
        if d <= 2 || members.len() as u64 != expected {
            return Err(invariant!(
                "|I_{d}| = {} mod {p}, expected {expected}",
                members.len()
            ));
        }
        if (p - 1) % d != 0 && (p + 1) % d != 0 {
            return Err(invariant!("I_{d} nonempty mod {p} but {d} ∤ p ± 1"));
        }
    }
    for n in [p - 1, p + 1] {
        for d in primes::divisors(n).into_iter().filter(|&d| d > 2) {
            if !classes.contains_key(&d) {
                return Err(invariant!("I_{d} empty mod {p} although {d} | {n}"));
            }
        }
    }
    Ok(OrderClasses { p, classes })
}

/// Outcome of comparing the characters of `T_n(a)` with those of `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Transport {
    Holds,
    Violated,
    /// `a` or `T_n(a)` is `0` or `±1`, outside the statement's hypotheses.
    Skipped,
}

/// `ε(T_n(a)) = ε(a)`, and `δ(T_n(a))` is `1` for even `n`, `δ(a)` for odd `n`.
pub fn character_transport_check(a: i64, n: u64, p: u64) -> Result<Transport> {
    check_odd_prime(p)?;
    if n == 0 {
        return Err(usage!("transport index n must be at least 1"));
    }
    let r = fast::reduce_i128(a as i128, p);
    let t = fast::cheb_t(r, n, p);
    if matches!(r, 0 | 1) || r == p - 1 || t == 1 || t == p - 1 {
        return Ok(Transport::Skipped);
    }
    let before = characters(r as i64, p)?;
    let after = characters(t as i64, p)?;
    let delta = if n % 2 == 0 { 1 } else { before.delta };
    Ok(if after.eps == before.eps && after.delta == delta {
        Transport::Holds
    } else {
        Transport::Violated
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MM: CharPair = CharPair::MINUS_MINUS;
    const MP: CharPair = CharPair::MINUS_PLUS;
    const PM: CharPair = CharPair::PLUS_MINUS;
    const PP: CharPair = CharPair::PLUS_PLUS;

    #[test]
    fn partition_p23() {
        let t = partition(23).unwrap();
        assert_eq!(t.set(MM), [4, 9, 10, 13, 14, 19]);
        assert_eq!(t.set(MP), [0, 8, 11, 12, 15]);
        assert_eq!(t.set(PM), [6, 16, 18, 20, 21]);
        assert_eq!(t.set(PP), [2, 3, 5, 7, 17]);
        assert_eq!(t.orders[&19], 24);
        assert_eq!(t.orders[&11], 3);
    }

    #[test]
    fn partition_small_primes() {
        let t = partition(3).unwrap();
        assert_eq!(t.rows().len(), 1);
        assert_eq!(t.orders[&0], 4);
        let t = partition(5).unwrap();
        // squares mod 5 are {1, 4}; (ε, δ) read off from a² − 1 and 2(a + 1)
        assert_eq!(t.set(PM), [0]);
        assert_eq!(t.set(MP), [2]);
        assert_eq!(t.set(MM), [3]);
        assert!(t.set(PP).is_empty());
        assert!(partition(9).is_err());
        assert!(partition(2).is_err());
    }

    #[test]
    fn partition_sizes() {
        for p in crate::primes::odd_primes(1000) {
            let t = partition(p).unwrap();
            assert_eq!(t.sets.values().map(Vec::len).sum::<usize>() as u64, p - 2);
        }
    }

    #[test]
    fn zero_has_order_four() {
        for p in crate::primes::odd_primes(3000) {
            assert_eq!(ord(0, p).unwrap(), 4);
        }
        assert!(ord(1, 23).is_err());
        assert!(ord(22, 23).is_err());
        assert!(ord(23, 23).is_err());
    }

    #[test]
    fn large_prime_order_divides() {
        let p = 1_000_000_007;
        let d = ord(19, p).unwrap();
        let eps = fast::jacobi(19 * 19 - 1, p);
        assert_eq!((p as i128 - eps as i128) as u64 % d, 0);
        assert_eq!(fast::cheb_t(19, d, p), 1);
    }

    #[test]
    fn order_classes_p23() {
        let c = order_class_decomposition(23).unwrap();
        let expected: [(u64, &[u64]); 8] = [
            (3, &[11]),
            (4, &[0]),
            (6, &[12]),
            (8, &[9, 14]),
            (11, &[2, 3, 5, 7, 17]),
            (12, &[8, 15]),
            (22, &[6, 16, 18, 20, 21]),
            (24, &[4, 10, 13, 19]),
        ];
        assert_eq!(c.classes.len(), expected.len());
        for (d, members) in expected {
            assert_eq!(c.class(d), members, "I_{d}");
        }
    }

    #[test]
    fn order_classes_below_500() {
        for p in crate::primes::odd_primes(500) {
            order_class_decomposition(p).unwrap();
        }
    }

    #[test]
    fn transport() {
        assert_eq!(
            character_transport_check(19, 2, 23).unwrap(),
            Transport::Holds
        );
        assert_eq!(fast::cheb_t(19, 2, 23), 8);
        assert_eq!(
            character_transport_check(19, 1, 23).unwrap(),
            Transport::Holds
        );
        assert_eq!(
            character_transport_check(19, 24, 23).unwrap(),
            Transport::Skipped
        );
        for p in crate::primes::odd_primes(200).into_iter().skip(1) {
            for a in 2..p - 1 {
                for n in 1..12 {
                    assert_ne!(
                        character_transport_check(a as i64, n, p).unwrap(),
                        Transport::Violated,
                        "a={a} n={n} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(partition(7).unwrap()).unwrap();
        assert_eq!(v["p"], 7);
        assert!(v["sets"]["++"].is_array());
        assert_eq!(v["orders"]["0"], 4);
    }
}
