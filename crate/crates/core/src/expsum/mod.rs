//! Exponential sums `g_A = Σ_{a∈A} ζ^a`, `ζ = e^{2πi/p}`, over the cells
//! `A_{εδ}`, evaluated in double precision and compared with their closed
//! forms in terms of the Gauss sum and the character sum
//! `S = Σ_{a=1}^{p−1} ((a²−1)/p) ζ^a`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::criteria::{characters, CharPair};
use crate::error::{invariant, usage, Result};
use crate::modarith::fast;
use crate::primes;
use crate::structure::partition;

/// Agreement required between a direct sum and its closed form, relative to
/// `max(√p, |closed form|)`.
pub const TOLERANCE: f64 = 1e-9;

const RENORMALIZE_EVERY: usize = 256;

/// `ζ⁰, ζ¹, …, ζ^{p−1}` by repeated multiplication, rescaled to unit modulus
/// every 256 steps.
pub fn zeta_powers(p: u64) -> Vec<Complex64> {
    let zeta = Complex64::from_polar(1.0, 2.0 * PI / p as f64);
    let mut out = Vec::with_capacity(p as usize);
    let mut z = Complex64::new(1.0, 0.0);
    for k in 0..p as usize {
        out.push(z);
        z *= zeta;
        if (k + 1) % RENORMALIZE_EVERY == 0 {
            z /= z.norm();
        }
    }
    out
}

fn within(x: Complex64, y: Complex64, p: u64) -> bool {
    (x - y).norm() <= TOLERANCE * (p as f64).sqrt().max(y.norm())
}

fn legendre(a: u64, p: u64) -> i8 {
    fast::jacobi(a % p, p)
}

/// `ε_p√p`: `√p` for `p ≡ 1 (mod 4)`, `i√p` for `p ≡ 3`.
pub fn gauss_period_constant(p: u64) -> Complex64 {
    let r = (p as f64).sqrt();
    if p % 4 == 1 {
        Complex64::new(r, 0.0)
    } else {
        Complex64::new(0.0, r)
    }
}

fn check_prime(p: u64, min: u64) -> Result<()> {
    if p < min || p % 2 == 0 || !primes::is_prime(p) {
        return Err(usage!("expected an odd prime ≥ {min}, got {p}"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GaussSums {
    pub p: u64,
    /// Sum over the nonzero squares.
    pub g_r: Complex64,
    /// Sum over the non-squares.
    pub g_n: Complex64,
}

/// Direct sums over residues and non-residues, checked against
/// `g_R = (−1 + ε_p√p)/2` and `g_N = (−1 − ε_p√p)/2`.
pub fn gauss_sums(p: u64) -> Result<GaussSums> {
    check_prime(p, 3)?;
    let z = zeta_powers(p);
    let (mut g_r, mut g_n) = (Complex64::default(), Complex64::default());
    for a in 1..p {
        if legendre(a, p) == 1 {
            g_r += z[a as usize];
        } else {
            g_n += z[a as usize];
        }
    }
    let c = gauss_period_constant(p);
    let half = Complex64::new(0.5, 0.0);
    let closed_r = (c - 1.0) * half;
    let closed_n = (-c - 1.0) * half;
    if !within(g_r, closed_r, p) || !within(g_n, closed_n, p) {
        return Err(invariant!(
            "Gauss sums mod {p}: g_R = {g_r}, expected {closed_r}; g_N = {g_n}, expected {closed_n}"
        ));
    }
    Ok(GaussSums { p, g_r, g_n })
}

/// The four cell sums with `S`, the bound `√p + 5/4` and `max |g|/√p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpSumReport {
    pub p: u64,
    #[serde(serialize_with = "cells_by_label")]
    pub g: BTreeMap<CharPair, Complex64>,
    pub s: Complex64,
    pub bound: f64,
    pub max_ratio: f64,
}

fn cells_by_label<S: serde::Serializer>(
    g: &BTreeMap<CharPair, Complex64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(g.len()))?;
    for cell in CharPair::CELLS {
        if let Some(v) = g.get(&cell) {
            m.serialize_entry(&cell.label(), v)?;
        }
    }
    m.end()
}

impl ExpSumReport {
    pub fn cell(&self, cell: CharPair) -> Complex64 {
        self.g[&cell]
    }

    pub fn within_bound(&self) -> bool {
        self.g.values().all(|g| g.norm() <= self.bound)
    }

    pub fn weil_holds(&self) -> bool {
        self.s.norm() <= 2.0 * (self.p as f64).sqrt()
    }
}

/// `S = Σ_{a=1}^{p−1} ((a²−1)/p) ζ^a`.
pub fn weil_sum(p: u64, z: &[Complex64]) -> Complex64 {
    (1..p)
        .map(|a| {
            let chi = legendre(fast::sub_mod(fast::mul_mod(a, a, p), 1, p), p);
            z[a as usize] * f64::from(chi)
        })
        .sum()
}

/// `g_{εδ}` from the character expansion, exact up to the term in `S`.
pub fn trick_formula(p: u64, cell: CharPair, s: Complex64) -> Complex64 {
    let (eps, delta) = (f64::from(cell.eps), f64::from(cell.delta));
    let theta = 2.0 * PI / p as f64;
    let zeta = Complex64::from_polar(1.0, theta);
    let zeta_inv = zeta.conj();
    let minus_one = f64::from(legendre(p - 1, p));
    let two = f64::from(legendre(2, p));
    let c = gauss_period_constant(p);
    Complex64::new(-theta.cos() / 2.0, 0.0)
        + (s + minus_one) * (eps / 4.0)
        + (c * two * zeta_inv - zeta) * (delta / 4.0)
        + (c * two * zeta - zeta_inv * minus_one) * (eps * delta / 4.0)
}

/// Sums over the cells of `partition(p)`, cross-checked against
/// [`trick_formula`] and `Σ_{R_p} ζ^a = −2cos(2π/p)`; also checks Weil's bound on `S`.
pub fn partition_sums(p: u64) -> Result<ExpSumReport> {
    check_prime(p, 5)?;
    let table = partition(p)?;
    let z = zeta_powers(p);
    let s = weil_sum(p, &z);
    let mut g = BTreeMap::new();
    for cell in CharPair::CELLS {
        let direct: Complex64 = table.set(cell).iter().map(|&a| z[a as usize]).sum();
        let closed = trick_formula(p, cell, s);
        if !within(direct, closed, p) {
            return Err(invariant!(
                "g_{cell} mod {p}: direct {direct}, character expansion {closed}"
            ));
        }
        g.insert(cell, direct);
    }
    let total: Complex64 = g.values().sum();
    let expected = Complex64::new(-2.0 * (2.0 * PI / p as f64).cos(), 0.0);
    if !within(total, expected, p) {
        return Err(invariant!("Σ g mod {p} = {total}, expected {expected}"));
    }
    let root = (p as f64).sqrt();
    if s.norm() > 2.0 * root {
        return Err(invariant!("|S| = {} exceeds 2√{p}", s.norm()));
    }
    let max_ratio = g.values().map(|x| x.norm() / root).fold(0.0, f64::max);
    Ok(ExpSumReport {
        p,
        g,
        s,
        bound: root + 1.25,
        max_ratio,
    })
}

/// The three shifted character sums over `R_p`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShiftedSums {
    pub p: u64,
    /// `Σ ((a−1)/p) ζ^a = ε_p√p ζ − ((−2)/p) ζ⁻¹`
    pub minus: Complex64,
    /// `Σ ((a+1)/p) ζ^a = ε_p√p ζ⁻¹ − (2/p) ζ`
    pub plus: Complex64,
    /// `Σ ((a²−1)/p) ζ^a = (−1/p) + S`
    pub square: Complex64,
}

/// Evaluates the three sums directly and checks each closed form.
pub fn shifted_character_sums(p: u64) -> Result<ShiftedSums> {
    check_prime(p, 3)?;
    let z = zeta_powers(p);
    let (mut minus, mut plus, mut square) = Default::default();
    for a in (0..p - 1).filter(|&a| a != 1) {
        let w = z[a as usize];
        minus += w * f64::from(legendre(a + p - 1, p));
        plus += w * f64::from(legendre(a + 1, p));
        square += w * f64::from(legendre(fast::sub_mod(fast::mul_mod(a, a, p), 1, p), p));
    }
    let c = gauss_period_constant(p);
    let zeta = z[1];
    let zeta_inv = z[(p - 1) as usize];
    let closed = [
        c * zeta - zeta_inv * f64::from(legendre(p - 2, p)),
        c * zeta_inv - zeta * f64::from(legendre(2, p)),
        weil_sum(p, &z) + f64::from(legendre(p - 1, p)),
    ];
    for (name, direct, closed) in [
        ("((a−1)/p)", minus, closed[0]),
        ("((a+1)/p)", plus, closed[1]),
        ("((a²−1)/p)", square, closed[2]),
    ] {
        if !within(direct, closed, p) {
            return Err(invariant!(
                "Σ {name} ζ^a mod {p}: direct {direct}, closed form {closed}"
            ));
        }
    }
    Ok(ShiftedSums {
        p,
        minus,
        plus,
        square,
    })
}

/// Residuals of the two difference identities at one prime.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DifferenceCheck {
    pub p: u64,
    /// `|(g_{+−} − g_{++}) − closed form|`
    pub plus_residual: f64,
    /// `|(g_{−−} − g_{−+}) − closed form|`
    pub minus_residual: f64,
    pub holds: bool,
}

/// The closed forms of `g_{+−} − g_{++}` and `g_{−−} − g_{−+}`, which branch
/// on `p mod 4`. Disagreement is reported, not raised.
pub fn difference_lemma_check(p: u64) -> Result<DifferenceCheck> {
    let report = partition_sums(p)?;
    let theta = 2.0 * PI / p as f64;
    let (c, s) = (theta.cos(), theta.sin());
    let root = (p as f64).sqrt();
    let two = f64::from(legendre(2, p));
    let i = Complex64::i();
    let (plus, minus) = if p % 4 == 1 {
        (
            Complex64::new((1.0 - two * root) * c, 0.0),
            i * ((1.0 + two * root) * s),
        )
    } else {
        (
            i * (s - two * root * c),
            Complex64::new(c - two * root * s, 0.0),
        )
    };
    let d_plus = report.cell(CharPair::PLUS_MINUS) - report.cell(CharPair::PLUS_PLUS);
    let d_minus = report.cell(CharPair::MINUS_MINUS) - report.cell(CharPair::MINUS_PLUS);
    Ok(DifferenceCheck {
        p,
        plus_residual: (d_plus - plus).norm(),
        minus_residual: (d_minus - minus).norm(),
        holds: within(d_plus, plus, p) && within(d_minus, minus, p),
    })
}

/// For the `ε` with `(−1/p)ε > 0` both `g_{ε±}` are real; for the other,
/// `g_{ε+} = conj(g_{ε−})`.
pub fn conjugacy_check(p: u64) -> Result<bool> {
    let report = partition_sums(p)?;
    let minus_one = legendre(p - 1, p);
    Ok([1i8, -1].into_iter().all(|eps| {
        let plus = report.cell(CharPair { eps, delta: 1 });
        let minus = report.cell(CharPair { eps, delta: -1 });
        if minus_one * eps > 0 {
            plus.im.abs() < TOLERANCE && minus.im.abs() < TOLERANCE
        } else {
            within(plus, minus.conj(), p)
        }
    }))
}

/// One line of a sweep over primes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub p: u64,
    #[serde(rename = "|g++|")]
    pub g_pp: f64,
    #[serde(rename = "|g+-|")]
    pub g_pm: f64,
    #[serde(rename = "|g-+|")]
    pub g_mp: f64,
    #[serde(rename = "|g--|")]
    pub g_mm: f64,
    #[serde(rename = "|S|")]
    pub s: f64,
    pub bound: f64,
    pub max_ratio: f64,
}

impl From<&ExpSumReport> for SweepRow {
    fn from(r: &ExpSumReport) -> Self {
        SweepRow {
            p: r.p,
            g_pp: r.cell(CharPair::PLUS_PLUS).norm(),
            g_pm: r.cell(CharPair::PLUS_MINUS).norm(),
            g_mp: r.cell(CharPair::MINUS_PLUS).norm(),
            g_mm: r.cell(CharPair::MINUS_MINUS).norm(),
            s: r.s.norm(),
            bound: r.bound,
            max_ratio: r.max_ratio,
        }
    }
}

/// Reports for every prime `5 ≤ p ≤ max_p`, ascending.
pub fn expsum_sweep(max_p: u64) -> Result<Vec<ExpSumReport>> {
    primes::odd_primes(max_p)
        .into_par_iter()
        .filter(|&p| p >= 5)
        .map(partition_sums)
        .collect()
}

/// `ε(a)` and `δ(a)` as the `±1` weights of the character expansion, for
/// callers that want to rebuild a cell sum term by term.
pub fn cell_weight(a: u64, p: u64, cell: CharPair) -> Result<f64> {
    let c = characters(a as i64, p)?;
    Ok(f64::from((1 + cell.eps * c.eps) * (1 + cell.delta * c.delta)) / 4.0)
}
