//! One PASS/FAIL line per acceptance criterion. Reference data is either
//! printed data transcribed below or recomputed here without the library.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use chebres::aks;
use chebres::criteria::{self, CharPair, PseudoprimeKind};
use chebres::crypto::{self, dh_finish, dh_keygen};
use chebres::expsum;
use chebres::modarith::{cheb_eval, fast, Modulus};
use chebres::poly::IntPolynomial;
use chebres::structure::{self, ShiftSource};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---- oracles ----

fn trial_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn mulm(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn powm(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, b, m);
        }
        b = mulm(b, b, m);
        e >>= 1;
    }
    r
}

/// Legendre symbol by Euler's criterion.
fn legendre(a: u64, p: u64) -> i8 {
    match powm(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// `(T_n(a), U_{n−1}(a)) mod m` by stepping the recurrence.
fn linear(a: u64, n: u64, m: u64) -> (u64, u64) {
    let (a, m) = (a as u128 % m as u128, m as u128);
    let (mut t0, mut t1, mut u0, mut u1) = (1 % m, a, 0, 1 % m);
    for _ in 0..n {
        let t2 = (2 * a * t1 + m - t0) % m;
        let u2 = (2 * a * u1 + m - u0) % m;
        (t0, t1, u0, u1) = (t1, t2, u1, u2);
    }
    (t0 as u64, u0 as u64)
}

/// Coefficients of `T_n` over ℤ, lowest first.
fn chebyshev_coeffs(n: usize) -> Vec<BigInt> {
    let mut prev = vec![BigInt::from(1)];
    let mut cur = vec![BigInt::from(0), BigInt::from(1)];
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn sorted(xs: &[u64]) -> Vec<u64> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

// ---- criteria ----

fn ac1() -> Outcome {
    let p = 23;
    let table = lib(structure::partition(p))?;
    let printed: [(CharPair, &[u64]); 4] = [
        (CharPair::MINUS_MINUS, &[4, 9, 10, 13, 14, 19]),
        (CharPair::MINUS_PLUS, &[0, 8, 11, 12, 15]),
        (CharPair::PLUS_MINUS, &[6, 16, 18, 20, 21]),
        (CharPair::PLUS_PLUS, &[2, 3, 5, 7, 17]),
    ];
    for (cell, set) in printed {
        ensure!(
            table.set(cell) == set,
            "A_{} = {:?}",
            cell.label(),
            table.set(cell)
        );
        for &a in set {
            let c = CharPair {
                eps: legendre(a * a + p - 1, p),
                delta: legendre(2 * (a + 1), p),
            };
            ensure!(c == cell, "oracle puts {a} in A_{}", c.label());
        }
    }

    let classes = lib(structure::order_class_decomposition(p))?;
    let printed_i: [(u64, &[u64]); 8] = [
        (3, &[11]),
        (4, &[0]),
        (6, &[12]),
        (8, &[14, 9]),
        (11, &[2, 3, 5, 7, 17]),
        (12, &[8, 15]),
        (22, &[6, 16, 18, 20, 21]),
        (24, &[19, 13, 4, 10]),
    ];
    ensure!(
        classes.classes.len() == printed_i.len(),
        "classes {:?}",
        classes.classes.keys()
    );
    for (d, set) in printed_i {
        ensure!(
            classes.class(d) == sorted(set),
            "I_{d} = {:?}",
            classes.class(d)
        );
    }

    let iterates: [(u64, u64); 24] = [
        (19, 1),
        (8, 15),
        (9, 17),
        (12, 10),
        (10, 18),
        (0, 7),
        (13, 18),
        (11, 10),
        (14, 17),
        (15, 15),
        (4, 1),
        (22, 0),
        (4, 22),
        (15, 8),
        (14, 6),
        (11, 13),
        (13, 5),
        (0, 16),
        (10, 5),
        (12, 13),
        (9, 6),
        (8, 8),
        (19, 22),
        (1, 0),
    ];
    let m = lib(Modulus::new(23u32))?;
    for (n, &(t, u)) in (1u64..).zip(&iterates) {
        let pair = cheb_eval(&m.element(19), n);
        let got = (pair.t.value().clone(), pair.u.value().clone());
        ensure!(got == (t.into(), u.into()), "ω_19^{n} = {got:?}");
        ensure!(linear(19, n, 23) == (t, u), "recurrence oracle at n = {n}");
    }
    ensure!(lib(structure::ord(19, 23))? == 24, "ord(19) ≠ 24");

    // printed lists, with 1 and p − 1 dropped as the construction prescribes
    let r = lib(structure::residue_shift_refinement(p))?;
    let printed_shift: [(ShiftSource, bool, &[u64], &[u64]); 4] = [
        (
            ShiftSource::QPlus1,
            true,
            &[10, 13, 14, 9, 4, 19],
            &[9, 12, 13, 8, 3, 18],
        ),
        (
            ShiftSource::QPlus1,
            false,
            &[2, 5, 17, 3, 7],
            &[1, 4, 16, 2, 6],
        ),
        (
            ShiftSource::QMinus1,
            true,
            &[0, 8, 15, 12, 11],
            &[1, 9, 16, 12, 13],
        ),
        (
            ShiftSource::QMinus1,
            false,
            &[3, 1, 2, 17, 7, 5],
            &[4, 3, 18, 8, 6],
        ),
    ];
    for (source, symmetric, set, back) in printed_shift {
        let part = r.part(source, symmetric);
        let set: Vec<u64> = sorted(set)
            .into_iter()
            .filter(|&x| x != 1 && x != p - 1)
            .collect();
        ensure!(
            part.set == set,
            "{source} symmetric={symmetric}: {:?}",
            part.set
        );
        ensure!(part.back == sorted(back), "{source} back: {:?}", part.back);
    }
    ensure!(
        r.part(ShiftSource::NPlus1, false).cell == CharPair::PLUS_MINUS
            && r.part(ShiftSource::NMinus1, false).cell == CharPair::PLUS_MINUS,
        "A_+- not produced by both shifts of N"
    );
    Ok("partition, I_d, iterates of 19, shift subsets".into())
}

fn ac2() -> Outcome {
    let found: Vec<u64> = lib(criteria::pseudoprime_search(
        2,
        20000,
        PseudoprimeKind::Full,
    ))?
    .iter()
    .map(|v| v.n)
    .collect();
    let expected = [989, 2701, 10609, 11041, 15505, 18721, 18817];
    ensure!(found == expected, "full search gave {found:?}");
    for &n in &found {
        ensure!(!trial_prime(n), "{n} is prime");
    }
    let printed: [&[i64]; 7] = [
        &[1],
        &[0, -1],
        &[9083, 0, -1, 1],
        &[0, -1, 1, 1, 1],
        &[8416, 4431, 8861, 1],
        &[14063, 17370, 18527, 387, 1],
        &[18791, 1301, 18720, 0, -1, 1],
    ];
    let mut rejected = Vec::new();
    let mut mismatches = Vec::new();
    for (&n, want) in expected.iter().zip(printed) {
        let v = lib(criteria::strong_profile(n, 2))?;
        if !v.passed {
            rejected.push(n);
        }
        if v.profile != want {
            mismatches.push(format!(
                "{n}: computed {} printed {want:?}",
                v.profile_string()
            ));
        }
    }
    ensure!(
        rejected == [15505, 18721],
        "strong test rejects {rejected:?}"
    );
    ensure!(
        mismatches.is_empty(),
        "profile mismatch: {}",
        mismatches.join("; ")
    );
    Ok("seven full pseudoprimes, profiles, strong rejections".into())
}

fn ac3() -> Outcome {
    let printed: [(i64, &[u64]); 17] = [
        (2, &[103]),
        (3, &[13, 31, 1546463]),
        (4, &[181, 1039, 2917, 2401457]),
        (5, &[7, 523]),
        (6, &[23, 577, 1325663]),
        (7, &[103]),
        (8, &[]),
        (9, &[]),
        (10, &[]),
        (11, &[]),
        (12, &[5, 311, 3286453]),
        (13, &[5, 43, 71]),
        (14, &[557, 19739]),
        (15, &[6707879, 93140353]),
        (16, &[5231, 6491, 30071]),
        (17, &[13, 31, 1546463]),
        (18, &[11, 3533729]),
    ];
    let hits = |base: i64, limit: u64| -> Result<Vec<u64>, String> {
        Ok(lib(criteria::wieferich_search(base, limit))?
            .iter()
            .map(|h| h.p)
            .collect())
    };
    let start = Instant::now();
    for (base, ps) in printed {
        let want: Vec<u64> = ps.iter().copied().filter(|&p| p < 1_000_000).collect();
        let got = hits(base, 1_000_000)?;
        ensure!(got == want, "base {base} to 10^6: {got:?}");
    }
    let short = start.elapsed();
    ensure!(short < Duration::from_secs(60), "10^6 sweep took {short:?}");
    for (base, want) in [
        (3, [13, 31, 1546463]),
        (12, [5, 311, 3286453]),
        (17, [13, 31, 1546463]),
    ] {
        let got = hits(base, 10_000_000)?;
        ensure!(got == want, "base {base} to 10^7: {got:?}");
    }
    // spot-check a hit against U mod p² computed by the plain recurrence
    for (a, p) in [(13u64, 71u64), (2, 103), (16, 30071)] {
        let eps = legendre(a * a - 1, p);
        let k = (p as i64 - eps as i64) as u64 / 2;
        ensure!(linear(a, k, p * p).1 == 0, "oracle rejects ({a}, {p})");
    }
    Ok(format!(
        "bases 2-18 to 10^6 in {short:.2?}; 10^7 for bases 3, 12, 17"
    ))
}

fn ac4() -> Outcome {
    let primes: Vec<u64> = (5..10_000).filter(|&p| trial_prime(p)).collect();
    let failures: Vec<String> = primes
        .par_iter()
        .flat_map_iter(|&p| {
            (2..p - 1).chain([0]).filter_map(move |a| {
                match criteria::euler_relations(a as i64, p) {
                    Ok(rel) if rel.all_hold() => None,
                    Ok(rel) => Some(format!("({a}, {p}): {rel:?}")),
                    Err(e) => Some(format!("({a}, {p}): {e}")),
                }
            })
        })
        .collect();
    ensure!(
        failures.is_empty(),
        "{} failures, first {}",
        failures.len(),
        failures[0]
    );
    let checked: usize = primes.iter().map(|&p| (p - 2) as usize).sum();

    let small: Vec<u64> = primes.iter().copied().filter(|&p| p < 2000).collect();
    let failures: Vec<String> = small
        .par_iter()
        .flat_map_iter(|&p| {
            (2..p - 1).chain([0]).filter_map(move |a| {
                match criteria::euler_test_modp2(a as i64, p) {
                    Ok(true) => None,
                    Ok(false) => Some(format!("({a}, {p})")),
                    Err(e) => Some(format!("({a}, {p}): {e}")),
                }
            })
        })
        .collect();
    ensure!(
        failures.is_empty(),
        "mod p^2: {} failures, first {}",
        failures.len(),
        failures[0]
    );
    // independent recomputation of the mod p² statement at a few primes
    for p in [5u64, 23, 101, 1999] {
        for a in (2..p - 1).chain([0]) {
            let eps = legendre(a * a + p - 1, p);
            let delta = legendre(2 * (a + 1), p);
            let k = (p as i64 - eps as i64) as u64 / 2;
            let want = if delta == 1 { 1 } else { p * p - 1 };
            ensure!(linear(a, k, p * p).0 == want, "oracle: ({a}, {p}) mod p^2");
        }
    }
    Ok(format!(
        "{checked} pairs mod p, all a in R_p mod p^2 for p < 2000"
    ))
}

fn ac5() -> Outcome {
    let primes: Vec<u64> = (5..2000).filter(|&p| trial_prime(p)).collect();
    let problems: Vec<String> = primes
        .par_iter()
        .filter_map(|&p| ac5_prime(p).err())
        .collect();
    ensure!(
        problems.is_empty(),
        "{} primes fail, first {}",
        problems.len(),
        problems[0]
    );
    Ok(format!("{} primes", primes.len()))
}

fn ac5_prime(p: u64) -> Result<(), String> {
    let report = lib(expsum::partition_sums(p))?;
    let root = (p as f64).sqrt();
    let zeta = |a: u64| Complex64::from_polar(1.0, 2.0 * PI * a as f64 / p as f64);
    let close = |x: Complex64, y: Complex64| (x - y).norm() <= 1e-9 * root.max(y.norm());
    // direct cell sums and S from the Legendre oracle
    let mut direct = [Complex64::new(0.0, 0.0); 4];
    let mut s = Complex64::new(0.0, 0.0);
    for a in 1..p {
        s += zeta(a) * f64::from(legendre(a * a + p - 1, p));
    }
    for a in (2..p - 1).chain([0]) {
        let cell = CharPair {
            eps: legendre(a * a + p - 1, p),
            delta: legendre(2 * (a + 1), p),
        };
        let i = CharPair::CELLS.iter().position(|&c| c == cell).unwrap();
        direct[i] += zeta(a);
    }
    ensure!(close(report.s, s), "p={p}: S = {} vs {s}", report.s);
    ensure!(s.norm() <= 2.0 * root, "p={p}: |S| = {}", s.norm());
    for (i, cell) in CharPair::CELLS.into_iter().enumerate() {
        let g = report.cell(cell);
        ensure!(
            close(g, direct[i]),
            "p={p}: g_{} = {g} vs {}",
            cell.label(),
            direct[i]
        );
        ensure!(
            g.norm() <= root + 1.25,
            "p={p}: |g_{}| = {}",
            cell.label(),
            g.norm()
        );
    }
    // closed forms of the shifted sums and of the cell differences
    lib(expsum::shifted_character_sums(p))?;
    let diff = lib(expsum::difference_lemma_check(p))?;
    ensure!(diff.holds, "p={p}: difference identities {diff:?}");
    ensure!(lib(expsum::conjugacy_check(p))?, "p={p}: conjugacy");
    Ok(())
}

fn ac6() -> Outcome {
    for n in 1..=30u64 {
        let factors = lib(structure::cyclotomic_factorization(n))?;
        let degree: usize = factors.iter().map(|(_, f)| f.degree().unwrap_or(0)).sum();
        ensure!(degree as u64 == n, "n={n}: Σ deg Ψ_d = {degree}");
        let product = factors
            .iter()
            .fold(IntPolynomial::constant(1), |acc, (_, f)| &acc * f);
        let mut target = chebyshev_coeffs(n as usize);
        target[0] -= 1;
        ensure!(product.coefficients() == target, "n={n}: product {product}");
        let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        let got: Vec<u64> = factors.iter().map(|(d, _)| *d).collect();
        ensure!(got == divisors, "n={n}: factor indices {got:?}");
    }
    Ok("1 <= n <= 30".into())
}

fn ac7() -> Outcome {
    let odd: Vec<u64> = (3..=2000).step_by(2).collect();
    let bad: Vec<String> = odd
        .par_iter()
        .filter_map(|&n| {
            let truth = trial_prime(n);
            let power = aks::prime_iff_power_check(n);
            let shifted = aks::shifted_congruence_check(n, 1);
            match (power, shifted) {
                (Ok(a), Ok(b)) if a == truth && b == truth => None,
                other => Some(format!("n={n}: {other:?}")),
            }
        })
        .collect();
    ensure!(
        bad.is_empty(),
        "{} disagreements, first {}",
        bad.len(),
        bad[0]
    );

    let mut prev = vec![BigInt::from(1)];
    let mut cur = vec![BigInt::from(0), BigInt::from(1)];
    for n in 2..=500u64 {
        let mut next = vec![BigInt::from(0); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
        for k in 1..=n / 2 {
            let f = lib(aks::coefficient_formula(n, k))?;
            ensure!(f == cur[(n - 2 * k) as usize], "a_{k} of T_{n} = {f}");
        }
    }

    let mut steps = 0;
    for n in (9..1000u64).step_by(2).filter(|&n| !trial_prime(n)) {
        for p in (3..n).filter(|&p| n % p == 0 && trial_prime(p)) {
            let s = lib(aks::lucas_step(n, p))?;
            let (top, bottom) = (n - p - 1, p - 1);
            let exact: BigUint = (0..bottom).fold(BigUint::from(1u32), |acc, i| acc * (top - i))
                / (1..=bottom).fold(BigUint::from(1u32), |acc, i| acc * i);
            let oracle = exact % p;
            ensure!(
                oracle == BigUint::from(1u32),
                "C({top}, {bottom}) mod {p} = {oracle}"
            );
            ensure!(
                s.binomial_mod_p == 1 && s.holds(),
                "lucas_step({n}, {p}) = {s:?}"
            );
            steps += 1;
        }
    }
    Ok(format!(
        "odd n <= 2000, coefficients n <= 500, {steps} Lucas steps"
    ))
}

fn ac8() -> Outcome {
    let printed: [(i64, Option<u64>, Option<u64>); 8] = [
        (2, Some(11), Some(7)),
        (3, None, Some(3)),
        (4, Some(7), Some(19)),
        (5, Some(5), Some(7)),
        (6, Some(17), Some(3)),
        (8, Some(19), Some(5)),
        (9, None, Some(3)),
        (10, Some(5), Some(17)),
    ];
    for (a, minus, plus) in printed {
        let r = lib(crypto::primitive_root_search(a, 10_000))?;
        ensure!(
            (r.least_p_minus, r.least_p_plus) == (minus, plus),
            "a={a}: {:?} {:?}",
            r.least_p_minus,
            r.least_p_plus
        );
        for p in [minus, plus].into_iter().flatten() {
            let b = a.rem_euclid(p as i64) as u64;
            let eps = legendre(b * b + p - 1, p);
            let full = (p as i64 - eps as i64) as u64;
            let period = (1..=full).find(|&n| linear(b, n, p) == (1, 0));
            ensure!(
                period == Some(full),
                "oracle period of {a} mod {p}: {period:?}"
            );
        }
    }
    Ok("a in 2..10 without 7".into())
}

fn ac9() -> Outcome {
    let known = [3u64, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127];
    let mut prime_exponents = Vec::new();
    for p in (3..=127).filter(|&p| trial_prime(p)) {
        if lib(criteria::lucas_lehmer(p))? {
            prime_exponents.push(p);
        }
    }
    ensure!(
        prime_exponents == known,
        "prime M_p for p in {prime_exponents:?}"
    );
    Ok("odd prime exponents up to 127".into())
}

fn ac10() -> Outcome {
    let n = criteria::taxicab_search(100_000);
    ensure!(n == Some(1729), "search gave {n:?}");
    let least = (9..100_000u64)
        .step_by(2)
        .find(|&n| !trial_prime(n) && powm(2, n, n) == 2 && linear(2, n, n).0 == 2);
    ensure!(least == Some(1729), "oracle gave {least:?}");
    Ok("1729".into())
}

fn ac11() -> Outcome {
    const N: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..N {
        let m = rng.gen_range(2..u64::MAX);
        let (a, n) = (rng.gen::<u64>(), rng.gen::<u64>());
        let (t, u) = fast::cheb_eval(a % m, n, m);
        let d = (a as u128 % m as u128 * (a as u128 % m as u128) + m as u128 - 1) % m as u128;
        let (t, u, m128) = (t as u128, u as u128, m as u128);
        let tt = t * t % m128;
        let duu = d * (u * u % m128) % m128;
        ensure!(
            (tt + m128 - duu) % m128 == 1 % m128,
            "Pell fails at a={a} n={n} m={m}"
        );
    }
    for _ in 0..N {
        let m = rng.gen_range(2..1u64 << 62);
        let (a, x, y) = (
            rng.gen::<u64>(),
            rng.gen_range(0..1u64 << 31),
            rng.gen_range(0..1u64 << 31),
        );
        let xy = fast::cheb_t(fast::cheb_t(a % m, x, m), y, m);
        let yx = fast::cheb_t(fast::cheb_t(a % m, y, m), x, m);
        ensure!(
            xy == yx && xy == fast::cheb_t(a % m, x * y, m),
            "composition at a={a} m={m}"
        );
    }
    let dh_primes: Vec<u64> = (1_000_000..1_010_000).filter(|&p| trial_prime(p)).collect();
    for _ in 0..N {
        let p = dh_primes[rng.gen_range(0..dh_primes.len())];
        let pb = BigUint::from(p);
        let g = BigUint::from(rng.gen_range(2..p - 1));
        let sa = crypto::random_secret(&mut rng, &pb);
        let sb = crypto::random_secret(&mut rng, &pb);
        let alice = lib(dh_keygen(&pb, &g, &sa))?;
        let bob = lib(dh_keygen(&pb, &g, &sb))?;
        let a = lib(dh_finish(&alice, &bob.sent))?;
        let b = lib(dh_finish(&bob, &alice.sent))?;
        ensure!(
            a.shared.is_some() && a.shared == b.shared,
            "DH disagreement at p={p}"
        );
    }
    for _ in 0..N {
        let m = rng.gen_range(2..1u64 << 40);
        let (a, n) = (rng.gen::<u64>(), rng.gen_range(0..2000));
        ensure!(
            fast::cheb_eval(a % m, n, m) == linear(a, n, m),
            "log/linear at a={a} n={n} m={m}"
        );
    }
    Ok(format!("{N} seeded instances of each invariant"))
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 11] = [
        ("AC1", "p=23 worked example", ac1),
        ("AC2", "base-2 pseudoprime table and strong profiles", ac2),
        ("AC3", "Chebyshev-Wieferich table", ac3),
        ("AC4", "Euler criterion for 3 < p < 10^4", ac4),
        ("AC5", "exponential-sum bounds and closed forms", ac5),
        ("AC6", "T_n - 1 as a product of Psi_d", ac6),
        ("AC7", "AKS congruences, coefficients, Lucas step", ac7),
        ("AC8", "primitive-root table", ac8),
        ("AC9", "Lucas-Lehmer classification", ac9),
        ("AC10", "taxicab pseudoprime", ac10),
        ("AC11", "seeded randomized invariants", ac11),
    ];
    let limits: [(&str, u64); 4] = [("AC1", 1), ("AC2", 10), ("AC5", 60), ("AC9", 5)];
    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let mut outcome =
            std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        if let Some(&(_, secs)) = limits.iter().find(|(l, _)| *l == id) {
            if outcome.is_ok() && elapsed > Duration::from_secs(secs) {
                outcome = Err(format!("took {elapsed:.2?}, limit {secs} s"));
            }
        }
        match outcome {
            Ok(detail) => println!("{id} PASS [{elapsed:.2?}] {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL [{elapsed:.2?}] {title}: {why}");
            }
        }
    }
    println!("{} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
