use num_bigint::BigUint;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::output::{bracket, number, Report};
use super::{Cli, Command};
use crate::criteria::{self, CharPair, PseudoprimeKind};
use crate::crypto::{self, net};
use crate::error::{invariant, Error, Result};
use crate::expsum::{self, SweepRow};
use crate::modarith::{cheb_eval, Modulus};
use crate::structure;
use crate::{aks, primes};

/// `cyclo-check` expands `T_n` over ℤ; beyond this the output is unreadable.
pub const CYCLO_CHECK_LIMIT: u64 = 2000;

pub(super) fn dispatch(cli: &Cli) -> Result<Report> {
    let mut r = Report::default();
    match &cli.command {
        Command::Eval { a, n, m } => {
            let modulus = Modulus::new(m.clone())?;
            let pair = cheb_eval(&modulus.element(a.clone()), n.clone());
            let (t, u) = (pair.t.value(), pair.u.value());
            r.line(format!("T={t} U={u}"));
            r.push_record(&json!({
                "a": number(a), "n": number(n), "m": number(m),
                "t": number(t), "u": number(u),
            }))?;
        }
        Command::Characters { a, p } => {
            let c = criteria::characters(*a, *p)?;
            r.line(format!("eps={} delta={}", c.eps, c.delta));
            r.push_record(&json!({"a": a, "p": p, "eps": c.eps, "delta": c.delta}))?;
        }
        Command::Euler { a, p, mod_p2 } => euler(&mut r, *a, *p, *mod_p2)?,
        Command::Partition { p } => {
            let table = structure::partition(*p)?;
            for cell in CharPair::CELLS {
                r.line(format!(
                    "A_{{{}}}={}",
                    cell.label(),
                    bracket(table.set(cell))
                ));
            }
            r.push_record(&table)?;
            for (a, cell, order) in table.rows() {
                r.push_csv_row(
                    &json!({"a": a, "eps": cell.eps, "delta": cell.delta, "order": order}),
                )?;
            }
        }
        Command::Orders { p } => {
            let classes = structure::order_class_decomposition(*p)?;
            for (d, members) in &classes.classes {
                r.line(format!("I_{d}={}", bracket(members)));
                r.push_record(&json!({"p": p, "d": d, "size": members.len(), "members": members}))?;
            }
        }
        Command::Splitting { d, p } => {
            let s = structure::splitting(*d, *p)?;
            r.line(format!(
                "Phi_{d}^+(2x) mod {p}: degree {}, {} roots {}",
                s.degree,
                if s.splits {
                    "splits,"
                } else {
                    "does not split,"
                },
                bracket(&s.roots)
            ));
            r.push_record(&s)?;
        }
        Command::CycloCheck { n } => cyclo_check(&mut r, *n)?,
        Command::Pseudoprimes { base, limit, kind } => pseudoprimes(&mut r, *base, *limit, *kind)?,
        Command::Wieferich { base, limit } => {
            let hits = criteria::wieferich_search(*base, *limit)?;
            let ps: Vec<String> = hits.iter().map(|h| h.p.to_string()).collect();
            r.line(format!(
                "{base} | {}",
                if ps.is_empty() {
                    "-".to_string()
                } else {
                    ps.join(",")
                }
            ));
            for h in &hits {
                r.push_record(h)?;
            }
        }
        Command::LucasLehmer { p } => {
            let run = criteria::lucas_lehmer_run(*p)?;
            if run.residue != run.chebyshev_residue {
                return Err(invariant!(
                    "s_(p-2) = {} but 2T_(2^(p-2))(2) = {} mod M_{p}",
                    run.residue,
                    run.chebyshev_residue
                ));
            }
            r.line(format!(
                "M_{p}: {} (s_(p-2) = 2T_(2^(p-2))(2) = {} mod M_{p})",
                if run.is_prime { "prime" } else { "composite" },
                run.residue
            ));
            r.push_record(&run)?;
        }
        Command::Taxicab { limit } => {
            let n = criteria::taxicab_search(*limit);
            r.line(match n {
                Some(n) => format!("{n} = {}", primes::format_factorization(n)),
                None => format!("none up to {limit}"),
            });
            r.push_record(&json!({"limit": limit, "n": n}))?;
        }
        Command::Expsum { p } => expsum_report(&mut r, *p)?,
        Command::ExpsumSweep { max } => {
            r.line("p |g++| |g+-| |g-+| |g--| |S| bound max_ratio");
            for report in expsum::expsum_sweep(*max)? {
                let row = SweepRow::from(&report);
                r.line(format!(
                    "{} {:.6} {:.6} {:.6} {:.6} {:.6} {:.6} {:.6}",
                    row.p, row.g_pp, row.g_pm, row.g_mp, row.g_mm, row.s, row.bound, row.max_ratio
                ));
                r.push_record(&row)?;
            }
        }
        Command::Primroot { a, limit } => {
            let rep = crypto::primitive_root_search(*a, *limit)?;
            if rep.chebyshev_square {
                r.warnings.push(format!(
                    "{a} = T_2(x) is a Chebyshev square and is never a Chebyshev primitive root"
                ));
            }
            let show = |x: Option<u64>| x.map_or("-".to_string(), |p| p.to_string());
            r.line(format!(
                "a={a} p-1: {} p+1: {}",
                show(rep.least_p_minus),
                show(rep.least_p_plus)
            ));
            r.push_record(&rep)?;
        }
        Command::DhDemo {
            p,
            g,
            secret_a,
            secret_b,
            listen,
            connect,
        } => {
            let mut rng = match cli.seed {
                Some(s) => ChaCha8Rng::seed_from_u64(s),
                None => ChaCha8Rng::from_entropy(),
            };
            let mut secret = |given: &Option<BigUint>| {
                given
                    .clone()
                    .unwrap_or_else(|| crypto::random_secret(&mut rng, p))
            };
            let a = secret(secret_a);
            match (listen, connect) {
                (None, None) => {
                    let b = secret(secret_b);
                    dh_in_process(&mut r, p, g, &a, &b)?;
                }
                (Some(addr), _) => {
                    let party = net::listen(addr.as_str(), &crypto::dh_keygen(p, g, &a)?)?;
                    dh_one_side(&mut r, &party)?;
                }
                (None, Some(addr)) => {
                    let party = net::connect(addr.as_str(), &crypto::dh_keygen(p, g, &a)?)?;
                    dh_one_side(&mut r, &party)?;
                }
            }
        }
        Command::Dlog { p, g, t } => {
            let n = crypto::discrete_log_bruteforce(*p, *g, *t)?;
            r.line(match n {
                Some(n) => format!("n={n}"),
                None => "n=none".to_string(),
            });
            r.push_record(&json!({"p": p, "g": g, "target": t, "n": n}))?;
        }
        Command::AksCheck { n, shift } => {
            let (holds, statement) = match shift {
                None => (
                    aks::prime_iff_power_check(*n)?,
                    format!("T_{n}(x) = x^{n} mod {n}"),
                ),
                Some(a) => (
                    aks::shifted_congruence_check(*n, *a)?,
                    format!("T_{n}(x + {a}) = T_{n}(x) + {a} mod {n}"),
                ),
            };
            let prime = primes::is_prime(*n);
            r.line(format!("{statement}: {holds} (n prime: {prime})"));
            r.push_record(&json!({"n": n, "shift": shift, "holds": holds, "prime": prime}))?;
        }
        Command::Coeff { n, k } => {
            let c = aks::coefficient_formula(*n, *k)?;
            let check = aks::coefficient_double_sum(*n, *k)?;
            if c != check {
                return Err(invariant!(
                    "a_{k} of T_{n}: closed form {c}, double sum {check}"
                ));
            }
            let power = n - 2 * k;
            r.line(format!("a_{k} = {c} (coefficient of x^{power} in T_{n})"));
            r.push_record(&json!({"n": n, "k": k, "power": power, "a_k": number(&c)}))?;
        }
    }
    Ok(r)
}

fn euler(r: &mut Report, a: i64, p: u64, mod_p2: bool) -> Result<()> {
    let rel = criteria::euler_relations(a, p)?;
    let (eps, k) = (rel.chars.eps, rel.k);
    let k_next = (p as i128 + eps as i128) as u64 / 2;
    r.line(format!("p={p} a={a} eps={eps} delta={}", rel.chars.delta));
    r.line(format!("T_{k}(a) = {} = delta: {}", rel.t_at_k, rel.t_half));
    r.line(format!("U_{}(a) = 0: {}", k - 1, rel.u_half));
    r.line(format!("T_{k_next}(a) = delta*a: {}", rel.t_next));
    r.line(format!("U_{}(a) = delta*eps: {}", k_next - 1, rel.u_next));
    let mut record = json!({"p": p, "a": a, "relations": rel, "holds": rel.all_hold()});
    if mod_p2 {
        let t = criteria::euler_test_modp2(a, p)?;
        let u = criteria::u_half_mod_p2(a, p)?;
        r.line(format!("T_{k}(a) = delta mod p^2: {t}"));
        r.line(format!("U_{}(a) mod p^2 = {u}", k - 1));
        record["t_half_mod_p2"] = json!(t);
        record["u_half_mod_p2"] = number(&u);
    }
    r.push_record(&record)
}

fn cyclo_check(r: &mut Report, n: u64) -> Result<()> {
    if n > CYCLO_CHECK_LIMIT {
        return Err(Error::Resource(format!(
            "cyclo-check expands T_n for n ≤ {CYCLO_CHECK_LIMIT}, got {n}"
        )));
    }
    let factors = structure::cyclotomic_factorization(n)?;
    let mut degree = 0;
    for (d, f) in &factors {
        let deg = f.degree().unwrap_or(0);
        degree += deg;
        r.line(format!("Psi_{d}(x) = {f}"));
        r.push_csv_row(&json!({"n": n, "d": d, "degree": deg, "psi": f.to_string()}))?;
    }
    let holds = structure::cyclotomic_factorization_check(n)?;
    r.line(format!(
        "T_{n}(x) - 1 = product: {holds}, total degree {degree}"
    ));
    let psi: Vec<_> = factors
        .iter()
        .map(|(d, f)| json!({"d": d, "psi": f.to_string()}))
        .collect();
    r.push_record(&json!({"n": n, "holds": holds, "degree": degree, "factors": psi}))
}

/// The strong kind lists every full pseudoprime with its profile and verdict.
fn pseudoprimes(r: &mut Report, base: i64, limit: u64, kind: PseudoprimeKind) -> Result<()> {
    let search_kind = match kind {
        PseudoprimeKind::Strong => PseudoprimeKind::Full,
        k => k,
    };
    for v in criteria::pseudoprime_search(base, limit, search_kind)? {
        let n = v.n;
        let factors = primes::format_factorization(n);
        if kind == PseudoprimeKind::Strong {
            let s = criteria::strong_profile(n, base)?;
            let verdict = if s.passed { "pass" } else { "fail" };
            r.line(format!("{n} = {factors} {} {verdict}", s.profile_string()));
            r.push_record(&s)?;
        } else {
            r.line(format!("{n} = {factors}"));
            r.push_record(&v)?;
        }
    }
    Ok(())
}

fn cx(z: Complex64) -> String {
    // keep rounding noise from printing as -0.000000
    let clean = |x: f64| if x.abs() < 5e-7 { 0.0 } else { x };
    format!("{:.6}{:+.6}i", clean(z.re), clean(z.im))
}

fn expsum_report(r: &mut Report, p: u64) -> Result<()> {
    let report = expsum::partition_sums(p)?;
    let diff = expsum::difference_lemma_check(p)?;
    let conj = expsum::conjugacy_check(p)?;
    let shifted = expsum::shifted_character_sums(p)?;
    let root = (p as f64).sqrt();
    for cell in CharPair::CELLS {
        let g = report.cell(cell);
        r.line(format!(
            "g_{{{}}} = {} |g| = {:.6}",
            cell.label(),
            cx(g),
            g.norm()
        ));
    }
    r.line(format!(
        "S = {} |S| = {:.6} 2sqrt(p) = {:.6}",
        cx(report.s),
        report.s.norm(),
        2.0 * root
    ));
    r.line(format!(
        "bound sqrt(p) + 5/4 = {:.6} max |g|/sqrt(p) = {:.6}",
        report.bound, report.max_ratio
    ));
    r.line(format!(
        "difference identities: {} (residuals {:.3e}, {:.3e})",
        diff.holds, diff.plus_residual, diff.minus_residual
    ));
    r.line(format!("conjugacy: {conj}"));
    let mut record = serde_json::to_value(&report).map_err(|e| Error::Invariant(e.to_string()))?;
    record["within_bound"] = json!(report.within_bound());
    record["weil_holds"] = json!(report.weil_holds());
    record["difference"] = json!(diff);
    record["conjugacy"] = json!(conj);
    record["shifted"] = json!(shifted);
    r.push_record(&record)?;
    r.push_csv_row(&SweepRow::from(&report))
}

fn dh_in_process(r: &mut Report, p: &BigUint, g: &BigUint, a: &BigUint, b: &BigUint) -> Result<()> {
    let t = crypto::dh_demo(p, g, a, b)?;
    let shared = |x: &Option<BigUint>| x.as_ref().map_or("-".to_string(), BigUint::to_string);
    r.line(format!("p = {p}"));
    r.line(format!("g = {g}"));
    r.line(format!("A -> B {}", t.frames[0]));
    r.line(format!("B -> A {}", t.frames[1]));
    r.line(format!("A shared = {}", shared(&t.alice.shared)));
    r.line(format!("B shared = {}", shared(&t.bob.shared)));
    if !t.agreed() {
        return Err(invariant!("shared values differ"));
    }
    r.line("agreed");
    r.push_record(&t)
}

fn dh_one_side(r: &mut Report, party: &crypto::DhParty) -> Result<()> {
    let show = |x: &Option<BigUint>| x.as_ref().map_or("-".to_string(), BigUint::to_string);
    r.line(format!("sent = {}", party.sent));
    r.line(format!("received = {}", show(&party.received)));
    r.line(format!("shared = {}", show(&party.shared)));
    r.push_record(party)
}
