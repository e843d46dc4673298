//! Residue-ring arithmetic and fast evaluation of `ω_a^n = T_n(a) + U_{n−1}(a)·√(a²−1)`
//! modulo an arbitrary modulus.
//!
//! A [`ChebPair`] `(t, u)` stands for `t + u·√(a²−1)` in `ℤ/m[√(a²−1)]`. Powers of
//! `ω_a = (a, 1)` are computed by binary exponentiation, so `cheb_eval` costs
//! `O(log n)` pair multiplications. Moduli that fit in a machine word take the
//! [`fast`] path; everything else runs on [`BigUint`].

pub mod fast;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{usage, Result};

/// A modulus `m ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    value: BigUint,
    small: Option<u64>,
}

impl Modulus {
    pub fn new(m: impl Into<BigUint>) -> Result<Self> {
        let value = m.into();
        if value < BigUint::from(2u32) {
            return Err(usage!("modulus must be at least 2, got {value}"));
        }
        let small = value.to_u64();
        Ok(Modulus { value, small })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// The modulus as a machine word, if it fits.
    pub fn as_u64(&self) -> Option<u64> {
        self.small
    }

    /// Canonical residue of a signed integer.
    pub fn reduce(&self, a: &BigInt) -> BigUint {
        let m = BigInt::from_biguint(Sign::Plus, self.value.clone());
        a.mod_floor(&m)
            .to_biguint()
            .expect("mod_floor with positive modulus is nonnegative")
    }

    pub fn element(&self, value: impl Into<BigInt>) -> RingElement {
        RingElement::new(value, self)
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Modulus({})", self.value)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A residue in `[0, m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    value: BigUint,
    modulus: Modulus,
}

impl RingElement {
    pub fn new(value: impl Into<BigInt>, modulus: &Modulus) -> Self {
        RingElement {
            value: modulus.reduce(&value.into()),
            modulus: modulus.clone(),
        }
    }

    fn from_canonical(value: BigUint, modulus: &Modulus) -> Self {
        debug_assert!(value < modulus.value);
        RingElement {
            value,
            modulus: modulus.clone(),
        }
    }

    pub fn zero(modulus: &Modulus) -> Self {
        Self::from_canonical(BigUint::zero(), modulus)
    }

    pub fn one(modulus: &Modulus) -> Self {
        Self::from_canonical(BigUint::one(), modulus)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// Value in the symmetric range: `m − 1` becomes `−1`, everything else stays canonical.
    pub fn signed_unit_form(&self) -> BigInt {
        if &self.value + 1u32 == self.modulus.value {
            BigInt::from(-1)
        } else {
            BigInt::from(self.value.clone())
        }
    }

    /// `a² − 1`, the discriminant of `ℤ/m[√(a²−1)]`.
    pub fn discriminant(&self) -> RingElement {
        &(self * self) - &RingElement::one(&self.modulus)
    }

    fn same_ring(&self, other: &RingElement) {
        assert!(
            self.modulus == other.modulus,
            "ring elements from different moduli: {} vs {}",
            self.modulus,
            other.modulus
        );
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Binary operators panic when the operands live in different rings.

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.same_ring(rhs);
        let mut v = &self.value + &rhs.value;
        if v >= self.modulus.value {
            v -= &self.modulus.value;
        }
        RingElement::from_canonical(v, &self.modulus)
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.same_ring(rhs);
        let v = if self.value >= rhs.value {
            &self.value - &rhs.value
        } else {
            &self.modulus.value - (&rhs.value - &self.value)
        };
        RingElement::from_canonical(v, &self.modulus)
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.same_ring(rhs);
        let v = (&self.value * &rhs.value) % &self.modulus.value;
        RingElement::from_canonical(v, &self.modulus)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        if self.value.is_zero() {
            self.clone()
        } else {
            RingElement::from_canonical(&self.modulus.value - &self.value, &self.modulus)
        }
    }
}

/// `ω_a^n = t + u·√(a²−1)`; for a genuine power, `t = T_n(a)` and `u = U_{n−1}(a)`.
///
/// Equality compares `t`, `u` and `base`. The exponent is bookkeeping only.
#[derive(Clone)]
pub struct ChebPair {
    pub t: RingElement,
    pub u: RingElement,
    pub base: RingElement,
    pub n: BigUint,
}

impl PartialEq for ChebPair {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && self.u == other.u && self.base == other.base
    }
}

impl Eq for ChebPair {}

impl fmt::Debug for ChebPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ω_{}^{} = [{},{}] (mod {})",
            self.base, self.n, self.t, self.u, self.base.modulus
        )
    }
}

impl ChebPair {
    /// `ω_a^0 = (1, 0)`.
    pub fn identity(base: &RingElement) -> Self {
        let m = base.modulus();
        ChebPair {
            t: RingElement::one(m),
            u: RingElement::zero(m),
            base: base.clone(),
            n: BigUint::zero(),
        }
    }

    /// `ω_a = (a, 1)`.
    pub fn omega(base: &RingElement) -> Self {
        ChebPair {
            t: base.clone(),
            u: RingElement::one(base.modulus()),
            base: base.clone(),
            n: BigUint::one(),
        }
    }

    pub fn modulus(&self) -> &Modulus {
        self.base.modulus()
    }

    /// `t² − (a²−1)·u²`, which is 1 for every genuine power of `ω_a`.
    pub fn norm(&self) -> RingElement {
        let d = self.base.discriminant();
        &(&self.t * &self.t) - &(&d * &(&self.u * &self.u))
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_one() && self.u.is_zero()
    }

    /// Product in `ℤ/m[√(a²−1)]`; exponents add.
    pub fn mul(&self, other: &ChebPair) -> Result<ChebPair> {
        pair_mul(self, other)
    }
}

/// `(t₁t₂ + (a²−1)u₁u₂, t₁u₂ + t₂u₁)`. Fails unless both pairs share modulus and base.
pub fn pair_mul(x: &ChebPair, y: &ChebPair) -> Result<ChebPair> {
    if x.modulus() != y.modulus() {
        return Err(usage!(
            "pair_mul: modulus mismatch ({} vs {})",
            x.modulus(),
            y.modulus()
        ));
    }
    if x.base != y.base {
        return Err(usage!("pair_mul: base mismatch ({} vs {})", x.base, y.base));
    }
    let d = x.base.discriminant();
    let t = &(&x.t * &y.t) + &(&d * &(&x.u * &y.u));
    let u = &(&x.t * &y.u) + &(&y.t * &x.u);
    Ok(ChebPair {
        t,
        u,
        base: x.base.clone(),
        n: &x.n + &y.n,
    })
}

/// `(T_n(a), U_{n−1}(a)) mod m` in `O(log n)` multiplications, with `U_{−1} = 0`.
pub fn cheb_eval(a: &RingElement, n: impl Into<BigUint>) -> ChebPair {
    let n: BigUint = n.into();
    let modulus = a.modulus();
    if let Some(m) = modulus.as_u64() {
        let av = a
            .value()
            .to_u64()
            .expect("canonical residue fits the modulus");
        let (t, u) = fast::cheb_eval_digits(av, &n.to_u64_digits(), m);
        return ChebPair {
            t: RingElement::from_canonical(BigUint::from(t), modulus),
            u: RingElement::from_canonical(BigUint::from(u), modulus),
            base: a.clone(),
            n,
        };
    }
    let d = a.discriminant();
    let mut t = RingElement::one(modulus);
    let mut u = RingElement::zero(modulus);
    let bits = n.bits();
    for i in (0..bits).rev() {
        let t2 = &(&t * &t) + &(&d * &(&u * &u));
        let tu = &t * &u;
        u = &tu + &tu;
        t = t2;
        if n.bit(i) {
            let nt = &(&t * a) + &(&d * &u);
            let nu = &t + &(&u * a);
            t = nt;
            u = nu;
        }
    }
    ChebPair {
        t,
        u,
        base: a.clone(),
        n,
    }
}

/// `T_n(a) mod m`.
pub fn cheb_t(a: &RingElement, n: impl Into<BigUint>) -> RingElement {
    cheb_eval(a, n).t
}

/// The 2×2 transfer matrix `[[a, a²−1], [1, a]]` of `ω_{n+1} = ω·ω_n` acting on
/// the column `(T_n, U_{n−1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransferMatrix {
    pub entries: [[RingElement; 2]; 2],
}

impl TransferMatrix {
    pub fn new(a: &RingElement) -> Self {
        let m = a.modulus();
        TransferMatrix {
            entries: [
                [a.clone(), a.discriminant()],
                [RingElement::one(m), a.clone()],
            ],
        }
    }

    fn identity(m: &Modulus) -> Self {
        TransferMatrix {
            entries: [
                [RingElement::one(m), RingElement::zero(m)],
                [RingElement::zero(m), RingElement::one(m)],
            ],
        }
    }

    pub fn determinant(&self) -> RingElement {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    pub fn mul(&self, other: &TransferMatrix) -> TransferMatrix {
        let a = &self.entries;
        let b = &other.entries;
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        TransferMatrix {
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        }
    }

    pub fn pow(&self, n: &BigUint) -> TransferMatrix {
        let mut acc = TransferMatrix::identity(self.entries[0][0].modulus());
        for i in (0..n.bits()).rev() {
            acc = acc.mul(&acc);
            if n.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// Applies the matrix to the column vector `(x, y)`.
    pub fn apply(&self, x: &RingElement, y: &RingElement) -> (RingElement, RingElement) {
        let e = &self.entries;
        (
            &(&e[0][0] * x) + &(&e[0][1] * y),
            &(&e[1][0] * x) + &(&e[1][1] * y),
        )
    }
}

/// `(T_n(a), U_{n−1}(a))` as `M^n·(1, 0)ᵀ`, an independent route to [`cheb_eval`].
pub fn cheb_eval_matrix(a: &RingElement, n: impl Into<BigUint>) -> ChebPair {
    let n: BigUint = n.into();
    let m = a.modulus();
    let (t, u) = TransferMatrix::new(a)
        .pow(&n)
        .apply(&RingElement::one(m), &RingElement::zero(m));
    ChebPair {
        t,
        u,
        base: a.clone(),
        n,
    }
}

/// Checks `T_n(T_k(a)) ≡ T_{nk}(a) ≡ T_k(T_n(a))`.
pub fn cheb_compose_check(
    a: &RingElement,
    n: impl Into<BigUint>,
    k: impl Into<BigUint>,
) -> Result<bool> {
    let n: BigUint = n.into();
    let k: BigUint = k.into();
    if n.is_zero() || k.is_zero() {
        return Err(usage!("cheb_compose_check needs n, k ≥ 1"));
    }
    let direct = cheb_t(a, &n * &k);
    let n_of_k = cheb_t(&cheb_t(a, k.clone()), n.clone());
    let k_of_n = cheb_t(&cheb_t(a, n), k);
    Ok(direct == n_of_k && direct == k_of_n)
}

/// Jacobi symbol `(a/n)` for odd `n ≥ 3`; negative `a` is reduced mod `n` first.
pub fn jacobi(a: impl Into<BigInt>, n: impl Into<BigUint>) -> Result<i8> {
    let a: BigInt = a.into();
    let n: BigUint = n.into();
    if n.is_even() || n < BigUint::from(3u32) {
        return Err(usage!("jacobi symbol needs an odd modulus ≥ 3, got {n}"));
    }
    if let Some(small) = n.to_u64() {
        let m = Modulus::new(small)?;
        let r = m.reduce(&a).to_u64().expect("residue below u64 modulus");
        return Ok(fast::jacobi(r, small));
    }
    let nn = BigInt::from(n.clone());
    let mut a = a.mod_floor(&nn).to_biguint().expect("nonnegative");
    let mut n = n;
    let mut sign = 1i8;
    let three = BigUint::from(3u32);
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n_mod_8 = (&n % 8u32).to_u32().unwrap_or(0);
        if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            sign = -sign;
        }
        if (&a & &three) == three && (&n & &three) == three {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    Ok(if n.is_one() { sign } else { 0 })
}
