//! Word-sized kernels. Every modulus `m` here satisfies `2 ≤ m ≤ u64::MAX`;
//! intermediate products go through `u128` so no input size overflows.
//!
//! These are the hot loops of the range searches. The arbitrary-precision
//! types in the parent module dispatch here whenever the modulus fits.

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        m - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Reduces a signed integer into `[0, m)`.
#[inline]
pub fn reduce_i128(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

/// Jacobi symbol `(a/n)` for odd `n ≥ 1`.
pub fn jacobi(a: u64, n: u64) -> i8 {
    debug_assert!(n & 1 == 1, "jacobi needs an odd modulus");
    let mut a = a % n;
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz & 1 == 1 && matches!(n & 7, 3 | 5) {
            sign = -sign;
        }
        if a & 3 == 3 && n & 3 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Jacobi symbol of a signed integer.
pub fn jacobi_i128(a: i128, n: u64) -> i8 {
    jacobi(reduce_i128(a, n), n)
}

/// `(T, U)` pair of `ω_a^k` in `ℤ/m[√(a²−1)]`, stored as `(t, u)`.
pub type Pair = (u64, u64);

/// Multiplies two pairs sharing the discriminant `d = a² − 1 (mod m)`.
#[inline]
pub fn pair_mul(x: Pair, y: Pair, d: u64, m: u64) -> Pair {
    let t = add_mod(mul_mod(x.0, y.0, m), mul_mod(d, mul_mod(x.1, y.1, m), m), m);
    let u = add_mod(mul_mod(x.0, y.1, m), mul_mod(x.1, y.0, m), m);
    (t, u)
}

#[inline]
fn pair_sqr(x: Pair, d: u64, m: u64) -> Pair {
    let t = add_mod(mul_mod(x.0, x.0, m), mul_mod(d, mul_mod(x.1, x.1, m), m), m);
    let u = mul_mod(2 % m, mul_mod(x.0, x.1, m), m);
    (t, u)
}

/// `(T_n(a), U_{n−1}(a)) mod m` by left-to-right binary powering of `ω_a`.
pub fn cheb_eval(a: u64, n: u64, m: u64) -> Pair {
    cheb_eval_digits(a, &[n], m)
}

/// As [`cheb_eval`] with the exponent given as little-endian 64-bit digits.
pub fn cheb_eval_digits(a: u64, digits: &[u64], m: u64) -> Pair {
    let a = a % m;
    let d = sub_mod(mul_mod(a, a, m), 1 % m, m);
    let omega = (a, 1 % m);
    let mut acc = (1 % m, 0);
    for &digit in digits.iter().rev() {
        for bit in (0..64).rev() {
            acc = pair_sqr(acc, d, m);
            if (digit >> bit) & 1 == 1 {
                acc = pair_mul(acc, omega, d, m);
            }
        }
    }
    acc
}

/// `T_n(a) mod m` only.
#[inline]
pub fn cheb_t(a: u64, n: u64, m: u64) -> u64 {
    cheb_eval(a, n, m).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_small_table() {
        // (2/23) = 1 since 5² ≡ 2
        assert_eq!(jacobi(2, 23), 1);
        assert_eq!(jacobi(5, 23), -1);
        assert_eq!(jacobi(0, 23), 0);
        assert_eq!(jacobi(3, 9), 0);
        assert_eq!(jacobi(2, 15), 1);
        assert_eq!(jacobi(7, 15), -1);
        assert_eq!(jacobi_i128(-1, 23), -1);
        assert_eq!(jacobi_i128(-1, 13), 1);
    }

    #[test]
    fn omega_to_the_one() {
        assert_eq!(cheb_eval(2, 1, 101), (2, 1));
        assert_eq!(cheb_eval(19, 24, 23), (1, 0));
        assert_eq!(cheb_eval(7, 0, 10), (1, 0));
    }

    #[test]
    fn near_max_modulus_does_not_overflow() {
        let m = u64::MAX - 58; // prime
        let (t, u) = cheb_eval(m - 2, 1 << 40, m);
        let d = sub_mod(mul_mod(m - 2, m - 2, m), 1, m);
        let pell = sub_mod(mul_mod(t, t, m), mul_mod(d, mul_mod(u, u, m), m), m);
        assert_eq!(pell, 1);
    }
}
