//! Exact integer arithmetic over any unsigned primitive integer: primality,
//! factorization, prime powers.
//!
//! Everything here is generic over [`Integer`]; the crate root fixes `u128`
//! for the public aliases, while tests also exercise `u64` and `u32`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// Unsigned primitive integers usable as degrees and vertex labels.
pub trait Integer: PrimInt + Unsigned + Hash + Debug + Display + Send + Sync + 'static {}

impl<T> Integer for T where T: PrimInt + Unsigned + Hash + Debug + Display + Send + Sync + 'static {}

/// Trial division runs up to this bound before switching to Miller-Rabin and Pollard rho.
const TRIAL_BOUND: u32 = 1 << 16;

/// Bases for Miller-Rabin. The first thirteen are a proven deterministic set below 3.3e24;
/// the extra ones only strengthen the test beyond that.
const WITNESSES: [u8; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

#[inline]
fn small<T: Integer>(v: u32) -> T {
    T::from(v).expect("small constant fits every unsigned primitive")
}

fn trial_bound<T: Integer>() -> T {
    T::from(TRIAL_BOUND).unwrap_or_else(T::max_value)
}

fn add_mod<T: Integer>(a: T, b: T, m: T) -> T {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

/// `a * b mod m` without overflow, for any `m > 0`.
pub fn mul_mod<T: Integer>(a: T, b: T, m: T) -> T {
    let (a, mut b) = (a % m, b % m);
    if let Some(p) = a.checked_mul(&b) {
        return p % m;
    }
    let mut acc = T::zero();
    let mut base = a;
    while b > T::zero() {
        if b & T::one() == T::one() {
            acc = add_mod(acc, base, m);
        }
        base = add_mod(base, base, m);
        b = b >> 1;
    }
    acc
}

pub fn pow_mod<T: Integer>(base: T, mut exp: T, m: T) -> T {
    if m == T::one() {
        return T::zero();
    }
    let mut result = T::one();
    let mut base = base % m;
    while exp > T::zero() {
        if exp & T::one() == T::one() {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp = exp >> 1;
    }
    result
}

pub fn gcd<T: Integer>(mut a: T, mut b: T) -> T {
    while b != T::zero() {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// `base^exp`, or `None` on overflow.
pub fn checked_pow<T: Integer>(base: T, exp: u32) -> Option<T> {
    num_traits::checked_pow(base, exp as usize)
}

pub fn is_power_of_two<T: Integer>(n: T) -> bool {
    n > T::zero() && n.count_ones() == 1
}

fn isqrt<T: Integer>(n: T) -> T {
    if n < small(2) {
        return n;
    }
    // Newton iteration from an upper bound that cannot overflow.
    let bits = T::zero().count_zeros() - n.leading_zeros();
    let mut x = T::one() << (bits.div_ceil(2) as usize);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

fn miller_rabin<T: Integer>(n: T) -> bool {
    let one = T::one();
    let n_minus_one = n - one;
    let shift = n_minus_one.trailing_zeros();
    let d = n_minus_one >> shift as usize;
    'witness: for &w in WITNESSES.iter() {
        let a = small::<T>(w as u32);
        if a % n == T::zero() {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..shift {
            x = mul_mod(x, x, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime<T: Integer>(n: T) -> bool {
    if n < small(2) {
        return false;
    }
    for &p in WITNESSES.iter() {
        let p = small::<T>(p as u32);
        if n == p {
            return true;
        }
        if n % p == T::zero() {
            return false;
        }
    }
    // No prime factor up to 71, so anything below 73^2 is prime.
    if n < small(73 * 73) {
        return true;
    }
    miller_rabin(n)
}

/// Finds a nontrivial factor of an odd composite `n` (Pollard rho, Floyd cycle finding).
fn pollard_rho<T: Integer>(n: T) -> T {
    let one = T::one();
    let mut c = one;
    loop {
        let step = |x: T| add_mod(mul_mod(x, x, n), c, n);
        let (mut x, mut y) = (small::<T>(2), small::<T>(2));
        let mut d = one;
        while d == one {
            x = step(x);
            y = step(step(y));
            let diff = if x > y { x - y } else { y - x };
            d = gcd(diff, n);
        }
        if d != n {
            return d;
        }
        c = c + one;
    }
}

fn split_large<T: Integer>(n: T, out: &mut Vec<T>) {
    if n == T::one() {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Prime factorization with multiplicity, ascending. `factorize(1)` is empty.
///
/// Trial division handles every factor below 2^16; a cofactor left over is
/// either certified prime or split with Pollard rho.
pub fn factorize<T: Integer>(mut n: T) -> Vec<T> {
    assert!(n > T::zero(), "factorize requires n >= 1");
    let mut out = Vec::new();
    for p in [2u32, 3] {
        let p = small::<T>(p);
        while n % p == T::zero() {
            out.push(p);
            n = n / p;
        }
    }
    let trial = trial_bound::<T>();
    let bound = trial.min(isqrt(n));
    let mut limit = bound;
    let mut k = small::<T>(5);
    let six = small::<T>(6);
    let two = small::<T>(2);
    while k <= limit {
        for f in [k, k + two] {
            while n % f == T::zero() {
                out.push(f);
                n = n / f;
                limit = limit.min(isqrt(n));
            }
        }
        k = k + six;
    }
    if n > T::one() {
        let fully_trialled = k > isqrt(n) || trial.checked_mul(&trial).is_some_and(|sq| n < sq);
        if fully_trialled {
            out.push(n);
        } else {
            split_large(n, &mut out);
        }
    }
    out.sort();
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn distinct_prime_factors<T: Integer>(n: T) -> Vec<T> {
    let mut f = factorize(n);
    f.dedup();
    f
}

/// `Some((p, m))` when `q = p^m` for a prime `p` and `m >= 1`.
pub fn prime_power<T: Integer>(q: T) -> Option<(T, u32)> {
    if q < small(2) {
        return None;
    }
    let factors = factorize(q);
    let p = factors[0];
    if factors.iter().all(|&f| f == p) {
        Some((p, factors.len() as u32))
    } else {
        None
    }
}
