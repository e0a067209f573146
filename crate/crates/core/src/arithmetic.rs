//! Exact 64-bit integer arithmetic: gcd, modular exponentiation and
//! inversion, deterministic primality, factorization, and safe-prime
//! generation.
//!
//! All modular products go through 128-bit intermediates, so every operation
//! is exact for moduli up to 2^63. Factorization terminates for every 64-bit
//! input: trial division strips small primes, a deterministic Brent-cycle
//! splitter handles the rest, and every final factor is certified prime.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Greatest common divisor by the binary algorithm.
///
/// The convention `gcd(0, n) = n` is load-bearing for the totient
/// definitions: it makes `(m - 1) / 2 = 0` fail the unit test for every
/// modulus greater than 1.
pub fn gcd(a: u64, b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    let mut a = a >> a.trailing_zeros();
    let mut b = b >> b.trailing_zeros();
    while a != b {
        if a < b {
            std::mem::swap(&mut a, &mut b);
        }
        a -= b;
        a >>= a.trailing_zeros();
    }
    a << shift
}

/// `a * b mod m` without overflow.
#[inline]
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(m > 0);
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod modulus` by square-and-multiply. `exp = 0` yields `1 mod modulus`.
///
/// Panics if `modulus` is zero; a zero modulus is a caller bug, like division
/// by zero.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be nonzero");
    if modulus == 1 {
        return 0;
    }
    let mut base = base % modulus;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, modulus);
        }
        base = mod_mul(base, base, modulus);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of `a` modulo `m` via the extended Euclidean
/// algorithm. Requires `gcd(a, m) = 1`; the result lies in `[1, m)`.
pub fn mod_inverse(a: u64, m: u64) -> Result<u64> {
    assert!(m >= 2, "modulus must be at least 2");
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotAUnit { value: a % m, modulus: m });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Witnesses sufficient for a deterministic Miller–Rabin verdict on all
/// 64-bit inputs.
const MILLER_RABIN_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality for every `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MILLER_RABIN_WITNESSES {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Canonical prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing and the product of `prime^exponent`
/// reconstructs the input exactly. `n = 1` carries an empty factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct prime divisors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Splits `n = 2^e * m` with `m` odd, returning `e` and the
    /// factorization of `m`.
    pub fn split_two_adic(&self) -> (u32, Factorization) {
        match self.factors.first() {
            Some(&(2, e)) => {
                let odd = Factorization {
                    n: self.n >> e,
                    factors: self.factors[1..].to_vec(),
                };
                (e, odd)
            }
            _ => (0, self.clone()),
        }
    }
}

/// Trial-division bound; factors below this are stripped directly and the
/// remainder goes to the cycle splitter.
const TRIAL_DIVISION_BOUND: u64 = 1024;

/// Canonical factorization of `n >= 1`. Terminates for all 64-bit inputs.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let original = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut n = n;

    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };

    push(2, &mut n);
    let mut d = 3u64;
    while d < TRIAL_DIVISION_BOUND && d * d <= n {
        push(d, &mut n);
        d += 2;
    }

    if n > 1 {
        let mut large = Vec::new();
        split_into_primes(n, &mut large);
        large.sort_unstable();
        for p in large {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }

    debug_assert_eq!(
        factors.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e)),
        original
    );
    Factorization { n: original, factors }
}

/// Recursively splits `n` (free of factors below the trial bound) into
/// certified primes.
fn split_into_primes(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = brent_rho(n);
    split_into_primes(d, out);
    split_into_primes(n / d, out);
}

/// Brent's cycle-finding variant of the rho splitter. Deterministic: the
/// polynomial offset steps through c = 1, 2, 3, ... until a nontrivial
/// divisor appears, so identical inputs always factor identically.
fn brent_rho(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n));
    if n % 2 == 0 {
        return 2;
    }
    for c in 1..64 {
        if let Some(d) = brent_rho_try(n, c) {
            return d;
        }
    }
    // With 63 polynomial choices exhausted (never observed for 64-bit
    // composites), fall back to plain trial division.
    let mut d = 3;
    while n % d != 0 {
        d += 2;
    }
    d
}

fn brent_rho_try(n: u64, c: u64) -> Option<u64> {
    let step = |x: u64| (mod_mul(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut d = 1u64;
    let (mut x, mut ys) = (y, y);
    let m = 128;
    let mut r = 1u64;
    let mut q = 1u64;
    while d == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && d == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = step(y);
                q = mod_mul(q, x.abs_diff(y), n);
            }
            d = gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if d == n {
        // Backtrack one step at a time to recover the factor.
        loop {
            ys = step(ys);
            d = gcd(x.abs_diff(ys), n);
            if d > 1 {
                break;
            }
        }
    }
    (d != n).then_some(d)
}

/// Generates a safe prime `p = 2q + 1` (with `q` prime) of exactly `bits`
/// bits. Deterministic for a fixed seed; retries internally until success.
///
/// `bits` must lie in `[4, 62]` so that all modular arithmetic on `p` and
/// squares of `p` stays within 128-bit intermediates.
pub fn gen_safe_prime(bits: u32, seed: u64) -> u64 {
    assert!((4..=62).contains(&bits), "bits must lie in [4, 62]");
    let mut rng = SplitMix64::new(seed);
    let lo = 1u64 << (bits - 1);
    let hi = (1u64 << bits) - 1;
    loop {
        // Safe primes above 7 are 3 mod 4 (q must be odd), so force the two
        // low bits along with the top bit.
        let p = rng.range_inclusive(lo, hi) | lo | 3;
        if is_prime(p) && is_prime((p - 1) / 2) {
            return p;
        }
    }
}
