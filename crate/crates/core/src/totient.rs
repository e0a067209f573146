//! Totient functions: Euler's phi, Schemmel's count of consecutive units,
//! and the totient variant `T` that counts odd units whose half-shift is
//! also a unit.
//!
//! `T(n)` is the number of `m` in `[1, n]` with `gcd(m, n) = 1` and
//! `gcd((m - 1) / 2, n) = 1`. Membership requires `m` odd: `(m - 1) / 2`
//! must be an integer. `T(1) = 0` by convention; see [`T_OF_ONE`].
//!
//! Two independent routes are provided: brute-force oracles ([`t_oracle`],
//! [`tr_oracle`]) that count literally from the definition, and a
//! closed-form evaluator ([`t_evaluate`]) that dispatches on the shape of
//! `n = 2^e * m` and returns either an exact value or a constrained range.
//! The oracles are ground truth; the evaluator is the object under test in
//! the verification sweeps.

use serde::Serialize;

use crate::arithmetic::{factorize, gcd, Factorization};

/// The convention used for `T(1)`.
///
/// An argument can be made for `T(1) = 1` (the defining count over `[1, 1]`
/// is 1 when `gcd(0, 1) = 1` is accepted), but this crate fixes `T(1) = 0`,
/// consistent with `T(2) = 0` and the evaluator's trivial case. The
/// alternative is documented here rather than implemented.
pub const T_OF_ONE: u64 = 0;

/// Euler's totient from a factorization: the number of units modulo `n`.
pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Schemmel's totient `S_r(n)`: the number of runs of `r` consecutive units
/// modulo `n`, computed as `n * prod(1 - r/p)` over the prime divisors.
///
/// If any prime divisor is at most `r`, every window of `r` consecutive
/// integers contains one of its multiples, so the count is 0. `S_r(1) = 1`.
pub fn schemmel(r: u64, f: &Factorization) -> u64 {
    assert!(r >= 1, "r must be at least 1");
    let mut acc = 1u64;
    for &(p, e) in f.factors() {
        if p <= r {
            return 0;
        }
        acc *= p.pow(e - 1) * (p - r);
    }
    acc
}

/// Shorthand for `S_2`, the density the `T` formulas are built from.
pub fn schemmel_pairs(f: &Factorization) -> u64 {
    schemmel(2, f)
}

/// Evaluates the inclusion-exclusion expansion of `S(n)` term by term:
/// the alternating sum of `2^k * n / (p_1 ... p_k)` over subsets of the
/// distinct prime divisors. Each term is an exact integer because the
/// primes divide `n`.
///
/// Only meaningful for odd `n > 1`; the result always equals
/// `schemmel(2, f)`, which is what the identity tests assert.
pub fn schemmel_expansion(f: &Factorization) -> u64 {
    let n = f.n();
    assert!(n > 1, "expansion requires n > 1");
    assert!(n % 2 == 1, "expansion requires odd n");
    let primes: Vec<u64> = f.primes().collect();
    let omega = primes.len();
    let mut acc: i128 = 0;
    for mask in 0u32..(1 << omega) {
        let k = mask.count_ones();
        let mut divisor = 1u64;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                divisor *= p;
            }
        }
        let term = (n / divisor) as i128 * (1i128 << k);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(acc >= 0);
    acc as u64
}

/// Brute-force oracle for `T(n)`: a direct count of the defining condition.
///
/// Counts odd `m` in `[1, n]` with `gcd(m, n) = 1` and
/// `gcd((m - 1) / 2, n) = 1`. Divisibility is tracked with incrementally
/// updated residues instead of per-`m` gcd calls, but every candidate `m`
/// is still visited: this is enumeration, not a formula.
pub fn t_oracle(n: u64) -> u64 {
    if n <= 2 {
        return 0;
    }
    let even = n % 2 == 0;
    let odd_primes: Vec<u64> = factorize(n).primes().filter(|&p| p != 2).collect();
    let k = odd_primes.len();

    // For even n the half-shift (m-1)/2 must itself be odd, i.e. m = 3 mod 4,
    // so the scan can step by 4. For odd n every odd m is a candidate.
    let (start, step) = if even { (3u64, 4u64) } else { (1u64, 2u64) };
    let half_step = step / 2;

    let mut m_res: Vec<u64> = odd_primes.iter().map(|&p| start % p).collect();
    let mut h_res: Vec<u64> = odd_primes.iter().map(|&p| (start / 2) % p).collect();
    let m_inc: Vec<u64> = odd_primes.iter().map(|&p| step % p).collect();
    let h_inc: Vec<u64> = odd_primes.iter().map(|&p| half_step % p).collect();

    let mut count = 0u64;
    let mut m = start;
    while m <= n {
        let mut ok = true;
        for i in 0..k {
            if m_res[i] == 0 || h_res[i] == 0 {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
        }
        for i in 0..k {
            m_res[i] += m_inc[i];
            if m_res[i] >= odd_primes[i] {
                m_res[i] -= odd_primes[i];
            }
            h_res[i] += h_inc[i];
            if h_res[i] >= odd_primes[i] {
                h_res[i] -= odd_primes[i];
            }
        }
        m = match m.checked_add(step) {
            Some(next) => next,
            None => break,
        };
    }
    count
}

/// Brute-force oracle for the generalization `T_r(n)`: counts `m` in
/// `[1, n]` with `r | (m - 1)`, `gcd(m, n) = 1`, and `gcd((m - 1) / r, n) = 1`.
///
/// Transcribed literally with gcds; `tr_oracle(2, n)` therefore doubles as
/// an independent cross-check of the residue-stepping `t_oracle`.
pub fn tr_oracle(r: u64, n: u64) -> u64 {
    assert!(r >= 2, "r must be at least 2");
    assert!(n >= 1, "n must be at least 1");
    if n == 1 {
        // Same convention as T(1) = 0.
        return 0;
    }
    let mut count = 0u64;
    let mut m = 1u64;
    while m <= n {
        if gcd(m, n) == 1 && gcd((m - 1) / r, n) == 1 {
            count += 1;
        }
        m = match m.checked_add(r) {
            Some(next) => next,
            None => break,
        };
    }
    count
}

/// Parity constraint attached to a totient evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
    Unknown,
}

impl Parity {
    pub fn of(value: u64) -> Parity {
        if value % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// For odd `n`: `T(n)` is odd exactly when `n = 1 mod 4`.
    pub fn from_odd_modulus(n: u64) -> Parity {
        debug_assert!(n % 2 == 1);
        if n % 4 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn admits(self, value: u64) -> bool {
        match self {
            Parity::Odd => value % 2 == 1,
            Parity::Even => value % 2 == 0,
            Parity::Unknown => true,
        }
    }
}

/// Which of the eight closed-form cases produced an evaluation, keyed by the
/// shape of `n = 2^e * m` with `m` odd and `omega` distinct primes in `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalRule {
    /// `n = 2^e` (including 1 and 2): exact `2^(e-2)`, zero below 4.
    PowerOfTwo,
    /// `e >= 2`, `m > 1`: exact `2^(e-2) * S(m)`.
    DivisibleByFour,
    /// `e = 1`, `m = p^f`, `p = 3 mod 4`: exact `(S(m) - 1) / 2`.
    #[serde(rename = "twice-prime-power-3-mod-4")]
    TwicePrimePower3Mod4,
    /// `e = 1`, `m = p^f`, `p = 1 mod 4`: exact `(S(m) + 1) / 2`.
    #[serde(rename = "twice-prime-power-1-mod-4")]
    TwicePrimePower1Mod4,
    /// `e = 1`, `omega >= 2`: within `(3^w - 2^w + 1) / 2` of `(S(m) - 1) / 2`.
    TwiceOddComposite,
    /// `e = 0`, `omega = 1`: exact `(S(m) - 1) / 2`.
    OddPrimePower,
    /// `e = 0`, `omega = 2`: one of `(S(m) - 3) / 2` or `(S(m) + 1) / 2`.
    OddTwoPrimePowers,
    /// `e = 0`, `omega >= 3`: within `(3^w - 2^(w+1) + 1) / 2` of `(S(m) - 1) / 2`.
    OddComposite,
}

impl EvalRule {
    pub fn label(self) -> &'static str {
        match self {
            EvalRule::PowerOfTwo => "power-of-two",
            EvalRule::DivisibleByFour => "divisible-by-four",
            EvalRule::TwicePrimePower3Mod4 => "twice-prime-power-3-mod-4",
            EvalRule::TwicePrimePower1Mod4 => "twice-prime-power-1-mod-4",
            EvalRule::TwiceOddComposite => "twice-odd-composite",
            EvalRule::OddPrimePower => "odd-prime-power",
            EvalRule::OddTwoPrimePowers => "odd-two-prime-powers",
            EvalRule::OddComposite => "odd-composite",
        }
    }
}

/// Result of the closed-form evaluator: either an exact value or a
/// constrained set (bounds, parity, and sometimes an explicit candidate
/// pair).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TotientValue {
    Exact {
        value: u64,
        parity: Parity,
        rule: EvalRule,
    },
    Constrained {
        lower: u64,
        upper: u64,
        parity: Parity,
        #[serde(skip_serializing_if = "Option::is_none")]
        candidates: Option<Vec<u64>>,
        rule: EvalRule,
    },
}

impl TotientValue {
    pub fn exact(&self) -> Option<u64> {
        match self {
            TotientValue::Exact { value, .. } => Some(*value),
            TotientValue::Constrained { .. } => None,
        }
    }

    pub fn lower_bound(&self) -> u64 {
        match self {
            TotientValue::Exact { value, .. } => *value,
            TotientValue::Constrained { lower, .. } => *lower,
        }
    }

    pub fn upper_bound(&self) -> u64 {
        match self {
            TotientValue::Exact { value, .. } => *value,
            TotientValue::Constrained { upper, .. } => *upper,
        }
    }

    pub fn parity(&self) -> Parity {
        match self {
            TotientValue::Exact { parity, .. } | TotientValue::Constrained { parity, .. } => {
                *parity
            }
        }
    }

    pub fn rule(&self) -> EvalRule {
        match self {
            TotientValue::Exact { rule, .. } | TotientValue::Constrained { rule, .. } => *rule,
        }
    }

    pub fn candidates(&self) -> Option<&[u64]> {
        match self {
            TotientValue::Exact { .. } => None,
            TotientValue::Constrained { candidates, .. } => candidates.as_deref(),
        }
    }

    /// Whether a ground-truth value is consistent with this evaluation:
    /// equality for exact values; bounds, parity, and candidate membership
    /// for constrained ones.
    pub fn admits(&self, truth: u64) -> bool {
        match self {
            TotientValue::Exact { value, .. } => truth == *value,
            TotientValue::Constrained { lower, upper, parity, candidates, .. } => {
                if truth < *lower || truth > *upper || !parity.admits(truth) {
                    return false;
                }
                match candidates {
                    Some(set) => set.contains(&truth),
                    None => true,
                }
            }
        }
    }
}

/// Closed-form / bounded evaluation of `T(n)` from a factorization.
///
/// Writes `n = 2^e * m` with `m` odd and dispatches on `(e, omega(m))`.
/// Takes a [`Factorization`] rather than a raw integer so the factoring
/// cost is explicit and reusable across calls.
pub fn t_evaluate(f: &Factorization) -> TotientValue {
    let n = f.n();
    assert!(n >= 1);
    let (e, odd) = f.split_two_adic();
    let m = odd.n();
    let omega = odd.omega() as u32;

    if n <= 2 {
        return exact(0, EvalRule::PowerOfTwo);
    }
    if m == 1 {
        return exact(1u64 << (e - 2), EvalRule::PowerOfTwo);
    }

    let s = schemmel(2, &odd);
    match e {
        0 => match omega {
            1 => exact((s - 1) / 2, EvalRule::OddPrimePower),
            2 => {
                let low = s.saturating_sub(3) / 2;
                let high = (s + 1) / 2;
                TotientValue::Constrained {
                    lower: low,
                    upper: high,
                    parity: Parity::from_odd_modulus(n),
                    candidates: Some(vec![low, high]),
                    rule: EvalRule::OddTwoPrimePowers,
                }
            }
            _ => {
                let center = (s - 1) / 2;
                let radius = (3u64.pow(omega) - 2u64.pow(omega + 1) + 1) / 2;
                TotientValue::Constrained {
                    lower: center.saturating_sub(radius),
                    upper: center + radius,
                    parity: Parity::from_odd_modulus(n),
                    candidates: None,
                    rule: EvalRule::OddComposite,
                }
            }
        },
        1 => {
            if omega == 1 {
                let p = odd.primes().next().expect("odd part has a prime");
                if p % 4 == 3 {
                    exact((s - 1) / 2, EvalRule::TwicePrimePower3Mod4)
                } else {
                    exact((s + 1) / 2, EvalRule::TwicePrimePower1Mod4)
                }
            } else {
                // No parity claim is made for 2 * (odd composite).
                let center = (s - 1) / 2;
                let radius = (3u64.pow(omega) - 2u64.pow(omega) + 1) / 2;
                TotientValue::Constrained {
                    lower: center.saturating_sub(radius),
                    upper: center + radius,
                    parity: Parity::Unknown,
                    candidates: None,
                    rule: EvalRule::TwiceOddComposite,
                }
            }
        }
        _ => exact((1u64 << (e - 2)) * s, EvalRule::DivisibleByFour),
    }
}

fn exact(value: u64, rule: EvalRule) -> TotientValue {
    TotientValue::Exact { value, parity: Parity::of(value), rule }
}
