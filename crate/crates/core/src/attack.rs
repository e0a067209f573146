//! Brute-force collision enumeration for the variant cipher.
//!
//! A known-plaintext attacker testing every `(y, f)` against a target
//! `(g x)^(e-1)` faces a haystack of indistinguishable matches: the number
//! of colliding pairs is bounded below by `T(n)` for even group order `n`
//! and by `S(n)` for odd order. This module measures those landscapes
//! exhaustively and also builds explicit solutions to `w^(f-1) = c` where a
//! construction exists.

use serde::Serialize;

use crate::arithmetic::{factorize, gcd, is_prime, mod_inverse, mod_mul, mod_pow};
use crate::error::{Error, Result};
use crate::totient::{schemmel, t_oracle};
use crate::variant_group::{FiniteGroup, ENUMERATION_CAP};

/// Pair lists larger than this are dropped from reports; only counts are kept.
pub const PAIR_LIST_LIMIT: usize = 10_000;

/// Outcome of exhaustively enumerating collision pairs against a target.
#[derive(Debug, Clone, Serialize)]
pub struct CollisionReport {
    /// Group order.
    pub order: u64,
    /// The target value `(g x)^(e-1)`.
    pub target: u64,
    /// Number of pairs `(y, f)` with `(g y)^(f-1)` equal to the target.
    pub pair_count: u64,
    /// Number of distinct exponents `f` contributing at least one pair.
    pub exponent_count: u64,
    /// The colliding pairs themselves, kept only below [`PAIR_LIST_LIMIT`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(u64, u64)>>,
    /// `T(order)` for even order, `S(order)` for odd.
    pub theoretical_lower_bound: u64,
    pub bound_satisfied: bool,
}

/// The collision lower bound for a group of order `n`: `T(n)` when `n` is
/// even, `S(n)` when odd.
pub fn collision_lower_bound(n: u64) -> u64 {
    if n % 2 == 0 {
        t_oracle(n)
    } else {
        schemmel(2, &factorize(n))
    }
}

/// Enumerates every `(y, f)` with `y` in the group and `f` a unit modulo
/// the order (including `f = 1`), counting those with
/// `(g y)^(f-1) = (g x)^(e-1)`. The original `(x, e)` always collides with
/// itself, so the count is at least 1.
pub fn enumerate_collision_pairs<G: FiniteGroup + ?Sized>(
    group: &G,
    g: u64,
    x: u64,
    e: u64,
) -> Result<CollisionReport> {
    group.check_element(g)?;
    group.check_element(x)?;
    let n = group.order();
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded { order: n, cap: ENUMERATION_CAP });
    }
    if gcd(e, n) != 1 {
        return Err(Error::NotAUnit { value: e % n, modulus: n });
    }

    let target = group.pow(group.compose(g, x), e - 1);
    let exponents: Vec<u64> = (1..=n).filter(|&f| gcd(f, n) == 1).collect();
    let elements = group.elements()?;

    let mut pairs = Vec::new();
    let mut pair_count = 0u64;
    let mut exponent_count = 0u64;
    for &f in &exponents {
        let mut f_hit = false;
        for &y in &elements {
            if group.pow(group.compose(g, y), f - 1) == target {
                pair_count += 1;
                f_hit = true;
                if pairs.len() < PAIR_LIST_LIMIT {
                    pairs.push((y, f));
                }
            }
        }
        if f_hit {
            exponent_count += 1;
        }
    }

    let bound = collision_lower_bound(n);
    Ok(CollisionReport {
        order: n,
        target,
        pair_count,
        exponent_count,
        pairs: (pair_count as usize <= PAIR_LIST_LIMIT).then_some(pairs),
        theoretical_lower_bound: bound,
        bound_satisfied: pair_count >= bound,
    })
}

/// Exhaustively counts solutions of `w^(f-1) = c` over units `f > 1`.
///
/// Returns `(exponent_count, pair_count)`: the number of exponents `f` for
/// which some `w` solves the equation, and the total number of solving
/// pairs `(w, f)`. Unlike [`enumerate_collision_pairs`], `f = 1` is
/// excluded here; both conventions are used deliberately, side by side.
pub fn count_solvable_exponents<G: FiniteGroup + ?Sized>(group: &G, c: u64) -> Result<(u64, u64)> {
    group.check_element(c)?;
    let n = group.order();
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded { order: n, cap: ENUMERATION_CAP });
    }
    let elements = group.elements()?;
    let mut exponent_count = 0u64;
    let mut pair_count = 0u64;
    for f in 2..=n {
        if gcd(f, n) != 1 {
            continue;
        }
        let solutions = elements.iter().filter(|&&w| group.pow(w, f - 1) == c).count() as u64;
        if solutions > 0 {
            exponent_count += 1;
            pair_count += solutions;
        }
    }
    Ok((exponent_count, pair_count))
}

/// Builds a solution of `w^(f-1) = c` without enumeration, when one of the
/// closed constructions applies; `None` means the caller must fall back to
/// exhaustive search.
///
/// * Odd order: if `f - 1` is a unit with inverse `k`, then `c^k` solves.
/// * Even order: `f - 1` is even; strip twos until `(f-1)/2^m` is a unit
///   with inverse `k`. A chain element `h` with `h^(2^m) = c` (a plain
///   square root when `m = 1`, the repeated-root chain for prime moduli
///   `p = 3 mod 4` otherwise) gives the solution `h^k`.
pub fn construct_solution<G: FiniteGroup + ?Sized>(group: &G, c: u64, f: u64) -> Result<Option<u64>> {
    group.check_element(c)?;
    let n = group.order();
    if f <= 1 {
        return Err(Error::ExponentTooSmall { exponent: f });
    }
    if gcd(f, n) != 1 {
        return Err(Error::NotAUnit { value: f % n, modulus: n });
    }

    if n % 2 == 1 {
        if gcd(f - 1, n) != 1 {
            return Ok(None);
        }
        let k = mod_inverse((f - 1) % n, n)?;
        return Ok(Some(group.pow(c, k)));
    }

    let mut d = f - 1;
    let mut levels = 0u32;
    while gcd(d, n) != 1 {
        if d % 2 != 0 {
            return Ok(None); // stuck on an odd non-unit part
        }
        d /= 2;
        levels += 1;
    }
    let Some(h) = group.nested_sqrt(c, levels) else {
        return Ok(None);
    };
    let k = mod_inverse(d % n, n)?;
    Ok(Some(group.pow(h, k)))
}

/// Square root modulo a prime `p = 3 mod 4` by exponentiation: returns
/// `c^((p+1)/4)` when its square is `c`, or `None` for a non-residue.
pub fn sqrt_mod(c: u64, p: u64) -> Result<Option<u64>> {
    if p % 4 != 3 || !is_prime(p) {
        return Err(Error::SqrtUnsupportedModulus { modulus: p });
    }
    let c = c % p;
    let root = mod_pow(c, (p + 1) / 4, p);
    Ok((mod_mul(root, root, p) == c).then_some(root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variant_group::{AdditiveCyclic, UnitsModN};

    #[test]
    fn sqrt_mod_known_values() {
        assert_eq!(sqrt_mod(3, 11).unwrap(), Some(5));
        assert_eq!(sqrt_mod(1, 23).unwrap(), Some(1));
        // squares mod 11 are {1, 3, 4, 5, 9}
        assert_eq!(sqrt_mod(2, 11).unwrap(), None);
        assert!(matches!(
            sqrt_mod(3, 13),
            Err(Error::SqrtUnsupportedModulus { modulus: 13 })
        ));
        assert!(sqrt_mod(3, 15).is_err());
    }

    #[test]
    fn sqrt_mod_exhaustive_small_primes() {
        for p in [7u64, 11, 23, 47, 59, 83] {
            let squares: std::collections::HashSet<u64> =
                (1..p).map(|w| mod_mul(w, w, p)).collect();
            for c in 1..p {
                match sqrt_mod(c, p).unwrap() {
                    Some(s) => {
                        assert_eq!(mod_mul(s, s, p), c);
                        assert!(squares.contains(&c));
                    }
                    None => assert!(!squares.contains(&c), "missed root of {c} mod {p}"),
                }
            }
        }
    }

    #[test]
    fn collision_bound_uses_parity_of_order() {
        assert_eq!(collision_lower_bound(10), 2); // T(10)
        assert_eq!(collision_lower_bound(22), 4); // T(22) = (23-7)/4
        assert_eq!(collision_lower_bound(9), 3); // S(9)
        assert_eq!(collision_lower_bound(15), 3); // S(15)
    }

    #[test]
    fn collision_pairs_contain_the_original_key() {
        let group = UnitsModN::new(11);
        let report = enumerate_collision_pairs(&group, 2, 3, 7).unwrap();
        assert!(report.bound_satisfied);
        assert!(report.pair_count >= 2);
        let pairs = report.pairs.as_ref().unwrap();
        assert!(pairs.contains(&(3, 7)), "original key missing: {pairs:?}");
        assert_eq!(report.pair_count as usize, pairs.len());
        assert!(report.pair_count >= report.exponent_count);
    }

    #[test]
    fn collision_pairs_meet_bound_for_all_keys_mod_11() {
        let group = UnitsModN::new(11);
        let elements = group.elements().unwrap();
        for &g in &elements {
            for &x in &elements {
                for e in [3u64, 7, 9] {
                    let report = enumerate_collision_pairs(&group, g, x, e).unwrap();
                    assert!(
                        report.pair_count >= 2,
                        "g={g} x={x} e={e}: {} pairs",
                        report.pair_count
                    );
                }
            }
        }
    }

    #[test]
    fn collision_pairs_odd_order_meets_schemmel_bound() {
        let group = AdditiveCyclic::new(9);
        // any (g, x, e) with e a unit mod 9
        let report = enumerate_collision_pairs(&group, 4, 2, 5).unwrap();
        assert_eq!(report.theoretical_lower_bound, 3);
        assert!(report.bound_satisfied, "only {} pairs", report.pair_count);
    }

    #[test]
    fn collision_pairs_rejects_non_unit_exponent() {
        let group = UnitsModN::new(11);
        assert!(matches!(
            enumerate_collision_pairs(&group, 2, 3, 5),
            Err(Error::NotAUnit { value: 5, modulus: 10 })
        ));
    }

    #[test]
    fn safe_prime_squares_give_exactly_p_minus_5_pairs() {
        let p = 11u64;
        let group = UnitsModN::new(p);
        let (exponents, pairs) = count_solvable_exponents(&group, 3).unwrap();
        assert_eq!(pairs, p - 5);
        assert_eq!(exponents, 3);
        // non-square
        let (exponents, pairs) = count_solvable_exponents(&group, 2).unwrap();
        assert_eq!(pairs, 0);
        assert_eq!(exponents, 0);
    }

    #[test]
    fn additive_group_every_target_meets_schemmel() {
        for m in [9u64, 15] {
            let group = AdditiveCyclic::new(m);
            let s = schemmel(2, &factorize(m));
            for c in 0..m {
                let (exponents, _) = count_solvable_exponents(&group, c).unwrap();
                assert!(exponents >= s, "c={c} mod {m}: {exponents} < {s}");
            }
        }
    }

    #[test]
    fn construct_solution_odd_order() {
        let group = AdditiveCyclic::new(15);
        for f in 2..15u64 {
            if gcd(f, 15) != 1 {
                continue;
            }
            for c in 0..15u64 {
                if let Some(w) = construct_solution(&group, c, f).unwrap() {
                    assert_eq!(group.pow(w, f - 1), c, "f={f} c={c}");
                } else {
                    assert_ne!(gcd(f - 1, 15), 1, "construction should apply for f={f}");
                }
            }
        }
    }

    #[test]
    fn construct_solution_even_order_units() {
        // f = 7 mod 10: (f-1)/2 = 3 is a unit with inverse 7; c = 4 = 2^2
        let group = UnitsModN::new(11);
        let w = construct_solution(&group, 4, 7).unwrap().unwrap();
        assert_eq!(mod_pow(w, 6, 11), 4);

        // every unit f > 1 and every square c is constructible for p = 3 mod 4,
        // and the negated solution works too (f - 1 is even)
        for p in [11u64, 23] {
            let group = UnitsModN::new(p);
            let n = p - 1;
            for f in 2..n {
                if gcd(f, n) != 1 {
                    continue;
                }
                for w0 in 1..p {
                    let c = mod_mul(w0, w0, p);
                    let w = construct_solution(&group, c, f)
                        .unwrap()
                        .unwrap_or_else(|| panic!("no construction for c={c} f={f} p={p}"));
                    assert_eq!(mod_pow(w, f - 1, p), c, "p={p} f={f} c={c}");
                    assert_eq!(mod_pow(group.negate(w), f - 1, p), c, "negated, p={p} f={f}");
                }
            }
        }
    }

    #[test]
    fn construct_solution_even_order_generic_group() {
        // additive group of even order: the generic square-root fallback
        let group = AdditiveCyclic::new(16);
        for f in [3u64, 5, 7, 9, 11, 13, 15] {
            for c in 0..16u64 {
                if let Some(w) = construct_solution(&group, c, f).unwrap() {
                    assert_eq!(group.pow(w, f - 1), c, "f={f} c={c}");
                }
            }
        }
        // f = 3: d strips to 1, one sqrt level; even targets are halvable
        let w = construct_solution(&group, 6, 3).unwrap();
        assert!(w.is_some(), "6 = 2w mod 16 is solvable");
    }

    #[test]
    fn construct_solution_rejects_bad_exponents() {
        let group = UnitsModN::new(11);
        assert!(matches!(
            construct_solution(&group, 4, 1),
            Err(Error::ExponentTooSmall { exponent: 1 })
        ));
        assert!(matches!(
            construct_solution(&group, 4, 5),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn construct_solution_nonsquare_yields_none() {
        let group = UnitsModN::new(11);
        // 2 is not a square mod 11, so no f can be satisfied
        assert_eq!(construct_solution(&group, 2, 7).unwrap(), None);
    }
}
