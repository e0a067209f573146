//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `--nocapture`). Every tolerance here is exact;
//! a single violation anywhere fails the criterion.
//!
//! Run with: `cargo test --test acceptance -- --nocapture`

use rayon::prelude::*;

use variant_totient::arithmetic::{factorize, gcd, gen_safe_prime, is_prime};
use variant_totient::attack::{count_solvable_exponents, enumerate_collision_pairs};
use variant_totient::lemma_lab::{check_set_lemmas, min_bezout, verify_t_range};
use variant_totient::rng::SplitMix64;
use variant_totient::totient::{schemmel, schemmel_expansion, t_evaluate, t_oracle};
use variant_totient::variant_group::{
    decrypt, encrypt, keygen, AdditiveCyclic, FiniteGroup, UnitsModN,
};

fn pass(name: &str) {
    println!("ACCEPTANCE {name}: PASS");
}

#[test]
fn c01_spot_values() {
    for (n, expected) in [(1u64, 0u64), (2, 0), (5, 1), (10, 2)] {
        assert_eq!(t_oracle(n), expected, "oracle T({n})");
        assert_eq!(
            t_evaluate(&factorize(n)).exact(),
            Some(expected),
            "evaluator T({n})"
        );
    }
    pass("c01 spot values T(1)=0 T(2)=0 T(5)=1 T(10)=2");
}

#[test]
fn c02_full_range_oracle_sweep() {
    let report = verify_t_range(1, 100_000);
    assert_eq!(report.checked, 100_000);
    assert!(
        report.passed(),
        "sweep violations: {:?}",
        &report.violations[..report.violations.len().min(10)]
    );
    pass("c02 oracle sweep 1..100000, zero violations");
}

#[test]
fn c03_prime_power_law() {
    let mut checked = 0u64;
    for p in (3..=97u64).filter(|&p| is_prime(p)) {
        let mut pe = p;
        while pe <= 1_000_000 {
            assert_eq!(
                t_oracle(pe),
                (pe - 2 * (pe / p) - 1) / 2,
                "T({p}^e) at {pe}"
            );
            checked += 1;
            pe = match pe.checked_mul(p) {
                Some(next) => next,
                None => break,
            };
        }
    }
    assert!(checked > 30);
    pass("c03 prime-power law T(p^e) = (p^e - 2p^(e-1) - 1)/2");
}

#[test]
fn c04_even_scaffolding_laws() {
    for e in 2..=18u32 {
        assert_eq!(t_oracle(1u64 << e), 1u64 << (e - 2), "T(2^{e})");
    }
    let failures: Vec<u64> = (1..=5_000u64)
        .into_par_iter()
        .map(|k| 2 * k - 1) // odd m <= 10^4
        .filter(|&m| {
            let s = schemmel(2, &factorize(m));
            if m > 1 && t_oracle(4 * m) != s {
                return true;
            }
            (2..=6u32).any(|e| t_oracle((1u64 << e) * m) != (1u64 << (e - 2)) * s)
        })
        .collect();
    assert!(failures.is_empty(), "failures at odd m = {failures:?}");
    pass("c04 even laws T(2^e), T(4m) = S(m), T(2^e m) = 2^(e-2) S(m)");
}

#[test]
fn c05_twice_prime_power_exactness() {
    let mut checked = 0u64;
    for p in (3..=50_000u64).filter(|&p| is_prime(p)) {
        let mut pf = p;
        while pf <= 50_000 {
            let s = schemmel(2, &factorize(pf));
            let expected = if p % 4 == 3 { (s - 1) / 2 } else { (s + 1) / 2 };
            assert_eq!(t_oracle(2 * pf), expected, "T(2 * {p}^f) at 2*{pf}");
            checked += 1;
            pf = match pf.checked_mul(p) {
                Some(next) => next,
                None => break,
            };
        }
    }
    assert!(checked > 5_000);
    pass("c05 2n exactness T(2 p^f) = (S(p^f) -/+ 1)/2 by p mod 4");
}

#[test]
fn c06_parity_law() {
    // n = 1 is excluded: T(1) = 0 is a convention, and the parity claim
    // concerns odd n > 1 (with the alternative convention T(1) = 1 it
    // would hold there too).
    let failures: Vec<u64> = (1..=49_999u64)
        .into_par_iter()
        .map(|k| 2 * k + 1) // odd n in (1, 10^5]
        .filter(|&n| (t_oracle(n) % 2 == 1) != (n % 4 == 1))
        .collect();
    assert!(failures.is_empty(), "parity failures at {failures:?}");
    pass("c06 parity law: T(n) odd iff n = 1 mod 4, odd 1 < n <= 100000");
}

#[test]
fn c07_lemma_oracles() {
    let failures: Vec<u64> = (1..=1000u64)
        .into_par_iter()
        .map(|k| 2 * k + 1) // odd n in [3, 2001]
        .filter(|&n| n <= 2000 && factorize(n).omega() <= 3)
        .filter(|&n| !check_set_lemmas(n).passed())
        .collect();
    assert!(failures.is_empty(), "lemma violations at n = {failures:?}");
    pass("c07 residue-set lemmas for all odd n <= 2000 with omega <= 3");
}

#[test]
fn c08_crypto_roundtrip() {
    for (i, bits) in [32u32, 36, 40, 44, 48].into_iter().enumerate() {
        let p = gen_safe_prime(bits, 0xC0FFEE + i as u64);
        let group = UnitsModN::new(p);
        let mut rng = SplitMix64::new(0xBEEF ^ p);
        for round in 0..1000 {
            let key = keygen(&group, rng.next_u64()).expect("order > 2");
            let g = group.sample(&mut rng);
            let c = encrypt(&group, &key, g).expect("valid key and plaintext");
            let back = decrypt(&group, &key, c).expect("valid ciphertext");
            assert_eq!(back, g, "roundtrip failed: p={p} round={round} key={key:?}");
        }
    }
    pass("c08 cipher roundtrip, 1000 triples over five 32-48 bit safe primes");
}

#[test]
fn c09_collision_lower_bound_instances() {
    // The safe-prime constants behind the bound
    assert_eq!(t_oracle(10), 2);
    assert_eq!(t_oracle(10), (11 - 3) / 4);
    assert_eq!(t_oracle(22), 4);
    assert_eq!(t_oracle(22), (23 - 7) / 4);

    for p in [11u64, 23, 47, 59] {
        let group = UnitsModN::new(p);
        let bound = t_oracle(p - 1);
        let mut rng = SplitMix64::new(p.wrapping_mul(0x9E3779B9));
        for _ in 0..5 {
            let g = group.sample(&mut rng);
            let key = keygen(&group, rng.next_u64()).expect("order > 2");
            let report = enumerate_collision_pairs(&group, g, key.x, key.e)
                .expect("within enumeration cap");
            assert_eq!(report.theoretical_lower_bound, bound);
            assert!(
                report.pair_count >= bound,
                "p={p} g={g} key={key:?}: {} pairs < bound {bound}",
                report.pair_count
            );
            let pairs = report.pairs.expect("small enough to keep");
            assert!(pairs.contains(&(key.x, key.e)), "original key not among collisions");
        }
    }
    pass("c09 collision pairs >= T(p-1) for p in {11, 23, 47, 59}");
}

#[test]
fn c10_safe_prime_proposition_exactness() {
    for p in [11u64, 23, 47, 59, 83] {
        let group = UnitsModN::new(p);
        let squares: std::collections::HashSet<u64> =
            (1..p).map(|w| w * w % p).collect();
        for c in 1..p {
            let (_, pair_count) = count_solvable_exponents(&group, c).expect("within cap");
            let expected = if squares.contains(&c) { p - 5 } else { 0 };
            assert_eq!(pair_count, expected, "pairs for c={c} mod {p}");
        }
    }
    pass("c10 proposition exactness: p-5 pairs per square, 0 per non-square");
}

#[test]
fn c11_odd_order_solution_counts() {
    for m in [9u64, 15, 21, 25, 105] {
        let group = AdditiveCyclic::new(m);
        let s = schemmel(2, &factorize(m));
        for c in 0..m {
            let (exponent_count, _) = count_solvable_exponents(&group, c).expect("within cap");
            if exponent_count > 0 {
                assert!(
                    exponent_count >= s,
                    "order {m}, target {c}: {exponent_count} exponents < S = {s}"
                );
            }
        }
    }
    pass("c11 odd-order solutions: exponent count >= S(m) for every solvable target");
}

#[test]
fn c12_expansion_identity() {
    let failures: Vec<u64> = (1..=49_999u64)
        .into_par_iter()
        .map(|k| 2 * k + 1) // odd n in (1, 10^5]
        .filter(|&n| {
            let f = factorize(n);
            schemmel_expansion(&f) != schemmel(2, &f)
        })
        .collect();
    assert!(failures.is_empty(), "expansion mismatches at {failures:?}");
    pass("c12 inclusion-exclusion expansion equals S(n) for odd n <= 100000");
}

#[test]
fn c13_bezout_parity_and_minimality() {
    let mut checked = 0u64;
    for p in (3..200u64).step_by(2) {
        for q in ((p + 2)..=200).step_by(2) {
            if gcd(p, q) != 1 {
                continue;
            }
            let (a, b) = min_bezout(p, q).expect("coprime odd pair");
            assert_eq!(a * p - b * q, 1, "identity for ({p}, {q})");
            assert_ne!(a % 2, b % 2, "parity for ({p}, {q})");
            let minimal = (1..a).all(|smaller| (smaller * p) % q != 1);
            assert!(minimal, "a = {a} not minimal for ({p}, {q})");
            checked += 1;
        }
    }
    assert!(checked > 2000);
    pass("c13 Bezout pairs minimal with opposite parity, odd p < q <= 200");
}
