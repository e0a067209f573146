//! Finite group abstraction, the variant construction, and the encryption
//! scheme built on it.
//!
//! A *variant* of a group replaces the product `a * b` with `a * s * b` for
//! a fixed sandwich element `s`. The result is again a group with identity
//! `s^-1` and inverse `s^-1 * g^-1 * s^-1`, isomorphic to the base group via
//! `g -> g * s^-1`. Powers in the variant have the closed form
//! `(g s)^(e-1) g` in the base group, which is what the cipher encrypts
//! under a key `(x, e)`: the ciphertext of `g` is `(g x)^(e-1) g`, and
//! decryption raises `c x` to `e^-1 mod |G|` and strips `x`.
//!
//! Elements are canonical `u64` residues; implementations validate
//! encodings at the boundary so that equality is plain integer equality.

use serde::Serialize;

use crate::arithmetic::{factorize, gcd, mod_inverse, mod_mul, mod_pow};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::totient::euler_phi;

/// Largest group order for which exhaustive enumeration is allowed.
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// A finite group on canonically encoded `u64` elements.
pub trait FiniteGroup {
    fn order(&self) -> u64;

    /// Group operation on valid elements.
    fn compose(&self, a: u64, b: u64) -> u64;

    fn identity(&self) -> u64;

    fn inverse(&self, a: u64) -> u64;

    /// Whether `a` is a canonical encoding of a group element.
    fn contains(&self, a: u64) -> bool;

    /// The exclusive upper bound of the canonical encoding range; used for
    /// validation messages and rejection sampling.
    fn encoding_bound(&self) -> u64;

    /// All elements in canonical order. Refuses when the order exceeds
    /// [`ENUMERATION_CAP`].
    fn elements(&self) -> Result<Vec<u64>>;

    /// `g` composed with itself `e` times (`e = 0` gives the identity),
    /// by square-and-multiply.
    fn pow(&self, g: u64, mut e: u64) -> u64 {
        let mut base = g;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.compose(acc, base);
            }
            base = self.compose(base, base);
            e >>= 1;
        }
        acc
    }

    /// A square root of `c` in the group, if one exists. The default scans
    /// exhaustively; implementations may override with a closed form.
    fn sqrt(&self, c: u64) -> Option<u64> {
        self.elements()
            .ok()?
            .into_iter()
            .find(|&h| self.compose(h, h) == c)
    }

    /// An element `h` with `h^(2^levels) = c`, when the group supports
    /// taking repeated square roots. The default only handles one level.
    fn nested_sqrt(&self, c: u64, levels: u32) -> Option<u64> {
        if levels == 1 {
            self.sqrt(c)
        } else {
            None
        }
    }

    /// Uniformly random element, by rejection over the encoding range.
    fn sample(&self, rng: &mut SplitMix64) -> u64 {
        loop {
            let candidate = rng.below(self.encoding_bound());
            if self.contains(candidate) {
                return candidate;
            }
        }
    }

    fn check_element(&self, a: u64) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::InvalidElement { element: a, modulus: self.encoding_bound() })
        }
    }
}

/// The multiplicative group of units modulo `modulus`, order `phi(modulus)`.
/// Elements are the least positive residues coprime to the modulus.
#[derive(Debug, Clone)]
pub struct UnitsModN {
    modulus: u64,
    order: u64,
}

impl UnitsModN {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        UnitsModN { modulus, order: euler_phi(&factorize(modulus)) }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The additive negation `modulus - a`, which is how `-w` is realized
    /// for unit groups. Only meaningful here, not for abstract groups.
    pub fn negate(&self, a: u64) -> u64 {
        debug_assert!(self.contains(a));
        self.modulus - a
    }

    fn is_prime_3_mod_4(&self) -> bool {
        self.modulus % 4 == 3 && crate::arithmetic::is_prime(self.modulus)
    }
}

impl FiniteGroup for UnitsModN {
    fn order(&self) -> u64 {
        self.order
    }

    fn compose(&self, a: u64, b: u64) -> u64 {
        mod_mul(a, b, self.modulus)
    }

    fn identity(&self) -> u64 {
        1
    }

    fn inverse(&self, a: u64) -> u64 {
        mod_inverse(a, self.modulus).expect("element validated as a unit")
    }

    fn contains(&self, a: u64) -> bool {
        a >= 1 && a < self.modulus && gcd(a, self.modulus) == 1
    }

    fn encoding_bound(&self) -> u64 {
        self.modulus
    }

    fn elements(&self) -> Result<Vec<u64>> {
        if self.order > ENUMERATION_CAP {
            return Err(Error::EnumerationCapExceeded { order: self.order, cap: ENUMERATION_CAP });
        }
        Ok((1..self.modulus).filter(|&a| gcd(a, self.modulus) == 1).collect())
    }

    fn pow(&self, g: u64, e: u64) -> u64 {
        mod_pow(g, e, self.modulus)
    }

    /// For a prime modulus `p = 3 mod 4`, the square root of a residue is
    /// `c^((p+1)/4)`; otherwise fall back to scanning.
    fn sqrt(&self, c: u64) -> Option<u64> {
        if self.is_prime_3_mod_4() {
            let root = mod_pow(c, (self.modulus + 1) / 4, self.modulus);
            return (mod_mul(root, root, self.modulus) == c % self.modulus).then_some(root);
        }
        self.elements()
            .ok()?
            .into_iter()
            .find(|&h| self.compose(h, h) == c)
    }

    /// Builds `h` with `h^(2^levels) = c` for prime `p = 3 mod 4` by
    /// repeatedly taking the square root of whichever of `y`, `-y` has one
    /// (exactly one does). Each step preserves `h^(2^(i+1)) = c`.
    fn nested_sqrt(&self, c: u64, levels: u32) -> Option<u64> {
        if levels == 0 {
            return Some(c);
        }
        if !self.is_prime_3_mod_4() {
            return if levels == 1 { self.sqrt(c) } else { None };
        }
        let mut h = self.sqrt(c)?;
        for _ in 1..levels {
            h = match self.sqrt(h) {
                Some(root) => root,
                None => self.sqrt(self.negate(h))?,
            };
        }
        Some(h)
    }
}

/// The cyclic group `Z_modulus` under addition; supplies odd-order groups.
#[derive(Debug, Clone)]
pub struct AdditiveCyclic {
    modulus: u64,
}

impl AdditiveCyclic {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        AdditiveCyclic { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl FiniteGroup for AdditiveCyclic {
    fn order(&self) -> u64 {
        self.modulus
    }

    fn compose(&self, a: u64, b: u64) -> u64 {
        // a, b < modulus <= 2^63 would suffice; go through u128 regardless.
        ((a as u128 + b as u128) % self.modulus as u128) as u64
    }

    fn identity(&self) -> u64 {
        0
    }

    fn inverse(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn contains(&self, a: u64) -> bool {
        a < self.modulus
    }

    fn encoding_bound(&self) -> u64 {
        self.modulus
    }

    fn elements(&self) -> Result<Vec<u64>> {
        if self.modulus > ENUMERATION_CAP {
            return Err(Error::EnumerationCapExceeded {
                order: self.modulus,
                cap: ENUMERATION_CAP,
            });
        }
        Ok((0..self.modulus).collect())
    }

    fn pow(&self, g: u64, e: u64) -> u64 {
        mod_mul(g % self.modulus, e % self.modulus, self.modulus)
    }
}

/// Encryption key: a sandwich element `x` and an exponent `e` that is a
/// unit modulo the group order, with `e > 1` (the scheme is vacuous at 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VariantKey {
    pub x: u64,
    pub e: u64,
}

/// The variant product `a *_s b = a s b` in the base group.
pub fn variant_compose<G: FiniteGroup + ?Sized>(group: &G, s: u64, a: u64, b: u64) -> Result<u64> {
    group.check_element(s)?;
    group.check_element(a)?;
    group.check_element(b)?;
    Ok(group.compose(group.compose(a, s), b))
}

/// The `e`-th power of `g` in the variant by `x`, computed in the base
/// group as `(g x)^(e-1) g`. Requires `e >= 1`; `e = 1` returns `g`.
pub fn variant_power<G: FiniteGroup + ?Sized>(group: &G, x: u64, g: u64, e: u64) -> u64 {
    assert!(e >= 1, "variant power requires e >= 1");
    let gx = group.compose(g, x);
    group.compose(group.pow(gx, e - 1), g)
}

/// Draws a key: a uniformly random group element `x` and a uniformly random
/// unit `1 < e < order`. Deterministic for a fixed seed.
pub fn keygen<G: FiniteGroup + ?Sized>(group: &G, seed: u64) -> Result<VariantKey> {
    let n = group.order();
    if n <= 2 {
        // Orders 1 and 2 admit no unit above 1; for n >= 3, n - 1 always works.
        return Err(Error::NoUsableExponent { order: n });
    }
    let mut rng = SplitMix64::new(seed);
    let x = group.sample(&mut rng);
    let e = loop {
        let candidate = rng.range_inclusive(2, n - 1);
        if gcd(candidate, n) == 1 {
            break candidate;
        }
    };
    Ok(VariantKey { x, e })
}

/// Encrypts plaintext `g` under `key`: the variant power `(g x)^(e-1) g`.
pub fn encrypt<G: FiniteGroup + ?Sized>(group: &G, key: &VariantKey, g: u64) -> Result<u64> {
    group.check_element(key.x)?;
    group.check_element(g)?;
    Ok(variant_power(group, key.x, g, key.e))
}

/// Decrypts ciphertext `c`: with `e' = e^-1 mod order`, computes
/// `(c x)^e' x^-1`, which recovers the plaintext exactly.
pub fn decrypt<G: FiniteGroup + ?Sized>(group: &G, key: &VariantKey, c: u64) -> Result<u64> {
    group.check_element(key.x)?;
    group.check_element(c)?;
    let n = group.order();
    if n == 1 {
        return Ok(group.identity());
    }
    if gcd(key.e, n) != 1 {
        return Err(Error::NotAUnit { value: key.e % n, modulus: n });
    }
    let e_inv = mod_inverse(key.e % n, n)?;
    let cx = group.compose(c, key.x);
    Ok(group.compose(group.pow(cx, e_inv), group.inverse(key.x)))
}
