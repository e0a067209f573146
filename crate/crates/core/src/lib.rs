//! Totient variants, variant-group encryption, and brute-force collision
//! verification.
//!
//! The library centers on the totient `T(n)`: the number of odd units `m`
//! modulo `n` whose half-shift `(m - 1) / 2` is also a unit. `T` controls
//! how many indistinguishable key pairs collide under the variant-group
//! cipher, so alongside the evaluator and its brute-force oracle there are
//! modules for the cipher itself, exhaustive collision enumeration, and
//! literal enumeration of the residue-set counts the closed forms rest on.
//!
//! * [`arithmetic`] — exact 64-bit gcd/modular arithmetic, deterministic
//!   primality, factorization, safe-prime generation.
//! * [`totient`] — Euler and Schemmel totients, the `T` and `T_r` oracles,
//!   and the closed-form/bounded evaluator.
//! * [`variant_group`] — finite groups on `u64` residues, the sandwich
//!   variant construction, and the `(x, e)` cipher.
//! * [`attack`] — exhaustive collision landscapes and explicit solution
//!   construction for `w^(f-1) = c`.
//! * [`lemma_lab`] — residue-set enumeration, verification sweeps, and the
//!   open-question surveys.
//! * [`cli`] — the command-line surface.
//!
//! All randomized operations take explicit seeds and are bit-reproducible.
//! Everything is pure and safe to call concurrently.

pub mod arithmetic;
pub mod attack;
pub mod cli;
pub mod error;
pub mod lemma_lab;
pub mod rng;
pub mod totient;
pub mod variant_group;

pub use error::{Error, Result};
