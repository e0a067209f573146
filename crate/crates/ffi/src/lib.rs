#![allow(clippy::missing_safety_doc)]
//! C ABI for the variant-totient library.
//!
//! Conventions: every fallible call returns a [`VtStatus`] and writes its
//! result through out-pointers; `VT_STATUS_OK` is zero. Factorizations and
//! groups are opaque handles created by `vt_*_new` and released by the
//! matching `vt_*_free`. Handles are immutable after creation and safe to
//! share across threads. Inputs are validated before any computation, so
//! no call unwinds across the boundary.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use variant_totient::arithmetic::{self, Factorization};
use variant_totient::attack;
use variant_totient::error::Error;
use variant_totient::lemma_lab;
use variant_totient::totient::{self, EvalRule, Parity, TotientValue};
use variant_totient::variant_group::{
    self, AdditiveCyclic, FiniteGroup, UnitsModN, VariantKey,
};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VtStatus {
    Ok = 0,
    InvalidArgument = 1,
    ZeroModulus = 2,
    NotAUnit = 3,
    NoUsableExponent = 4,
    InvalidElement = 5,
    EnumerationCapExceeded = 6,
    ExponentTooSmall = 7,
    UnsupportedModulus = 8,
    NotCoprime = 9,
    /// The requested value does not exist (non-residue, no construction).
    NoSolution = 10,
    NullPointer = 11,
    Internal = 12,
}

fn status_of(err: &Error) -> VtStatus {
    match err {
        Error::NotAUnit { .. } => VtStatus::NotAUnit,
        Error::NoUsableExponent { .. } => VtStatus::NoUsableExponent,
        Error::InvalidElement { .. } => VtStatus::InvalidElement,
        Error::EnumerationCapExceeded { .. } => VtStatus::EnumerationCapExceeded,
        Error::ExponentTooSmall { .. } => VtStatus::ExponentTooSmall,
        Error::SqrtUnsupportedModulus { .. } => VtStatus::UnsupportedModulus,
        Error::NotCoprime { .. } => VtStatus::NotCoprime,
        Error::EvenInput { .. } => VtStatus::InvalidArgument,
        Error::InvalidResidueSpec(_) => VtStatus::InvalidArgument,
        Error::CandidateDichotomyViolated { .. } => VtStatus::Internal,
    }
}

fn guarded(f: impl FnOnce() -> VtStatus) -> VtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => VtStatus::Internal,
    }
}

/// Library version as a NUL-terminated static string.
#[no_mangle]
pub extern "C" fn vt_version() -> *const c_char {
    static VERSION: &[u8] = b"0.1.0\0";
    VERSION.as_ptr() as *const c_char
}

// ---- arithmetic ----

#[no_mangle]
pub extern "C" fn vt_gcd(a: u64, b: u64) -> u64 {
    arithmetic::gcd(a, b)
}

#[no_mangle]
pub extern "C" fn vt_is_prime(n: u64) -> bool {
    arithmetic::is_prime(n)
}

/// `base^exp mod modulus`; fails with `ZeroModulus` when `modulus` is 0.
#[no_mangle]
pub unsafe extern "C" fn vt_mod_pow(base: u64, exp: u64, modulus: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if modulus == 0 {
        return VtStatus::ZeroModulus;
    }
    *out = arithmetic::mod_pow(base, exp, modulus);
    VtStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn vt_mod_inverse(a: u64, m: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if m < 2 {
        return VtStatus::InvalidArgument;
    }
    match arithmetic::mod_inverse(a, m) {
        Ok(inv) => {
            *out = inv;
            VtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Deterministic safe prime of exactly `bits` bits (4 to 62) for the seed.
#[no_mangle]
pub unsafe extern "C" fn vt_gen_safe_prime(bits: u32, seed: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if !(4..=62).contains(&bits) {
        return VtStatus::InvalidArgument;
    }
    *out = arithmetic::gen_safe_prime(bits, seed);
    VtStatus::Ok
}

// ---- factorization handle ----

/// Opaque canonical prime-power decomposition.
pub struct VtFactorization(Factorization);

/// Factorizes `n >= 1`; returns null for `n = 0`. Free with
/// [`vt_factorization_free`].
#[no_mangle]
pub extern "C" fn vt_factorize(n: u64) -> *mut VtFactorization {
    if n == 0 {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(VtFactorization(arithmetic::factorize(n))))
}

#[no_mangle]
pub unsafe extern "C" fn vt_factorization_free(f: *mut VtFactorization) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

#[no_mangle]
pub unsafe extern "C" fn vt_factorization_n(f: *const VtFactorization) -> u64 {
    if f.is_null() {
        return 0;
    }
    (*f).0.n()
}

/// Number of distinct prime divisors.
#[no_mangle]
pub unsafe extern "C" fn vt_factorization_len(f: *const VtFactorization) -> usize {
    if f.is_null() {
        return 0;
    }
    (*f).0.omega()
}

#[no_mangle]
pub unsafe extern "C" fn vt_factorization_prime(
    f: *const VtFactorization,
    index: usize,
    out: *mut u64,
) -> VtStatus {
    if f.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    match (*f).0.factors().get(index) {
        Some(&(p, _)) => {
            *out = p;
            VtStatus::Ok
        }
        None => VtStatus::InvalidArgument,
    }
}

#[no_mangle]
pub unsafe extern "C" fn vt_factorization_exponent(
    f: *const VtFactorization,
    index: usize,
    out: *mut u32,
) -> VtStatus {
    if f.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    match (*f).0.factors().get(index) {
        Some(&(_, e)) => {
            *out = e;
            VtStatus::Ok
        }
        None => VtStatus::InvalidArgument,
    }
}

// ---- totient functions ----

#[no_mangle]
pub unsafe extern "C" fn vt_euler_phi(n: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if n == 0 {
        return VtStatus::InvalidArgument;
    }
    *out = totient::euler_phi(&arithmetic::factorize(n));
    VtStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn vt_schemmel(r: u64, n: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if n == 0 || r == 0 {
        return VtStatus::InvalidArgument;
    }
    *out = totient::schemmel(r, &arithmetic::factorize(n));
    VtStatus::Ok
}

/// Brute-force `T(n)`.
#[no_mangle]
pub unsafe extern "C" fn vt_totient_t_oracle(n: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if n == 0 {
        return VtStatus::InvalidArgument;
    }
    *out = totient::t_oracle(n);
    VtStatus::Ok
}

/// Brute-force `T_r(n)`; requires `r >= 2`.
#[no_mangle]
pub unsafe extern "C" fn vt_totient_tr_oracle(r: u64, n: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if n == 0 || r < 2 {
        return VtStatus::InvalidArgument;
    }
    *out = totient::tr_oracle(r, n);
    VtStatus::Ok
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VtParity {
    Odd = 0,
    Even = 1,
    Unknown = 2,
}

/// The closed-form case that produced an evaluation.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VtEvalRule {
    PowerOfTwo = 0,
    DivisibleByFour = 1,
    TwicePrimePower3Mod4 = 2,
    TwicePrimePower1Mod4 = 3,
    TwiceOddComposite = 4,
    OddPrimePower = 5,
    OddTwoPrimePowers = 6,
    OddComposite = 7,
}

/// Result of evaluating `T(n)`: exact when `is_exact`, otherwise the
/// inclusive bounds plus parity, with up to two pinned candidates.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct VtTotientValue {
    pub is_exact: bool,
    pub exact: u64,
    pub lower: u64,
    pub upper: u64,
    pub parity: VtParity,
    pub rule: VtEvalRule,
    pub candidate_count: u32,
    pub candidates: [u64; 2],
}

fn convert_value(value: &TotientValue) -> VtTotientValue {
    let parity = match value.parity() {
        Parity::Odd => VtParity::Odd,
        Parity::Even => VtParity::Even,
        Parity::Unknown => VtParity::Unknown,
    };
    let rule = match value.rule() {
        EvalRule::PowerOfTwo => VtEvalRule::PowerOfTwo,
        EvalRule::DivisibleByFour => VtEvalRule::DivisibleByFour,
        EvalRule::TwicePrimePower3Mod4 => VtEvalRule::TwicePrimePower3Mod4,
        EvalRule::TwicePrimePower1Mod4 => VtEvalRule::TwicePrimePower1Mod4,
        EvalRule::TwiceOddComposite => VtEvalRule::TwiceOddComposite,
        EvalRule::OddPrimePower => VtEvalRule::OddPrimePower,
        EvalRule::OddTwoPrimePowers => VtEvalRule::OddTwoPrimePowers,
        EvalRule::OddComposite => VtEvalRule::OddComposite,
    };
    let mut converted = VtTotientValue {
        is_exact: false,
        exact: 0,
        lower: value.lower_bound(),
        upper: value.upper_bound(),
        parity,
        rule,
        candidate_count: 0,
        candidates: [0; 2],
    };
    if let Some(v) = value.exact() {
        converted.is_exact = true;
        converted.exact = v;
    }
    if let Some(set) = value.candidates() {
        converted.candidate_count = set.len().min(2) as u32;
        for (slot, &c) in converted.candidates.iter_mut().zip(set.iter()) {
            *slot = c;
        }
    }
    converted
}

/// Closed-form / bounded evaluation of `T(n)`.
#[no_mangle]
pub unsafe extern "C" fn vt_totient_t_evaluate(n: u64, out: *mut VtTotientValue) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    if n == 0 {
        return VtStatus::InvalidArgument;
    }
    *out = convert_value(&totient::t_evaluate(&arithmetic::factorize(n)));
    VtStatus::Ok
}

/// Compares evaluator and oracle for every n in `[lo, hi]`, writing the
/// number of violations (0 means the sweep passed).
#[no_mangle]
pub unsafe extern "C" fn vt_verify_range(lo: u64, hi: u64, out_violations: *mut u64) -> VtStatus {
    if out_violations.is_null() {
        return VtStatus::NullPointer;
    }
    let out = &mut *out_violations;
    guarded(move || {
        let report = lemma_lab::verify_t_range(lo, hi);
        *out = report.violations.len() as u64;
        VtStatus::Ok
    })
}

// ---- groups ----

enum GroupImpl {
    Units(UnitsModN),
    Additive(AdditiveCyclic),
}

impl GroupImpl {
    fn as_dyn(&self) -> &dyn FiniteGroup {
        match self {
            GroupImpl::Units(g) => g,
            GroupImpl::Additive(g) => g,
        }
    }
}

/// Opaque finite group handle.
pub struct VtGroup(GroupImpl);

/// The multiplicative group of units modulo `modulus` (at least 2);
/// returns null on a bad modulus. Free with [`vt_group_free`].
#[no_mangle]
pub extern "C" fn vt_group_units_new(modulus: u64) -> *mut VtGroup {
    if modulus < 2 {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(VtGroup(GroupImpl::Units(UnitsModN::new(modulus)))))
}

/// The additive cyclic group on `modulus` elements (at least 1);
/// returns null on a bad modulus. Free with [`vt_group_free`].
#[no_mangle]
pub extern "C" fn vt_group_additive_new(modulus: u64) -> *mut VtGroup {
    if modulus < 1 {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(VtGroup(GroupImpl::Additive(AdditiveCyclic::new(modulus)))))
}

#[no_mangle]
pub unsafe extern "C" fn vt_group_free(group: *mut VtGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

#[no_mangle]
pub unsafe extern "C" fn vt_group_order(group: *const VtGroup) -> u64 {
    if group.is_null() {
        return 0;
    }
    (*group).0.as_dyn().order()
}

#[no_mangle]
pub unsafe extern "C" fn vt_group_identity(group: *const VtGroup) -> u64 {
    if group.is_null() {
        return 0;
    }
    (*group).0.as_dyn().identity()
}

#[no_mangle]
pub unsafe extern "C" fn vt_group_contains(group: *const VtGroup, a: u64) -> bool {
    if group.is_null() {
        return false;
    }
    (*group).0.as_dyn().contains(a)
}

#[no_mangle]
pub unsafe extern "C" fn vt_group_compose(
    group: *const VtGroup,
    a: u64,
    b: u64,
    out: *mut u64,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    let g = (*group).0.as_dyn();
    if !g.contains(a) || !g.contains(b) {
        return VtStatus::InvalidElement;
    }
    *out = g.compose(a, b);
    VtStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn vt_group_inverse(
    group: *const VtGroup,
    a: u64,
    out: *mut u64,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    let g = (*group).0.as_dyn();
    if !g.contains(a) {
        return VtStatus::InvalidElement;
    }
    *out = g.inverse(a);
    VtStatus::Ok
}

/// The variant product `a *_s b = a s b`.
#[no_mangle]
pub unsafe extern "C" fn vt_variant_compose(
    group: *const VtGroup,
    s: u64,
    a: u64,
    b: u64,
    out: *mut u64,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    match variant_group::variant_compose((*group).0.as_dyn(), s, a, b) {
        Ok(v) => {
            *out = v;
            VtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The variant power `(g x)^(e-1) g`; requires `e >= 1`.
#[no_mangle]
pub unsafe extern "C" fn vt_variant_power(
    group: *const VtGroup,
    x: u64,
    g: u64,
    e: u64,
    out: *mut u64,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    let group = (*group).0.as_dyn();
    if e < 1 {
        return VtStatus::InvalidArgument;
    }
    if !group.contains(x) || !group.contains(g) {
        return VtStatus::InvalidElement;
    }
    *out = variant_group::variant_power(group, x, g, e);
    VtStatus::Ok
}

/// Deterministic key generation: writes the sandwich element and the unit
/// exponent drawn for the seed.
#[no_mangle]
pub unsafe extern "C" fn vt_keygen(
    group: *const VtGroup,
    seed: u64,
    out_x: *mut u64,
    out_e: *mut u64,
) -> VtStatus {
    if group.is_null() || out_x.is_null() || out_e.is_null() {
        return VtStatus::NullPointer;
    }
    match variant_group::keygen((*group).0.as_dyn(), seed) {
        Ok(VariantKey { x, e }) => {
            *out_x = x;
            *out_e = e;
            VtStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

#[no_mangle]
pub unsafe extern "C" fn vt_encrypt(
    group: *const VtGroup,
    x: u64,
    e: u64,
    plaintext: u64,
    out: *mut u64,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    if e < 1 {
        return VtStatus::InvalidArgument;
    }
    match variant_group::encrypt((*group).0.as_dyn(), &VariantKey { x, e }, plaintext) {
        Ok(c) => {
            *out = c;
            VtStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

#[no_mangle]
pub unsafe extern "C" fn vt_decrypt(
    group: *const VtGroup,
    x: u64,
    e: u64,
    ciphertext: u64,
    out: *mut u64,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    match variant_group::decrypt((*group).0.as_dyn(), &VariantKey { x, e }, ciphertext) {
        Ok(g) => {
            *out = g;
            VtStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

// ---- attack ----

/// Counts from an exhaustive collision enumeration.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct VtCollisionSummary {
    pub order: u64,
    pub target: u64,
    pub pair_count: u64,
    pub exponent_count: u64,
    pub theoretical_lower_bound: u64,
    pub bound_satisfied: bool,
}

/// Enumerates all `(y, f)` colliding with `(g x)^(e-1)`; see the library
/// documentation for the bound semantics.
#[no_mangle]
pub unsafe extern "C" fn vt_collision_pairs(
    group: *const VtGroup,
    g: u64,
    x: u64,
    e: u64,
    out: *mut VtCollisionSummary,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    if e < 1 {
        return VtStatus::InvalidArgument;
    }
    let group = (*group).0.as_dyn();
    let out = &mut *out;
    guarded(move || match attack::enumerate_collision_pairs(group, g, x, e) {
        Ok(report) => {
            *out = VtCollisionSummary {
                order: report.order,
                target: report.target,
                pair_count: report.pair_count,
                exponent_count: report.exponent_count,
                theoretical_lower_bound: report.theoretical_lower_bound,
                bound_satisfied: report.bound_satisfied,
            };
            VtStatus::Ok
        }
        Err(err) => status_of(&err),
    })
}

/// Counts exponents `f > 1` and pairs `(w, f)` with `w^(f-1) = c`.
#[no_mangle]
pub unsafe extern "C" fn vt_count_solvable_exponents(
    group: *const VtGroup,
    c: u64,
    out_exponents: *mut u64,
    out_pairs: *mut u64,
) -> VtStatus {
    if group.is_null() || out_exponents.is_null() || out_pairs.is_null() {
        return VtStatus::NullPointer;
    }
    let group = (*group).0.as_dyn();
    let (out_exponents, out_pairs) = (&mut *out_exponents, &mut *out_pairs);
    guarded(move || match attack::count_solvable_exponents(group, c) {
        Ok((exponents, pairs)) => {
            *out_exponents = exponents;
            *out_pairs = pairs;
            VtStatus::Ok
        }
        Err(err) => status_of(&err),
    })
}

/// Square root of `c` modulo a prime `p = 3 mod 4`. `NoSolution` marks a
/// quadratic non-residue.
#[no_mangle]
pub unsafe extern "C" fn vt_sqrt_mod(c: u64, p: u64, out: *mut u64) -> VtStatus {
    if out.is_null() {
        return VtStatus::NullPointer;
    }
    match attack::sqrt_mod(c, p) {
        Ok(Some(root)) => {
            *out = root;
            VtStatus::Ok
        }
        Ok(None) => VtStatus::NoSolution,
        Err(err) => status_of(&err),
    }
}

/// Builds a solution of `w^(f-1) = c` when a closed construction applies;
/// `NoSolution` means the caller must fall back to enumeration.
#[no_mangle]
pub unsafe extern "C" fn vt_construct_solution(
    group: *const VtGroup,
    c: u64,
    f: u64,
    out: *mut u64,
) -> VtStatus {
    if group.is_null() || out.is_null() {
        return VtStatus::NullPointer;
    }
    let group = (*group).0.as_dyn();
    let out = &mut *out;
    guarded(move || match attack::construct_solution(group, c, f) {
        Ok(Some(w)) => {
            *out = w;
            VtStatus::Ok
        }
        Ok(None) => VtStatus::NoSolution,
        Err(err) => status_of(&err),
    })
}
