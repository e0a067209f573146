//! Crate-wide error type.

use std::fmt;

/// Errors surfaced by the library's fallible operations.
///
/// Precondition violations that indicate caller bugs (e.g. a zero modulus in
/// modular exponentiation) panic instead; the variants here cover
/// data-dependent failures a caller may legitimately hit and want to handle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The value has a common factor with the modulus, so no inverse exists.
    NotAUnit { value: u64, modulus: u64 },
    /// The group is too small to admit an encryption exponent e > 1.
    NoUsableExponent { order: u64 },
    /// The element is not a canonical encoding of a group element.
    InvalidElement { element: u64, modulus: u64 },
    /// Exhaustive enumeration refused: the group order exceeds the cap.
    EnumerationCapExceeded { order: u64, cap: u64 },
    /// An exponent that must exceed 1 did not.
    ExponentTooSmall { exponent: u64 },
    /// Square roots by exponentiation need a prime modulus congruent 3 mod 4.
    SqrtUnsupportedModulus { modulus: u64 },
    /// Two inputs that must be coprime are not.
    NotCoprime { a: u64, b: u64 },
    /// An input that must be odd is even.
    EvenInput { value: u64 },
    /// A residue-set specification violated its invariants.
    InvalidResidueSpec(String),
    /// A two-prime-power totient fell outside both predicted candidates.
    /// This would falsify the candidate dichotomy and aborts the survey.
    CandidateDichotomyViolated { n: u64, totient: u64, schemmel: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAUnit { value, modulus } => {
                write!(f, "{value} is not a unit modulo {modulus}")
            }
            Error::NoUsableExponent { order } => {
                write!(f, "group of order {order} has no unit exponent greater than 1")
            }
            Error::InvalidElement { element, modulus } => {
                write!(f, "{element} is not a valid element encoding for modulus {modulus}")
            }
            Error::EnumerationCapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds the enumeration cap {cap}")
            }
            Error::ExponentTooSmall { exponent } => {
                write!(f, "exponent {exponent} must be greater than 1")
            }
            Error::SqrtUnsupportedModulus { modulus } => {
                write!(f, "square-root exponentiation requires a prime modulus congruent to 3 mod 4, got {modulus}")
            }
            Error::NotCoprime { a, b } => write!(f, "{a} and {b} are not coprime"),
            Error::EvenInput { value } => write!(f, "{value} must be odd"),
            Error::InvalidResidueSpec(msg) => write!(f, "invalid residue-set spec: {msg}"),
            Error::CandidateDichotomyViolated { n, totient, schemmel } => {
                write!(
                    f,
                    "T({n}) = {totient} matches neither (S-3)/2 nor (S+1)/2 for S = {schemmel}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
