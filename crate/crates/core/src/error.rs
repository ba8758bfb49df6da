use core::fmt;

use crate::subset::Subset;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Poset axiom that a relation failed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Reflexivity,
    Transitivity,
    Antisymmetry,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Transitivity => "transitivity",
            Axiom::Antisymmetry => "antisymmetry",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    IndexOutOfRange { index: usize, len: usize },
    TooManyPoints { len: usize, max: usize },
    /// The pair `(a, b)` witnesses the violated axiom. For transitivity `a ≤ b`
    /// holds through `via` but `a ≤ b` is missing.
    NotAPoset { axiom: Axiom, a: usize, b: usize, via: Option<usize> },
    MissingEmptyOpen,
    MissingFullOpen,
    NotClosedUnderUnion(Subset, Subset),
    NotClosedUnderIntersection(Subset, Subset),
    /// Two distinct points with the same open neighbourhoods.
    T0Violation { a: usize, b: usize },
    CapExceeded { size: usize, cap: usize },
    SpaceMismatch,
    TableLength { expected: usize, got: usize },
    NotSiPlusContinuous,
    /// Carries an irreducible set without a supremum.
    NotStronglyComplete(Subset),
    UnsupportedDescriptor,
    UnsupportedForm,
    Unsupported(&'static str),
    InvalidPoint(i64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for a carrier of {len} points")
            }
            Error::TooManyPoints { len, max } => {
                write!(f, "carrier of {len} points exceeds the supported {max}")
            }
            Error::NotAPoset { axiom, a, b, via: Some(c) } => {
                write!(f, "relation violates {axiom}: {a} <= {c} <= {b} but not {a} <= {b}")
            }
            Error::NotAPoset { axiom, a, b, via: None } => {
                write!(f, "relation violates {axiom} at pair ({a}, {b})")
            }
            Error::MissingEmptyOpen => f.write_str("open family lacks the empty set"),
            Error::MissingFullOpen => f.write_str("open family lacks the whole carrier"),
            Error::NotClosedUnderUnion(a, b) => {
                write!(f, "opens not closed under union: {a} ∪ {b} missing")
            }
            Error::NotClosedUnderIntersection(a, b) => {
                write!(f, "opens not closed under intersection: {a} ∩ {b} missing")
            }
            Error::T0Violation { a, b } => {
                write!(f, "not T0: points {a} and {b} are topologically indistinguishable")
            }
            Error::CapExceeded { size, cap } => {
                write!(f, "size {size} exceeds the enumeration cap {cap}")
            }
            Error::SpaceMismatch => f.write_str("spaces do not match"),
            Error::TableLength { expected, got } => {
                write!(f, "map table has {got} entries, expected {expected}")
            }
            Error::NotSiPlusContinuous => f.write_str("map is not SI+-continuous"),
            Error::NotStronglyComplete(w) => {
                write!(f, "space is not strongly complete: irreducible {w} has no supremum")
            }
            Error::UnsupportedDescriptor => f.write_str("descriptor not admissible for this space"),
            Error::UnsupportedForm => f.write_str("set form not admissible for this space"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::InvalidPoint(p) => write!(f, "code {p} is not a point of this space"),
        }
    }
}

impl core::error::Error for Error {}
