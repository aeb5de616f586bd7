use thiserror::Error;

use crate::scalar::FieldElement;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Variants other than [`Error::Assertion`] are precondition failures: the
/// input was outside the domain of the operation. `Assertion` means an
/// internal consistency check failed, which indicates a bug.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("invalid scalar literal `{0}`")]
    BadLiteral(String),
    #[error("scalars from different fields")]
    FieldMismatch,
    #[error("integer {0} has a prime factor above the trial-division bound {1}")]
    FactorBoundExceeded(String, u64),

    #[error("matrix is not square ({0}x{1})")]
    NonSquare(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("structure constants are not associative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("declared identity is not a two-sided unit")]
    BadUnit,
    #[error("element does not belong to this algebra (length {got}, dimension {dim})")]
    AlgebraMismatch { got: usize, dim: usize },
    #[error("trace-form radical requires characteristic 0 or above the dimension ({dim}); characteristic is {characteristic}")]
    CharTooSmall { characteristic: u64, dim: usize },
    #[error("declared radical basis is not a nilpotent ideal")]
    BadRadical,
    #[error("algebra is not local with residue field k")]
    NotLocal,

    #[error("form is degenerate; kernel vector {witness:?}")]
    Degenerate { witness: Vec<FieldElement> },
    #[error("form is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociativeForm(usize, usize, usize),
    #[error("no nondegenerate functional found after {attempts} attempts (not a proof of non-Frobenius)")]
    Inconclusive { attempts: usize },
    #[error("element is not a unit")]
    NotAUnit,
    #[error("map is not an algebra automorphism")]
    NotAnAutomorphism,
    #[error("no unit found in the null space (algebra not local; not a proof of outerness)")]
    Incomplete,

    #[error("characteristic {0} is not allowed here")]
    BadCharacteristic(u64),
    #[error("automorphism does not fix the element")]
    NotFixed,
    #[error("residue {0} has no {1}-th root in the ground field")]
    NoRootInResidueField(FieldElement, usize),
    #[error("no inner power of the automorphism up to {0}")]
    OrderBoundExceeded(usize),

    #[error("unit is not central")]
    NotCentral,
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("unit is not congruent to 1 modulo the radical")]
    BadResidue,
    #[error("second form is not a twist of the first")]
    NotATwist,
    #[error("Nakayama automorphism has no finite order up to {0}")]
    InfiniteOrder(usize),

    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("malformed algebra file: {0}")]
    Format(String),
    #[error("internal assertion failed: {0}")]
    Assertion(String),
}

/// Returns `Error::Assertion` unless `cond` holds.
pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Assertion(what()))
    }
}
