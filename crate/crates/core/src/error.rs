use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Slope canonicalization of the zero vector.
    ZeroVector,
    /// A surface with fewer than two boundary components has no essential
    /// simple closed curves.
    TooFewHoles,
    /// Boundary index outside `1..=holes`.
    BadBoundaryIndex,
    /// Invalid hole set for the surface.
    BadHoleSet,
    /// The operation is not defined for this combination of inputs.
    Unsupported(&'static str),
    /// Curves in different slope parity classes cannot be connected by the
    /// level-2 congruence action.
    ClassMismatch,
    /// The representation into PSL(2,Z) is injective only for z >= 2.
    BadZ,
    /// The matrix is not an element of the rank-2 free subgroup.
    NotMember,
    /// Tuples of different lengths are never Hurwitz equivalent.
    LengthMismatch,
    /// Hurwitz move index outside `1..m`.
    IndexOutOfRange,
    /// A certificate step could not be applied.
    InvalidStep,
    /// Curves of a tuple must live on one common surface.
    SurfaceMismatch,
    /// A named precondition of `filling_verdict` failed.
    PreconditionFailed(&'static str),
    /// Exact arithmetic left the representable integer range.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroVector => write!(f, "slope (0,0) has no canonical form"),
            Error::TooFewHoles => write!(f, "a holed sphere needs at least 2 boundary components"),
            Error::BadBoundaryIndex => write!(f, "boundary index out of range"),
            Error::BadHoleSet => write!(f, "hole set must be a nonempty subset of the inner holes"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::ClassMismatch => write!(f, "slopes lie in different parity classes"),
            Error::BadZ => write!(f, "representation requires z >= 2"),
            Error::NotMember => write!(f, "matrix is not in the rank-2 free subgroup"),
            Error::LengthMismatch => write!(f, "tuples have different lengths"),
            Error::IndexOutOfRange => write!(f, "move index out of range"),
            Error::InvalidStep => write!(f, "certificate step cannot be applied"),
            Error::SurfaceMismatch => write!(f, "curves live on different surfaces"),
            Error::PreconditionFailed(what) => write!(f, "precondition failed: {what}"),
            Error::Overflow => write!(f, "exact arithmetic out of range"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
