use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Cartan type with invalid rank data.
    InvalidType(String),
    /// A weight or matrix has the wrong length for the ambient lattice.
    RankMismatch { expected: usize, got: usize },
    /// Operation requires a dominant weight.
    NotDominant,
    /// The given lattice matrix is not an involution compatible with the roots.
    InvalidInvolution(String),
    /// A Laurent polynomial that is not Weyl-invariant cannot be a character.
    NotACharacter,
    /// Exterior powers are only defined for classes with non-negative multiplicities.
    NotARepresentation,
    /// A dominant weight cannot be written in the leading weights of the generator set.
    GeneratorSetIncomplete(String),
    /// Restriction along the given lattice map does not land in the target character ring.
    InvalidLatticeMap,
    /// Parameter outside the supported range.
    OutOfRange(String),
    /// Coefficient model or variable set mismatch between operands.
    Mismatch(String),
    /// A theoretical guarantee failed to hold; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType(s) => write!(f, "invalid Cartan type: {s}"),
            Error::RankMismatch { expected, got } => {
                write!(f, "rank mismatch: expected {expected}, got {got}")
            }
            Error::NotDominant => write!(f, "weight is not dominant"),
            Error::InvalidInvolution(s) => write!(f, "invalid involution: {s}"),
            Error::NotACharacter => write!(f, "polynomial is not Weyl-invariant"),
            Error::NotARepresentation => {
                write!(f, "class has negative multiplicities")
            }
            Error::GeneratorSetIncomplete(s) => {
                write!(f, "generator set incomplete: {s}")
            }
            Error::InvalidLatticeMap => write!(f, "invalid lattice map"),
            Error::OutOfRange(s) => write!(f, "out of range: {s}"),
            Error::Mismatch(s) => write!(f, "mismatch: {s}"),
            Error::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
