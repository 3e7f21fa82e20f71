//! Error type shared by every module of the crate.

use core::fmt;

/// Everything that can go wrong while constructing or combining values.
#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// A universe needs at least one element.
    EmptyUniverse,
    /// Universe labels must be pairwise distinct.
    DuplicateLabel { index: usize },
    /// Pair-enumeration structures are O(n²); the dimension cap keeps
    /// them (and the dense matrices built on top) at desk scale.
    UniverseTooLarge { size: usize, max: usize },
    /// Probability list does not match the label list.
    ProbabilityCountMismatch { labels: usize, probabilities: usize },
    /// Point probabilities must be non-negative.
    NegativeProbability { index: usize, value: f64 },
    /// Point probabilities must sum to one.
    ProbabilitySum { sum: f64 },
    /// An element index beyond the universe or matrix dimension.
    IndexOutOfRange { index: usize, size: usize },
    /// An index set mentioned the same element twice.
    DuplicateIndex { index: usize },
    /// The operation needs a non-empty index set.
    EmptySet,
    /// The operation needs a non-empty list of operands.
    EmptyList,
    /// Partition blocks must be non-empty.
    EmptyBlock { block: usize },
    /// Two partition blocks claim the same element.
    OverlappingBlocks { index: usize },
    /// An element of the universe is missing from every block.
    IncompleteCover { index: usize },
    /// Operands were built over different universes.
    UniverseMismatch,
    /// A per-element sequence has the wrong length.
    LengthMismatch { expected: usize, got: usize },
    /// Attribute values and eigenvalues must be finite.
    NonFiniteValue { index: usize },
    /// The event has probability zero, so conditioning on it is undefined.
    ZeroProbabilityEvent,
    /// A matrix literal was not square.
    NotSquare { rows: usize, cols: usize },
    /// Matrix/vector dimensions disagree.
    DimensionMismatch { left: usize, right: usize },
    /// Density matrices must satisfy ρ = ρ† within tolerance.
    NotHermitian { max_asymmetry: f64 },
    /// Density matrices must have unit trace within tolerance.
    TraceNotOne { trace: f64 },
    /// A probe vector found x†ρx below the permitted slack.
    NotPositiveSemidefinite { witness: f64 },
    /// The pair is not related by entry-keeping/entry-zeroing: some entry
    /// of the second matrix neither matches the first nor vanishes.
    NotAConformalPair { row: usize, col: usize },
    /// States/observables were expressed over different bases.
    BasisMismatch,
    /// The state vector is not normalized.
    NotNormalized { norm: f64 },
    /// Conjugation and evolution require a unitary matrix.
    NotUnitary,
    /// The zero vector has no direction to normalize.
    ZeroVector,
    /// The dense eigensolver is limited to desk-scale matrices.
    MatrixTooLarge { dim: usize, max: usize },
    /// The Jacobi sweep did not reach the convergence threshold.
    EigensolveFailure { off_diagonal: f64 },
    /// The observables do not form a complete set of commuting operators.
    NotACsco,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyUniverse => write!(f, "universe must contain at least one element"),
            Error::DuplicateLabel { index } => {
                write!(f, "duplicate universe label at position {index}")
            }
            Error::UniverseTooLarge { size, max } => {
                write!(f, "universe of size {size} exceeds the dimension cap {max}")
            }
            Error::ProbabilityCountMismatch {
                labels,
                probabilities,
            } => write!(
                f,
                "{labels} labels but {probabilities} probabilities were given"
            ),
            Error::NegativeProbability { index, value } => {
                write!(f, "probability {value} at position {index} is negative")
            }
            Error::ProbabilitySum { sum } => {
                write!(f, "probabilities sum to {sum}, expected 1")
            }
            Error::IndexOutOfRange { index, size } => {
                write!(f, "index {index} out of range for size {size}")
            }
            Error::DuplicateIndex { index } => {
                write!(f, "index {index} appears more than once in the set")
            }
            Error::EmptySet => write!(f, "the index set must be non-empty"),
            Error::EmptyList => write!(f, "the operand list must be non-empty"),
            Error::EmptyBlock { block } => write!(f, "block {block} is empty"),
            Error::OverlappingBlocks { index } => {
                write!(f, "element {index} belongs to more than one block")
            }
            Error::IncompleteCover { index } => {
                write!(f, "element {index} is not covered by any block")
            }
            Error::UniverseMismatch => write!(f, "operands live over different universes"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
            Error::NonFiniteValue { index } => {
                write!(f, "value at position {index} is not finite")
            }
            Error::ZeroProbabilityEvent => {
                write!(f, "the event has probability zero")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::NotHermitian { max_asymmetry } => {
                write!(f, "matrix is not Hermitian (asymmetry {max_asymmetry:e})")
            }
            Error::TraceNotOne { trace } => {
                write!(f, "matrix trace is {trace}, expected 1")
            }
            Error::NotPositiveSemidefinite { witness } => {
                write!(f, "matrix is not positive semidefinite (x†ρx = {witness:e})")
            }
            Error::NotAConformalPair { row, col } => write!(
                f,
                "entry ({row},{col}) neither matches the original nor is zero"
            ),
            Error::BasisMismatch => write!(f, "operands use different bases"),
            Error::NotNormalized { norm } => {
                write!(f, "state has norm {norm}, expected 1")
            }
            Error::NotUnitary => write!(f, "matrix is not unitary"),
            Error::ZeroVector => write!(f, "the zero vector cannot be normalized"),
            Error::MatrixTooLarge { dim, max } => {
                write!(f, "matrix dimension {dim} exceeds the eigensolver cap {max}")
            }
            Error::EigensolveFailure { off_diagonal } => write!(
                f,
                "eigensolver failed to converge (off-diagonal norm {off_diagonal:e})"
            ),
            Error::NotACsco => write!(
                f,
                "the eigen-partition join is not discrete, so the observables are not a CSCO"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
