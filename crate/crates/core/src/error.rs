//! Error type shared across the library.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// The standard part of a matrix that must be invertible is rank
    /// deficient.
    #[error("standard part is singular (rank {rank} of {n})")]
    SingularStandardPart {
        /// Numerical rank found.
        rank: usize,
        /// Matrix order.
        n: usize,
    },
    /// A scalar or vector whose standard part must be nonzero is not
    /// appreciable.
    #[error("operand is not appreciable (zero standard part)")]
    NotAppreciable,
    /// Square root of a dual number that is negative under the total order.
    #[error("square root of a negative dual number")]
    NegativeInput,
    /// A candidate (λ_s, x_s) failed the standard-part eigenpair check.
    #[error("not an eigenpair of the standard part: {0}")]
    NotAnEigenpair(String),
    /// A declared one-eigenvalue block structure is malformed.
    #[error("bad block structure: {0}")]
    BadBlockStructure(String),
    /// The standard part is not block diagonal with the declared scalar
    /// blocks λ_i·I.
    #[error("standard part is not block-scalar with the declared structure: {0}")]
    StandardPartNotBlockScalar(String),
    /// The declared eigenvalues are not pairwise distinct.
    #[error("declared eigenvalues are not pairwise distinct")]
    EigenvaluesNotDistinct,
    /// The standard part has a nontrivial Jordan block where a
    /// diagonalizable one is required.
    #[error("standard part is defective (not diagonalizable)")]
    StandardPartDefective,
    /// The standard part is not a single Jordan block J_n(λ).
    #[error("standard part is not a single Jordan block: {0}")]
    StandardPartNotJordanBlock(String),
    /// The matrix is not Hermitian.
    #[error("matrix is not Hermitian (‖A − A*‖ = {deviation:.3e})")]
    NotHermitian {
        /// Largest entry deviation between A and A*.
        deviation: f64,
    },
    /// An iterative decomposition failed to converge.
    #[error("decomposition failed to converge: {0}")]
    ConvergenceFailure(String),
    /// Eigenvalue clustering is ambiguous at the configured tolerance, so
    /// the Jordan structure is not trustworthy.
    #[error("ill-conditioned structure: {0}")]
    IllConditionedStructure(String),
    /// Input text failed to parse or validate.
    #[error("parse error: {0}")]
    ParseError(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    fn discriminant_name(&self) -> &'static str {
        match self {
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::SingularStandardPart { .. } => "SingularStandardPart",
            Error::NotAppreciable => "NotAppreciable",
            Error::NegativeInput => "NegativeInput",
            Error::NotAnEigenpair(_) => "NotAnEigenpair",
            Error::BadBlockStructure(_) => "BadBlockStructure",
            Error::StandardPartNotBlockScalar(_) => "StandardPartNotBlockScalar",
            Error::EigenvaluesNotDistinct => "EigenvaluesNotDistinct",
            Error::StandardPartDefective => "StandardPartDefective",
            Error::StandardPartNotJordanBlock(_) => "StandardPartNotJordanBlock",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::ConvergenceFailure(_) => "ConvergenceFailure",
            Error::IllConditionedStructure(_) => "IllConditionedStructure",
            Error::ParseError(_) => "ParseError",
        }
    }

    /// Stable machine-readable name of the error kind (used by the CLI and
    /// the C API).
    pub fn kind(&self) -> &'static str {
        self.discriminant_name()
    }
}
