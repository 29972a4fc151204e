use thiserror::Error;

use crate::gf2::BinVector;

/// Errors produced by the frame toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operand dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// Vectors and matrices must have at least one row and one column.
    #[error("zero-dimensional {0} is not allowed")]
    EmptyDimension(&'static str),

    /// An operation that needs a square matrix got a rectangular one.
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// The vectors of a frame do not span the ambient space.
    #[error("vectors span a subspace of dimension {rank}, not all of GF(2)^{dim}")]
    NotSpanning { rank: usize, dim: usize },

    /// The input violates a precondition of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An orthonormal sequence whose vectors sum to the all-ones vector cannot
    /// be extended. `sum` is that partial sum.
    #[error("orthonormal sequence cannot be extended: its vectors sum to {sum}")]
    ExtensionObstruction { sum: BinVector },

    /// A symmetric idempotent matrix with only even columns is not the Gram
    /// matrix of a Parseval frame. `column_parities` is all zero.
    #[error("not the Gram matrix of a Parseval frame: all columns even ({column_parities})")]
    NotGramMatrix { column_parities: BinVector },

    /// Size outside the range an enumeration supports.
    #[error("size {size} outside supported range {min}..={max}")]
    UnsupportedSize { size: usize, min: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
