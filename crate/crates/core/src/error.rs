use thiserror::Error;

use crate::scalar::ArithmeticOverflow;

/// Failures of the exact lattice engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    /// A basis row of the would-be sublattice lies outside the superlattice.
    #[error("not a sublattice: basis row {row} = {witness:?} is not in the superlattice")]
    NotASublattice { row: usize, witness: Vec<String> },
}

impl From<ArithmeticOverflow> for LatticeError {
    fn from(_: ArithmeticOverflow) -> Self {
        LatticeError::Overflow
    }
}
