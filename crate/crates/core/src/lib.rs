//! Abelian-group structure of the quotients `Δ^k(Q)/Δ^(k+1)(Q)` of the
//! augmentation ideal of an integral quandle ring.
//!
//! The exact linear algebra ([`matrix`], [`hnf`], [`snf`], [`lattice`]) is
//! generic over the integer [`Scalar`]: `BigInt` never overflows, while
//! fixed-width types report [`LatticeError::Overflow`] instead of wrapping.
//! The aliases below fix the scalar to [`Int`].

pub mod error;
pub mod hnf;
pub mod lab;
pub mod lattice;
pub mod matrix;
pub mod quandle;
pub mod ring;
pub mod scalar;
pub mod snf;

pub use error::LatticeError;
pub use hnf::{hnf, is_hnf};
pub use lattice::{quotient_invariants, GroupOrder, Lattice, QuotientReport};
pub use matrix::Matrix;
pub use quandle::{Quandle, QuandleDocument, QuandleError, QuandleSelector, Violation};
pub use ring::{delta_power, delta_quotient, ebasis_product, DeltaTower, EVector, Mode, RingElement, RingError};
pub use scalar::{ArithmeticOverflow, Scalar};
pub use snf::{snf, SmithDecomposition};

/// Arbitrary-precision integer used by the concrete aliases.
pub type Int = num_bigint::BigInt;

pub type IntMatrix = Matrix<Int>;
pub type IntLattice = Lattice<Int>;
pub type IntSmithDecomposition = SmithDecomposition<Int>;
pub type IntQuotientReport = QuotientReport<Int>;
pub type IntRingElement<'q> = RingElement<'q, Int>;
pub type IntEVector<'q> = EVector<'q, Int>;
pub type IntDeltaTower = DeltaTower<Int>;

/// Checked 64-bit variants: faster, but may fail with `Overflow`.
pub type Matrix64 = Matrix<i64>;
pub type Lattice64 = Lattice<i64>;
