//! Binary Parseval frames over GF(2).
//!
//! The crate is layered bottom-up:
//!
//! * [`gf2`]: bit-packed vectors and matrices, elimination, solution sets.
//! * [`frame`]: analysis/synthesis matrices, the Parseval and orthogonality
//!   predicates, Gram matrices, the reconstruction sum.
//! * [`naimark`]: orthonormal extension and Naimark complements.
//! * [`gramfactor`]: which symmetric idempotent matrices are Gram matrices,
//!   and factoring them as `Theta Theta*`.
//! * [`equiv`]: canonical forms under permutation equivalence and conjugation.
//! * [`enumerate`]: exhaustive catalogs of orthogonal matrices and cyclic frames.

pub mod enumerate;
pub mod equiv;
pub mod error;
pub mod frame;
pub mod gf2;
pub mod gramfactor;
pub mod naimark;

pub use error::{Error, Result};
pub use frame::{Frame, GramMatrix};
pub use gf2::{AffineSolutionSet, BinMatrix, BinVector};
