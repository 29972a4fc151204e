//! Bit-packed vectors and matrices over the two-element field.

mod matrix;
mod solve;
mod vector;

pub use matrix::BinMatrix;
pub use solve::{AffineSolutionSet, Echelon, SolutionIter};
pub use vector::BinVector;
