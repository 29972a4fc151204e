//! Frames, their analysis and Gram matrices, and the Parseval predicate.
//!
//! A frame `{f_1, ..., f_k}` for GF(2)^n is identified with its `k x n`
//! analysis matrix `Theta`, whose `i`th row is `f_i`. The frame is Parseval
//! exactly when `Theta* Theta = I_n`, i.e. when the columns of `Theta` are
//! orthonormal in GF(2)^k.

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BinVector};

/// A spanning sequence of vectors in GF(2)^n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    analysis: BinMatrix,
}

impl Frame {
    /// Builds a frame from its vectors. Fails with [`Error::Dimension`] on
    /// ragged input and [`Error::NotSpanning`] if the vectors span a proper
    /// subspace.
    pub fn new(vectors: &[BinVector]) -> Result<Self> {
        Self::from_analysis(analysis_matrix(vectors)?)
    }

    pub fn from_analysis(analysis: BinMatrix) -> Result<Self> {
        let rank = analysis.rank();
        if rank != analysis.cols() {
            return Err(Error::NotSpanning {
                rank,
                dim: analysis.cols(),
            });
        }
        Ok(Self { analysis })
    }

    /// Number of frame vectors `k`.
    pub fn len(&self) -> usize {
        self.analysis.rows()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Dimension `n` of the ambient space.
    pub fn dim(&self) -> usize {
        self.analysis.cols()
    }

    pub fn vector(&self, i: usize) -> BinVector {
        self.analysis.row(i)
    }

    pub fn vectors(&self) -> Vec<BinVector> {
        self.analysis.row_vectors()
    }

    pub fn analysis(&self) -> &BinMatrix {
        &self.analysis
    }

    pub fn into_analysis(self) -> BinMatrix {
        self.analysis
    }

    pub fn synthesis(&self) -> BinMatrix {
        self.analysis.transpose()
    }

    pub fn gram(&self) -> GramMatrix {
        gram(&self.analysis)
    }

    pub fn is_parseval(&self) -> bool {
        is_parseval(&self.analysis)
    }

    pub fn reconstruct(&self, x: &BinVector) -> Result<BinVector> {
        reconstruct(x, self)
    }
}

/// The `k x k` matrix of pairwise dot products, `G = Theta Theta*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix(BinMatrix);

impl GramMatrix {
    pub fn matrix(&self) -> &BinMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> BinMatrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.is_idempotent()
    }
}

impl AsRef<BinMatrix> for GramMatrix {
    fn as_ref(&self) -> &BinMatrix {
        &self.0
    }
}

/// Stacks the frame vectors as rows.
pub fn analysis_matrix(vectors: &[BinVector]) -> Result<BinMatrix> {
    BinMatrix::from_rows(vectors)
}

/// `Theta* Theta = I_n`.
pub fn is_parseval(theta: &BinMatrix) -> bool {
    theta
        .transpose()
        .mul(theta)
        .map(|p| p.is_identity())
        .unwrap_or(false)
}

/// `sum_j (x, f_j) f_j`. Equals `x` for every `x` iff the frame is Parseval;
/// on other frames it returns whatever the sum gives.
pub fn reconstruct(x: &BinVector, frame: &Frame) -> Result<BinVector> {
    reconstruct_with(frame.analysis(), x)
}

/// The reconstruction sum for an arbitrary analysis matrix, spanning or not.
pub fn reconstruct_with(theta: &BinMatrix, x: &BinVector) -> Result<BinVector> {
    let coeffs = theta.mul_vec(x)?;
    let mut out = BinVector::zeros(theta.cols())?;
    for j in coeffs.support() {
        out ^= &theta.row(j);
    }
    Ok(out)
}

pub fn gram(theta: &BinMatrix) -> GramMatrix {
    GramMatrix(theta.mul(&theta.transpose()).expect("conformable"))
}

/// `U U* = I` for a square `U`. For square matrices this forces `U* U = I` too.
pub fn is_orthogonal(u: &BinMatrix) -> Result<bool> {
    u.require_square()?;
    Ok(gram(u).matrix().is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinMatrix {
        BinMatrix::parse_rows(rows).unwrap()
    }

    fn v(s: &str) -> BinVector {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_basis_analysis_is_identity() {
        let vs: Vec<_> = (0..3).map(|i| BinVector::basis(3, i).unwrap()).collect();
        assert_eq!(analysis_matrix(&vs).unwrap(), BinMatrix::identity(3).unwrap());
    }

    #[test]
    fn all_ones_frame_in_dimension_one() {
        let f = Frame::new(&[v("1"), v("1"), v("1")]).unwrap();
        assert_eq!(*f.analysis(), BinMatrix::ones(3, 1).unwrap());
        assert!(f.is_parseval());
        assert_eq!(*f.gram().matrix(), BinMatrix::ones(3, 3).unwrap());
        assert_eq!(f.reconstruct(&v("1")).unwrap(), v("1"));
        assert!(!is_parseval(&BinMatrix::ones(2, 1).unwrap()));
    }

    #[test]
    fn rows_of_orthogonal_class() {
        let vs = [v("1110"), v("1101"), v("1011"), v("0111")];
        let theta = analysis_matrix(&vs).unwrap();
        assert_eq!(theta.row_vectors(), vs.to_vec());
        assert!(is_orthogonal(&theta).unwrap());
    }

    #[test]
    fn ragged_and_non_spanning_are_different_errors() {
        assert!(matches!(
            Frame::new(&[v("10"), v("101")]),
            Err(Error::Dimension { .. })
        ));
        assert_eq!(
            Frame::new(&[v("110"), v("110"), v("000")]),
            Err(Error::NotSpanning { rank: 1, dim: 3 })
        );
    }

    #[test]
    fn reconstruction_fails_off_parseval() {
        let f = Frame::new(&[v("10"), v("11")]).unwrap();
        assert!(!f.is_parseval());
        assert_eq!(f.reconstruct(&v("01")).unwrap(), v("11"));
    }

    #[test]
    fn reconstruct_canonical_basis() {
        let f = Frame::from_analysis(BinMatrix::identity(5).unwrap()).unwrap();
        for x in 0..32 {
            let x = BinVector::from_integer(5, x).unwrap();
            assert_eq!(f.reconstruct(&x).unwrap(), x);
        }
        assert!(matches!(f.reconstruct(&v("101")), Err(Error::Dimension { .. })));
    }

    #[test]
    fn gram_examples() {
        assert!(gram(&BinMatrix::identity(4).unwrap()).matrix().is_identity());
        let g = gram(&m(&["11", "10", "01"]));
        assert_eq!(*g.matrix(), m(&["011", "110", "101"]));
    }

    #[test]
    fn orthogonality() {
        let p = m(&["010", "001", "100"]);
        assert!(is_orthogonal(&p).unwrap());
        assert!(!is_orthogonal(&BinMatrix::ones(3, 3).unwrap()).unwrap());
        assert_eq!(
            is_orthogonal(&m(&["10", "01", "11"])),
            Err(Error::NotSquare { rows: 3, cols: 2 })
        );
    }
}
