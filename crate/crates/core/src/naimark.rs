//! Orthonormal extension and Naimark complements.
//!
//! An orthonormal sequence `v_1, ..., v_r` in GF(2)^k with `r < k` extends to
//! an orthonormal basis iff its sum is not the all-ones vector `iota_k`. The
//! extension is built one vector at a time by solving
//!
//! ```text
//! ( V      )             ( 0_s )
//! ( iota*  ) v_{s+1}  =  (  1  )
//! ```
//!
//! and, while at least two more vectors are still needed, picking a solution
//! that keeps the running sum away from `iota_k`. Solutions are scanned in the
//! Gray-code order of [`AffineSolutionSet::iter`](crate::gf2::AffineSolutionSet::iter)
//! and the first admissible one wins, so results are reproducible.
//!
//! A Parseval frame has a complement iff its analysis matrix columns extend,
//! i.e. iff `Theta iota_n != iota_k`, i.e. iff some frame vector is even.

use crate::error::{Error, Result};
use crate::frame::is_parseval;
use crate::gf2::{BinMatrix, BinVector};

/// Vectors in GF(2)^dim with `(v_i, v_j) = delta_ij`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthonormalSequence {
    dim: usize,
    vecs: Vec<BinVector>,
}

impl OrthonormalSequence {
    pub fn new(dim: usize, vecs: Vec<BinVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension("vector"));
        }
        for v in &vecs {
            if v.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        for (i, a) in vecs.iter().enumerate() {
            for (j, b) in vecs.iter().enumerate().skip(i) {
                if a.dot(b)? != (i == j) {
                    return Err(Error::InvalidInput(format!(
                        "vectors {i} and {j} violate orthonormality"
                    )));
                }
            }
        }
        Ok(Self { dim, vecs })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Self::new(dim, Vec::new())
    }

    /// The columns of `theta`, which must be orthonormal.
    pub fn from_columns(theta: &BinMatrix) -> Result<Self> {
        Self::new(theta.rows(), theta.column_vectors())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    pub fn vectors(&self) -> &[BinVector] {
        &self.vecs
    }

    pub fn into_vectors(self) -> Vec<BinVector> {
        self.vecs
    }

    pub fn sum(&self) -> BinVector {
        let mut s = BinVector::zeros(self.dim).expect("dim > 0");
        for v in &self.vecs {
            s ^= v;
        }
        s
    }

    /// The vectors as the columns of a `dim x len` matrix.
    pub fn to_matrix(&self) -> Result<BinMatrix> {
        BinMatrix::from_columns(&self.vecs)
    }
}

/// Whether `seq` extends to an orthonormal basis of GF(2)^k: its sum differs
/// from `iota_k`. A sequence that is already a basis counts as extendable.
pub fn is_extendable(seq: &OrthonormalSequence) -> bool {
    seq.len() == seq.dim() || !seq.sum().is_all_ones()
}

/// Completes `seq` to an orthonormal basis; the first `seq.len()` vectors are
/// kept in place and all `k` vectors sum to `iota_k`.
pub fn extend_to_basis(seq: &OrthonormalSequence) -> Result<OrthonormalSequence> {
    let k = seq.dim();
    if !is_extendable(seq) {
        return Err(Error::ExtensionObstruction { sum: seq.sum() });
    }
    let iota = BinVector::ones(k)?;
    let mut vecs = seq.vectors().to_vec();
    let mut sum = seq.sum();
    while vecs.len() < k {
        let s = vecs.len();
        let mut rows = vecs.clone();
        rows.push(iota.clone());
        let mut rhs = BinVector::zeros(s + 1)?;
        rhs.set(s, true);
        let solutions = BinMatrix::from_rows(&rows)?.solve(&rhs)?;
        // Until the last step the new sum must stay different from iota.
        let must_avoid_iota = s + 2 <= k;
        let next = solutions
            .iter()
            .find(|x| !must_avoid_iota || !(&sum ^ x).is_all_ones())
            .ok_or_else(|| Error::ExtensionObstruction { sum: sum.clone() })?;
        sum ^= &next;
        vecs.push(next);
    }
    debug_assert!(sum.is_all_ones());
    Ok(OrthonormalSequence { dim: k, vecs })
}

fn require_parseval(theta: &BinMatrix) -> Result<()> {
    if !is_parseval(theta) {
        return Err(Error::InvalidInput(
            "analysis matrix is not Parseval (columns are not orthonormal)".into(),
        ));
    }
    Ok(())
}

/// True iff the Parseval frame with analysis matrix `theta` has a Naimark
/// complement, i.e. some frame vector (row) is even. A square `theta` is an
/// orthogonal matrix with only odd rows and has none.
pub fn has_naimark_complement(theta: &BinMatrix) -> Result<bool> {
    require_parseval(theta)?;
    Ok(!theta.row_parities().is_all_ones())
}

/// A `k x (k-n)` Parseval analysis matrix `psi` with
/// `Theta Theta* + psi psi* = I_k`, obtained by extending the columns of
/// `theta` to an orthonormal basis.
pub fn naimark_complement(theta: &BinMatrix) -> Result<BinMatrix> {
    require_parseval(theta)?;
    let seq = OrthonormalSequence::from_columns(theta)?;
    if seq.len() == seq.dim() {
        return Err(Error::ExtensionObstruction { sum: seq.sum() });
    }
    let full = extend_to_basis(&seq)?;
    BinMatrix::from_columns(&full.vectors()[seq.len()..])
}
