//! Gauss-Jordan elimination, rank, and affine solution sets.
//!
//! Pivoting is deterministic: columns are scanned left to right and the pivot
//! for a column is the lowest-index remaining row with a one there. The reduced
//! form of a given matrix is therefore reproducible, and so are the particular
//! solution and null-space basis returned by [`BinMatrix::solve`].

use super::matrix::BinMatrix;
use super::vector::BinVector;
use crate::error::{Error, Result};

/// Reduced row echelon form together with the pivot column of each non-zero row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: BinMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduces `m` in place, pivoting only in the first `pivot_cols` columns.
fn reduce(m: &mut BinMatrix, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == m.rows() {
            break;
        }
        let Some(p) = (r..m.rows()).find(|&i| m.get(i, c)) else {
            continue;
        };
        m.swap_rows(r, p);
        for i in 0..m.rows() {
            if i != r && m.get(i, c) {
                m.xor_row_into(r, i);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl BinMatrix {
    pub fn echelon(&self) -> Echelon {
        let mut reduced = self.clone();
        let pivots = reduce(&mut reduced, self.cols());
        Echelon { reduced, pivots }
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        reduce(&mut m, self.cols()).len()
    }

    /// Indices of a maximal linearly independent set of rows, chosen greedily in
    /// ascending order (a row is kept iff it increases the rank).
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut basis: Vec<(usize, BinVector)> = Vec::new(); // (pivot column, reduced row)
        let mut kept = Vec::new();
        for i in 0..self.rows() {
            let mut row = self.row(i);
            for (p, b) in &basis {
                if row.get(*p) {
                    row ^= b;
                }
            }
            let lead = row.support().next();
            if let Some(p) = lead {
                basis.push((p, row));
                kept.push(i);
            }
        }
        kept
    }

    /// All solutions `x` of `self * x = b`.
    pub fn solve(&self, b: &BinVector) -> Result<AffineSolutionSet> {
        if b.len() != self.rows() {
            return Err(Error::Dimension {
                expected: self.rows(),
                found: b.len(),
            });
        }
        let n = self.cols();
        let rhs = BinMatrix::from_columns(std::slice::from_ref(b))?;
        let mut aug = self.hstack(&rhs)?;
        let pivots = reduce(&mut aug, n);
        let rank = pivots.len();

        if (rank..aug.rows()).any(|i| aug.get(i, n)) {
            return Ok(AffineSolutionSet {
                dim: n,
                particular: None,
                null_basis: Vec::new(),
            });
        }

        let mut particular = BinVector::zeros(n)?;
        for (i, &p) in pivots.iter().enumerate() {
            if aug.get(i, n) {
                particular.set(p, true);
            }
        }

        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let null_basis = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BinVector::zeros(n).expect("n > 0");
                v.set(f, true);
                for (i, &p) in pivots.iter().enumerate() {
                    if aug.get(i, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();

        Ok(AffineSolutionSet {
            dim: n,
            particular: Some(particular),
            null_basis,
        })
    }
}

/// The solution set of a linear system: a particular solution plus the span of
/// a null-space basis, or empty when the system is inconsistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolutionSet {
    dim: usize,
    particular: Option<BinVector>,
    null_basis: Vec<BinVector>,
}

impl AffineSolutionSet {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }

    pub fn particular(&self) -> Option<&BinVector> {
        self.particular.as_ref()
    }

    pub fn null_basis(&self) -> &[BinVector] {
        &self.null_basis
    }

    /// Length of the unknown vector.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of solutions, `2^nullity` or zero. Saturates at `u128::MAX`.
    pub fn count(&self) -> u128 {
        match self.particular {
            None => 0,
            Some(_) if self.null_basis.len() >= 128 => u128::MAX,
            Some(_) => 1u128 << self.null_basis.len(),
        }
    }

    /// Solutions in Gray-code order over the null-basis coefficients, starting
    /// from the particular solution. Consecutive items differ by one basis vector.
    pub fn iter(&self) -> SolutionIter<'_> {
        SolutionIter {
            set: self,
            next_index: 0,
            current: self.particular.clone(),
        }
    }
}

impl<'a> IntoIterator for &'a AffineSolutionSet {
    type Item = BinVector;
    type IntoIter = SolutionIter<'a>;

    fn into_iter(self) -> SolutionIter<'a> {
        self.iter()
    }
}

pub struct SolutionIter<'a> {
    set: &'a AffineSolutionSet,
    next_index: u128,
    current: Option<BinVector>,
}

impl Iterator for SolutionIter<'_> {
    type Item = BinVector;

    fn next(&mut self) -> Option<BinVector> {
        let current = self.current.as_mut()?;
        let d = self.set.null_basis.len();
        if self.next_index > 0 {
            if d < 128 && self.next_index >> d != 0 {
                self.current = None;
                return None;
            }
            let flip = self.next_index.trailing_zeros() as usize;
            *current ^= &self.set.null_basis[flip];
        }
        self.next_index += 1;
        Some(current.clone())
    }
}
