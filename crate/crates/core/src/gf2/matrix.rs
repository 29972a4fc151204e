use std::fmt;

use super::vector::{dot_words, words_for, xor_words, BinVector, WORD_BITS};
use crate::error::{Error, Result};

/// A dense `rows x cols` matrix over GF(2) with bit-packed rows.
///
/// Row `i` occupies `stride` consecutive words of `data`; entry `(i, j)` is bit
/// `j % 64` of word `j / 64` of that row. Bits past `cols` are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyDimension("matrix"));
        }
        let stride = words_for(cols);
        Ok(Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| true)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut m = Self::zeros(rows, cols)?;
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Stacks equal-length vectors as rows.
    pub fn from_rows(rows: &[BinVector]) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyDimension("matrix"))?;
        let mut m = Self::zeros(rows.len(), first.len())?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != m.cols {
                return Err(Error::Dimension {
                    expected: m.cols,
                    found: r.len(),
                });
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Places equal-length vectors side by side as columns.
    pub fn from_columns(cols: &[BinVector]) -> Result<Self> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    /// Parses rows written as `0`/`1` strings, e.g. `["101", "011"]`.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.parse::<BinVector>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }

    /// Columns given by their little-endian integer encodings, e.g. `k=4`,
    /// `[7, 11, 13, 14]`.
    pub fn from_column_integers(rows: usize, cols: &[u64]) -> Result<Self> {
        let cols = cols
            .iter()
            .map(|&c| BinVector::from_integer(rows, c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(&cols)
    }

    /// The circulant whose row `i` is `first_row` cyclically shifted right by `i`,
    /// i.e. `C[i][j] = first_row[(j - i) mod k]`.
    pub fn circulant(first_row: &BinVector) -> Self {
        let k = first_row.len();
        Self::from_fn(k, k, |i, j| first_row.get((j + k - i) % k)).expect("non-empty")
    }

    /// The cyclic shift `S` with `S e_j = e_{j+1 mod k}`.
    pub fn shift(k: usize) -> Result<Self> {
        Self::from_fn(k, k, |i, j| i == (j + 1) % k)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        (self.data[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        let w = &mut self.data[i * self.stride + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if bit {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.stride {
                self.data.swap(a * self.stride + w, b * self.stride + w);
            }
        }
    }

    /// `row[dst] ^= row[src]`.
    pub(crate) fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (lo, hi) = self.data.split_at_mut(src.max(dst) * s);
        if src < dst {
            xor_words(&mut hi[..s], &lo[src * s..src * s + s]);
        } else {
            xor_words(&mut lo[dst * s..dst * s + s], &hi[..s]);
        }
    }

    pub fn row(&self, i: usize) -> BinVector {
        BinVector::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn column(&self, j: usize) -> BinVector {
        let mut v = BinVector::zeros(self.rows).expect("rows > 0");
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn row_vectors(&self) -> Vec<BinVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column_vectors(&self) -> Vec<BinVector> {
        self.transpose().row_vectors()
    }

    /// The adjoint `A*`.
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows).expect("non-empty");
        for i in 0..self.rows {
            for (w, &word) in self.row_words(i).iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let j = w * WORD_BITS + word.trailing_zeros() as usize;
                    word &= word - 1;
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// The exact product `self * rhs`.
    pub fn mul(&self, rhs: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols)?;
        for i in 0..self.rows {
            for (w, &word) in self.row_words(i).iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let k = w * WORD_BITS + word.trailing_zeros() as usize;
                    word &= word - 1;
                    let src = rhs.row_words(k);
                    xor_words(&mut out.data[i * out.stride..(i + 1) * out.stride], src);
                }
            }
        }
        Ok(out)
    }

    /// `self * x` for a column vector `x`.
    pub fn mul_vec(&self, x: &BinVector) -> Result<BinVector> {
        if self.cols != x.len() {
            return Err(Error::Dimension {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BinVector::zeros(self.rows)?;
        for i in 0..self.rows {
            if dot_words(self.row_words(i), x.words()) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &BinMatrix) -> Result<BinMatrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Dimension {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let mut out = self.clone();
        xor_words(&mut out.data, &rhs.data);
        Ok(out)
    }

    /// `self + I`, for square matrices.
    pub fn add_identity(&self) -> Result<BinMatrix> {
        self.require_square()?;
        let mut out = self.clone();
        for i in 0..self.rows {
            let b = out.get(i, i);
            out.set(i, i, !b);
        }
        Ok(out)
    }

    /// Places `rhs` to the right of `self`.
    pub fn hstack(&self, rhs: &BinMatrix) -> Result<BinMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::Dimension {
                expected: self.rows,
                found: rhs.rows,
            });
        }
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                rhs.get(i, j - self.cols)
            }
        })
    }

    /// Places `rhs` below `self`.
    pub fn vstack(&self, rhs: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != rhs.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: rhs.cols,
            });
        }
        let mut out = Self::zeros(self.rows + rhs.rows, self.cols)?;
        out.data[..self.data.len()].copy_from_slice(&self.data);
        out.data[self.data.len()..].copy_from_slice(&rhs.data);
        Ok(out)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<BinMatrix> {
        if let Some(&bad) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::Dimension {
                expected: self.cols,
                found: bad + 1,
            });
        }
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    /// `out[i][j] = self[row_perm[i]][col_perm[j]]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> BinMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(row_perm[i], col_perm[j])).expect("non-empty")
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// `M^2 = M`; false for non-square matrices.
    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Parity of each column, i.e. `iota* A` as a vector.
    pub fn column_parities(&self) -> BinVector {
        let mut acc = vec![0u64; self.stride];
        for i in 0..self.rows {
            xor_words(&mut acc, self.row_words(i));
        }
        BinVector::from_words(self.cols, acc)
    }

    /// Parity of each row, i.e. `A iota`.
    pub fn row_parities(&self) -> BinVector {
        let iota = BinVector::ones(self.cols).expect("cols > 0");
        self.mul_vec(&iota).expect("conformable")
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BinMatrix {
    /// One line of `0`/`1` characters per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row(i))?;
        }
        f.write_str("]")
    }
}
