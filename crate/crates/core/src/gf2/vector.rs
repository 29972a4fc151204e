use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitXor, BitXorAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn dot_words(a: &[u64], b: &[u64]) -> bool {
    let ones: u32 = a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum();
    ones & 1 == 1
}

#[inline]
pub(crate) fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// A vector in GF(2)^len, packed 64 entries per word.
///
/// Entry `i` lives in bit `i % 64` of word `i / 64`; bits past `len` are
/// always zero. The ordering compares vectors by their integer encoding
/// `sum x_i 2^i`, so sorting a list of vectors sorts it numerically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinVector {
    len: usize,
    words: Vec<u64>,
}

impl BinVector {
    /// The zero vector `0_len`.
    pub fn zeros(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyDimension("vector"));
        }
        Ok(Self {
            len,
            words: vec![0; words_for(len)],
        })
    }

    /// The all-ones vector `iota_len`.
    pub fn ones(len: usize) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        v.words.iter_mut().for_each(|w| *w = u64::MAX);
        v.clear_tail();
        Ok(v)
    }

    /// The canonical basis vector with a single one at index `i` (0-based).
    pub fn basis(len: usize, i: usize) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        if i >= len {
            return Err(Error::Dimension {
                expected: len,
                found: i + 1,
            });
        }
        v.set(i, true);
        Ok(v)
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len())?;
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        Ok(v)
    }

    /// Builds a vector from 0/1 entries; any non-zero byte counts as one.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        Self::from_bools(bits.iter().map(|&b| b != 0))
    }

    /// Decodes the little-endian integer encoding: entry `i` is bit `i` of `value`,
    /// so `(1,0,1,1)` is 13.
    pub fn from_integer(len: usize, value: u64) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        if len < 64 && value >> len != 0 {
            return Err(Error::InvalidInput(format!(
                "integer {value} does not fit in {len} entries"
            )));
        }
        v.words[0] = value;
        Ok(v)
    }

    /// The integer encoding, if the vector has at most 64 entries.
    pub fn to_integer(&self) -> Option<u64> {
        (self.len <= 64).then(|| self.words[0])
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false: zero-length vectors cannot be constructed.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if bit {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Number of non-zero entries.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `(v, iota)`: true for odd vectors, false for even ones.
    pub fn parity(&self) -> bool {
        self.weight() & 1 == 1
    }

    pub fn is_odd(&self) -> bool {
        self.parity()
    }

    pub fn is_even(&self) -> bool {
        !self.parity()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_all_ones(&self) -> bool {
        self.weight() == self.len
    }

    /// The dot product `sum u_i v_i mod 2`.
    pub fn dot(&self, other: &BinVector) -> Result<bool> {
        self.check_len(other)?;
        Ok(dot_words(&self.words, &other.words))
    }

    /// Entrywise XOR, with a dimension check.
    pub fn checked_add(&self, other: &BinVector) -> Result<BinVector> {
        self.check_len(other)?;
        let mut out = self.clone();
        xor_words(&mut out.words, &other.words);
        Ok(out)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of the non-zero entries, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * WORD_BITS + bit)
            })
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        let mut v = Self { len, words };
        v.clear_tail();
        v
    }

    fn check_len(&self, other: &BinVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::Dimension {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl BitXorAssign<&BinVector> for BinVector {
    /// # Panics
    ///
    /// Panics if the lengths differ; use [`BinVector::checked_add`] to get an error instead.
    fn bitxor_assign(&mut self, rhs: &BinVector) {
        assert_eq!(self.len, rhs.len, "vector length mismatch");
        xor_words(&mut self.words, &rhs.words);
    }
}

impl BitXor<&BinVector> for &BinVector {
    type Output = BinVector;

    fn bitxor(self, rhs: &BinVector) -> BinVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl Ord for BinVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            // most significant word first
            self.words.iter().rev().cmp(other.words.iter().rev())
        })
    }
}

impl PartialOrd for BinVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinVector({self})")
    }
}

impl FromStr for BinVector {
    type Err = Error;

    /// Parses a string of `0`/`1` characters, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidInput(format!("non-binary character {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Self::from_bools(bits)
    }
}
