//! Exhaustive catalogs: orthogonal matrices up to permutation equivalence,
//! circulant Gram matrices of cyclic Parseval frames, and the cyclic frames
//! among those whose vectors do not repeat.

use std::collections::HashSet;
use std::thread;

use crate::equiv::{canonical_form, CanonMode};
use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BinVector};
use crate::gramfactor::{factor_gram, GramCandidate};

pub const MAX_ORTHOGONAL_K: usize = 6;
pub const MAX_CYCLIC_K: usize = 64;

/// One representative per permutation-equivalence class of orthogonal
/// `k x k` matrices. Each representative has strictly ascending column
/// integers and is the lexicographically least such column tuple in its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalCatalog {
    pub k: usize,
    pub classes: Vec<BinMatrix>,
}

impl OrthogonalCatalog {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Column integers of each representative (entry `i` of a column is bit `i`).
    pub fn column_sets(&self) -> Vec<Vec<u64>> {
        self.classes.iter().map(column_integers).collect()
    }
}

pub fn column_integers(m: &BinMatrix) -> Vec<u64> {
    m.column_vectors()
        .iter()
        .map(|c| c.to_integer().expect("at most 64 rows"))
        .collect()
}

/// Ascending tuples of odd, pairwise orthogonal columns of length `k`.
fn orthogonal_tuples(k: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if prefix.len() == k {
        out.push(prefix.clone());
        return;
    }
    let start = prefix.last().map_or(1, |&c| c + 1);
    // Leave room for the remaining columns.
    let remaining = (k - prefix.len()) as u64;
    let end = (1u64 << k) - (remaining - 1);
    for c in start..end {
        if c.count_ones() % 2 == 1 && prefix.iter().all(|&p| (p & c).count_ones() % 2 == 0) {
            prefix.push(c);
            orthogonal_tuples(k, prefix, out);
            prefix.pop();
        }
    }
}

pub fn enum_orthogonal(k: usize) -> Result<OrthogonalCatalog> {
    if !(1..=MAX_ORTHOGONAL_K).contains(&k) {
        return Err(Error::UnsupportedSize {
            size: k,
            min: 1,
            max: MAX_ORTHOGONAL_K,
        });
    }
    let mut tuples = Vec::new();
    orthogonal_tuples(k, &mut Vec::with_capacity(k), &mut tuples);
    let mut seen = HashSet::new();
    let mut classes = Vec::new();
    for t in tuples {
        let m = BinMatrix::from_column_integers(k, &t)?;
        if seen.insert(canonical_form(&m, CanonMode::Independent)?.matrix) {
            classes.push(m);
        }
    }
    Ok(OrthogonalCatalog { k, classes })
}

/// A symmetric idempotent circulant with odd columns: the Gram matrix of a
/// cyclic Parseval `(k, rank)` frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantGram {
    pub k: usize,
    pub first_row: BinVector,
    pub rank: usize,
}

impl CirculantGram {
    pub fn matrix(&self) -> BinMatrix {
        BinMatrix::circulant(&self.first_row)
    }

    /// Whether the rows of the circulant are pairwise distinct, which for a
    /// spanning frame is the same as its vectors being pairwise distinct.
    pub fn rows_distinct(&self) -> bool {
        let m = self.matrix();
        let rows: HashSet<BinVector> = m.row_vectors().into_iter().collect();
        rows.len() == self.k
    }
}

fn check_cyclic_k(k: usize) -> Result<()> {
    if !(1..=MAX_CYCLIC_K).contains(&k) {
        return Err(Error::UnsupportedSize {
            size: k,
            min: 1,
            max: MAX_CYCLIC_K,
        });
    }
    Ok(())
}

/// First row of a symmetric circulant from its free bits `r_0..=r_{k/2}`.
fn symmetric_row(k: usize, free: u64) -> u64 {
    let mut r = free & 1;
    for i in 1..=k / 2 {
        if (free >> i) & 1 == 1 {
            r |= (1 << i) | (1 << (k - i));
        }
    }
    r
}

/// `C^2 = C` for the circulant with first row `r` (bit `j` is entry `j`).
/// Row `i` of the circulant is `r` rotated by `i`, and the first row of `C^2`
/// is the sum of the rows selected by `r`.
fn circulant_idempotent(k: usize, r: u64) -> bool {
    let mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let rotate = |i: u32| {
        if i == 0 {
            r
        } else {
            ((r << i) | (r >> (k as u32 - i))) & mask
        }
    };
    let mut sq = 0u64;
    let mut bits = r;
    while bits != 0 {
        sq ^= rotate(bits.trailing_zeros());
        bits &= bits - 1;
    }
    sq == r
}

fn cyclic_rows_in(k: usize, free: std::ops::Range<u64>) -> Vec<u64> {
    free.filter_map(|f| {
        // Weight parity of a symmetric row: r_0 plus the middle entry for even k.
        let middle = k % 2 == 0 && (f >> (k / 2)) & 1 == 1;
        if (f & 1 == 1) == middle {
            return None;
        }
        let r = symmetric_row(k, f);
        circulant_idempotent(k, r).then_some(r)
    })
    .collect()
}

fn to_grams(k: usize, mut rows: Vec<u64>) -> Result<Vec<CirculantGram>> {
    rows.sort_unstable();
    rows.dedup();
    rows.into_iter()
        .map(|r| {
            let first_row = BinVector::from_integer(k, r)?;
            let rank = BinMatrix::circulant(&first_row).rank();
            Ok(CirculantGram { k, first_row, rank })
        })
        .collect()
}

/// Every circulant Gram matrix of a cyclic Parseval frame with `k` vectors,
/// sorted by the integer encoding of the first row.
pub fn enum_cyclic_gram(k: usize) -> Result<Vec<CirculantGram>> {
    enum_cyclic_gram_jobs(k, 1)
}

/// [`enum_cyclic_gram`] with the candidate space split over `jobs` threads.
pub fn enum_cyclic_gram_jobs(k: usize, jobs: usize) -> Result<Vec<CirculantGram>> {
    check_cyclic_k(k)?;
    let total = 1u64 << (k / 2 + 1);
    let jobs = (jobs.max(1) as u64).min(total);
    let rows = if jobs == 1 {
        cyclic_rows_in(k, 0..total)
    } else {
        let chunk = total.div_ceil(jobs);
        thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let lo = j * chunk;
                    let hi = ((j + 1) * chunk).min(total);
                    s.spawn(move || cyclic_rows_in(k, lo..hi))
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };
    to_grams(k, rows)
}

/// A cyclic Parseval frame with fewer dimensions than vectors and no
/// repeated vectors, given by its Gram matrix and an analysis matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonRepeatingPair {
    pub gram: CirculantGram,
    pub theta: BinMatrix,
}

pub fn enum_nonrepeating(k: usize) -> Result<Vec<NonRepeatingPair>> {
    enum_nonrepeating_jobs(k, 1)
}

pub fn enum_nonrepeating_jobs(k: usize, jobs: usize) -> Result<Vec<NonRepeatingPair>> {
    enum_cyclic_gram_jobs(k, jobs)?
        .into_iter()
        .filter(|g| g.rank < k && g.rows_distinct())
        .map(|gram| {
            let theta = factor_gram(&GramCandidate::new(gram.matrix())?)?.into_theta();
            Ok(NonRepeatingPair { gram, theta })
        })
        .collect()
}

/// The cyclic shift `S e_j = e_{j+1 mod k}`.
pub fn shift_matrix(k: usize) -> Result<BinMatrix> {
    BinMatrix::shift(k)
}

/// Whether the column space of `theta` is invariant under the cyclic shift.
pub fn is_shift_invariant(theta: &BinMatrix) -> Result<bool> {
    let shifted = shift_matrix(theta.rows())?.mul(theta)?;
    Ok(theta.hstack(&shifted)?.rank() == theta.rank())
}
