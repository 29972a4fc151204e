//! Gram matrices of Parseval frames and their factorization.
//!
//! A symmetric idempotent `M` is `Theta Theta*` for some `Theta` with
//! orthonormal columns iff at least one column of `M` is odd (equivalently,
//! `M` has a non-zero diagonal entry).
//!
//! The factor is assembled column by column. With `n = rank(M)` and `V` a
//! maximal independent set of rows of `I + M` (so `V x = 0` iff `M x = x`),
//! each new column solves
//!
//! ```text
//! ( V     )              ( 0_{k-n} )
//! ( Y     ) w_{s+1}  =   ( 0_s     )
//! ( iota* )              ( 1       )
//! ```
//!
//! where `Y` holds the columns found so far. While more columns are still to
//! come, the chosen solution must keep `iota_k` outside the row span of
//! `V`, `Y` and `w_{s+1}`, otherwise the next system is inconsistent.
//!
//! The first column is the lowest-index odd column of `M` that satisfies this
//! span condition. An odd column always solves the system for `s = 0`, but it
//! can violate the span condition: for `M = I + p p*` with `p = (0,1,1,1)`
//! the only odd column is `e_1`, and no odd vector fixed by `M` is orthogonal
//! to it. When no odd column qualifies the search falls back to the general
//! step with `s = 0`.

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BinVector};

/// A symmetric idempotent square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramCandidate {
    m: BinMatrix,
}

impl GramCandidate {
    pub fn new(m: BinMatrix) -> Result<Self> {
        m.require_square()?;
        if !m.is_symmetric() {
            return Err(Error::InvalidInput("matrix is not symmetric".into()));
        }
        if !m.is_idempotent() {
            return Err(Error::InvalidInput("matrix is not idempotent".into()));
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &BinMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> BinMatrix {
        self.m
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }
}

/// `Theta` with `Theta Theta* = M` and `Theta* Theta = I_n`, `n = rank(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    theta: BinMatrix,
}

impl Factorization {
    pub fn theta(&self) -> &BinMatrix {
        &self.theta
    }

    pub fn into_theta(self) -> BinMatrix {
        self.theta
    }

    pub fn rank(&self) -> usize {
        self.theta.cols()
    }
}

/// Indices of the odd columns of `m`, ascending.
pub fn odd_columns(m: &BinMatrix) -> Vec<usize> {
    m.column_parities().support().collect()
}

pub fn is_gram_of_parseval(m: &GramCandidate) -> bool {
    !m.matrix().column_parities().is_zero()
}

fn rank_of(rows: &[BinVector]) -> usize {
    if rows.is_empty() {
        0
    } else {
        BinMatrix::from_rows(rows).expect("uniform rows").rank()
    }
}

/// Whether `x` lies in the span of `rows`.
fn in_span(rows: &[BinVector], x: &BinVector) -> bool {
    let mut with = rows.to_vec();
    with.push(x.clone());
    rank_of(&with) == rank_of(rows)
}

/// Factors `m` as `Theta Theta*` with orthonormal columns.
pub fn factor_gram(m: &GramCandidate) -> Result<Factorization> {
    let mm = m.matrix();
    let parities = mm.column_parities();
    if parities.is_zero() {
        return Err(Error::NotGramMatrix {
            column_parities: parities,
        });
    }
    let k = mm.rows();
    let n = mm.rank();
    let iota = BinVector::ones(k)?;
    let complement = mm.add_identity()?;
    let v_rows: Vec<BinVector> = complement
        .independent_rows()
        .into_iter()
        .map(|i| complement.row(i))
        .collect();
    debug_assert_eq!(v_rows.len(), k - n);

    // `constraints` is V stacked with the columns chosen so far.
    let mut constraints = v_rows;
    let mut omegas: Vec<BinVector> = Vec::with_capacity(n);

    let keeps_iota_outside = |constraints: &[BinVector], w: &BinVector| {
        let mut rows = constraints.to_vec();
        rows.push(w.clone());
        !in_span(&rows, &iota)
    };

    let seed = odd_columns(mm)
        .into_iter()
        .map(|j| mm.column(j))
        .find(|w| n == 1 || keeps_iota_outside(&constraints, w));
    if let Some(w) = seed {
        constraints.push(w.clone());
        omegas.push(w);
    }

    while omegas.len() < n {
        let s = omegas.len();
        let mut rows = constraints.clone();
        rows.push(iota.clone());
        let mut rhs = BinVector::zeros(rows.len())?;
        rhs.set(rows.len() - 1, true);
        let solutions = BinMatrix::from_rows(&rows)?.solve(&rhs)?;
        let must_keep_iota_outside = s + 2 <= n;
        let w = solutions
            .iter()
            .find(|w| !must_keep_iota_outside || keeps_iota_outside(&constraints, w))
            .ok_or_else(|| Error::InvalidInput(format!("factorization stalled after {s} of {n} columns")))?;
        constraints.push(w.clone());
        omegas.push(w);
    }

    Ok(Factorization {
        theta: BinMatrix::from_columns(&omegas)?,
    })
}
