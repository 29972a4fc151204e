//! Naive dense reference implementations used as test oracles.
#![allow(dead_code)]

use binframe_core::naimark::{extend_to_basis, OrthonormalSequence};
use binframe_core::{BinMatrix, BinVector};

pub type Dense = Vec<Vec<u8>>;

pub fn dense(m: &BinMatrix) -> Dense {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| u8::from(m.get(i, j))).collect())
        .collect()
}

pub fn packed(d: &Dense) -> BinMatrix {
    BinMatrix::from_fn(d.len(), d[0].len(), |i, j| d[i][j] == 1).unwrap()
}

pub fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
        .collect()
}

pub fn transpose(a: &Dense) -> Dense {
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    assert_eq!(a[0].len(), m);
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..m).map(|t| a[i][t] & b[t][j]).sum::<u8>() % 2)
                .collect()
        })
        .collect()
}

pub fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x ^ y).collect())
        .collect()
}

pub fn gram(a: &Dense) -> Dense {
    mul(a, &transpose(a))
}

pub fn is_parseval(a: &Dense) -> bool {
    mul(&transpose(a), a) == identity(a[0].len())
}

pub fn rank(a: &Dense) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.len(), m[0].len());
    let mut r = 0;
    for c in 0..cols {
        if let Some(p) = (r..rows).find(|&i| m[i][c] == 1) {
            m.swap(r, p);
            for i in 0..rows {
                if i != r && m[i][c] == 1 {
                    let pivot = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(pivot) {
                        *x ^= y;
                    }
                }
            }
            r += 1;
        }
    }
    r
}

/// Matrix whose entry `(i, j)` is bit `i * cols + j` of `code`.
pub fn from_code(rows: usize, cols: usize, code: u64) -> Dense {
    (0..rows)
        .map(|i| (0..cols).map(|j| ((code >> (i * cols + j)) & 1) as u8).collect())
        .collect()
}

pub fn all_matrices(rows: usize, cols: usize) -> impl Iterator<Item = Dense> {
    (0..1u64 << (rows * cols)).map(move |c| from_code(rows, cols, c))
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

pub fn permute(a: &Dense, rows: &[usize], cols: &[usize]) -> Dense {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| a[i][j]).collect())
        .collect()
}

/// Least orbit element by trying every permutation pair. `Vec<Vec<u8>>`
/// compares row-major with entry `(0,0)` most significant.
pub fn brute_canonical_independent(a: &Dense) -> Dense {
    let rp = permutations(a.len());
    let cp = permutations(a[0].len());
    let mut best: Option<Dense> = None;
    for r in &rp {
        for c in &cp {
            let m = permute(a, r, c);
            if best.as_ref().map_or(true, |b| m < *b) {
                best = Some(m);
            }
        }
    }
    best.unwrap()
}

pub fn brute_canonical_conjugation(a: &Dense) -> Dense {
    permutations(a.len())
        .iter()
        .map(|p| permute(a, p, p))
        .min()
        .unwrap()
}

/// Ascending tuples of odd, pairwise orthogonal column integers of length `k`
/// with exactly `n` entries.
pub fn orthonormal_sets(k: usize, n: usize) -> Vec<Vec<u64>> {
    fn go(k: usize, n: usize, start: u64, pre: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if pre.len() == n {
            out.push(pre.clone());
            return;
        }
        for c in start..1u64 << k {
            if c.count_ones() % 2 == 1 && pre.iter().all(|p| (p & c).count_ones() % 2 == 0) {
                pre.push(c);
                go(k, n, c + 1, pre, out);
                pre.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, n, 1, &mut Vec::new(), &mut out);
    out
}

/// A random orthonormal sequence of `len` vectors in GF(2)^k that can still be
/// extended to a basis, drawn by rejection sampling.
pub fn random_orthonormal<R: rand::Rng>(rng: &mut R, k: usize, len: usize) -> Vec<BinVector> {
    assert!(len < k || k == len);
    let mut vecs: Vec<BinVector> = Vec::new();
    let mut sum = BinVector::zeros(k).unwrap();
    while vecs.len() < len {
        let bits: Vec<bool> = (0..k).map(|_| rng.gen()).collect();
        let v = BinVector::from_bools(bits).unwrap();
        if !v.is_odd() || vecs.iter().any(|u| u.dot(&v).unwrap()) {
            continue;
        }
        let next = &sum ^ &v;
        if vecs.len() + 1 < k && next.is_all_ones() {
            continue;
        }
        sum = next;
        vecs.push(v);
    }
    vecs
}

/// A random Parseval `k x n` analysis matrix: a random orthonormal seed is
/// extended to a basis and `n` random columns of it are kept.
pub fn random_parseval<R: rand::Rng>(rng: &mut R, k: usize, n: usize) -> BinMatrix {
    use rand::seq::SliceRandom;
    let seed_len = rng.gen_range(0..k);
    let seed = random_orthonormal(rng, k, seed_len);
    let seq = OrthonormalSequence::new(k, seed).unwrap();
    let mut basis = extend_to_basis(&seq).unwrap().into_vectors();
    basis.shuffle(rng);
    basis.truncate(n);
    BinMatrix::from_columns(&basis).unwrap()
}
