//! Permutation equivalence, switching equivalence, and canonical forms.
//!
//! Matrices are totally ordered row-major: row 0 first, and within a row
//! entry `(i, 0)` is the most significant bit. The canonical form of a matrix
//! is the least element of its orbit, either under independent row and column
//! permutations (`A = P1 B P2*`) or under conjugation (`A = P B P*`).
//!
//! The minimum is found by a backtracking search that fixes one row at a time.
//! Columns not yet pinned down are kept in an ordered partition; the smallest
//! possible next row puts zeros before ones inside each cell, which also
//! refines the partition. Only candidates attaining the smallest next row are
//! explored, and candidates in the same orbit of an automorphism that fixes
//! the current prefix are skipped.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::gf2::BinMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanonMode {
    /// Rows and columns permuted independently.
    Independent,
    /// The same permutation applied to rows and columns; square matrices only.
    Conjugation,
}

/// The least orbit element plus the permutations that produce it:
/// `matrix[i][j] = input[row_perm[i]][col_perm[j]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalMatrix {
    pub matrix: BinMatrix,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

/// Row-major comparison; `(0, 0)` is the most significant entry.
pub fn cmp_row_major(a: &BinMatrix, b: &BinMatrix) -> Ordering {
    a.shape().cmp(&b.shape()).then_with(|| {
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                match a.get(i, j).cmp(&b.get(i, j)) {
                    Ordering::Equal => {}
                    other => return other,
                }
            }
        }
        Ordering::Equal
    })
}

pub const MAX_CANON_COLS: usize = 64;

pub fn canonical_form(a: &BinMatrix, mode: CanonMode) -> Result<CanonicalMatrix> {
    if mode == CanonMode::Conjugation {
        a.require_square()?;
    }
    if a.cols() > MAX_CANON_COLS {
        return Err(Error::UnsupportedSize {
            size: a.cols(),
            min: 1,
            max: MAX_CANON_COLS,
        });
    }
    let mut search = Search::new(a, mode);
    let root = Node {
        placed: Vec::new(),
        cells: vec![(0..a.cols()).collect()],
    };
    search.descend(root);
    let best = search.best.expect("search reaches at least one leaf");
    Ok(CanonicalMatrix {
        matrix: a.permuted(&best.rows, &best.cols),
        row_perm: best.rows,
        col_perm: best.cols,
    })
}

pub fn permutation_equivalent(a: &BinMatrix, b: &BinMatrix) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::Dimension {
            expected: a.rows() * a.cols(),
            found: b.rows() * b.cols(),
        });
    }
    Ok(
        canonical_form(a, CanonMode::Independent)?.matrix
            == canonical_form(b, CanonMode::Independent)?.matrix,
    )
}

/// Frames are switching equivalent iff their Gram matrices are conjugate by
/// a permutation.
pub fn switching_equivalent(f: &Frame, g: &Frame) -> Result<bool> {
    if f.len() != g.len() {
        return Err(Error::Dimension {
            expected: f.len(),
            found: g.len(),
        });
    }
    if f.dim() != g.dim() {
        return Err(Error::Dimension {
            expected: f.dim(),
            found: g.dim(),
        });
    }
    let gf = canonical_form(f.gram().matrix(), CanonMode::Conjugation)?;
    let gg = canonical_form(g.gram().matrix(), CanonMode::Conjugation)?;
    Ok(gf.matrix == gg.matrix)
}

struct Leaf {
    keys: Vec<u64>,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

struct Node {
    /// Input rows fixed so far, in position order.
    placed: Vec<usize>,
    /// Ordered partition of the columns that are not yet pinned down. In
    /// conjugation mode the placed vertices are pinned and excluded.
    cells: Vec<Vec<usize>>,
}

struct Search {
    mode: CanonMode,
    nrows: usize,
    ncols: usize,
    row_bits: Vec<u64>,
    best: Option<Leaf>,
    /// Row and column maps of automorphisms discovered so far.
    autos: Vec<(Vec<usize>, Vec<usize>)>,
    path_keys: Vec<u64>,
}

impl Search {
    fn new(a: &BinMatrix, mode: CanonMode) -> Self {
        let row_bits = (0..a.rows())
            .map(|i| (0..a.cols()).fold(0u64, |acc, j| acc | (u64::from(a.get(i, j)) << j)))
            .collect();
        Self {
            mode,
            nrows: a.rows(),
            ncols: a.cols(),
            row_bits,
            best: None,
            autos: Vec::new(),
            path_keys: Vec::new(),
        }
    }

    #[inline]
    fn bit(&self, row: usize, col: usize) -> bool {
        (self.row_bits[row] >> col) & 1 == 1
    }

    #[inline]
    fn key_bit(&self, pos: usize) -> u64 {
        1u64 << (self.ncols - 1 - pos)
    }

    /// Smallest key of row `r` at the next position and the refined cells.
    fn place(&self, node: &Node, r: usize) -> (u64, Vec<Vec<usize>>) {
        let mut key = 0u64;
        let mut pos = 0;
        if self.mode == CanonMode::Conjugation {
            for &p in &node.placed {
                if self.bit(r, p) {
                    key |= self.key_bit(pos);
                }
                pos += 1;
            }
            if self.bit(r, r) {
                key |= self.key_bit(pos);
            }
            pos += 1;
        }
        let mut cells = Vec::with_capacity(node.cells.len() + 1);
        for cell in &node.cells {
            let (ones, zeros): (Vec<usize>, Vec<usize>) = cell
                .iter()
                .copied()
                .filter(|&c| !(self.mode == CanonMode::Conjugation && c == r))
                .partition(|&c| self.bit(r, c));
            pos += zeros.len();
            for _ in 0..ones.len() {
                key |= self.key_bit(pos);
                pos += 1;
            }
            if !zeros.is_empty() {
                cells.push(zeros);
            }
            if !ones.is_empty() {
                cells.push(ones);
            }
        }
        (key, cells)
    }

    fn candidates(&self, node: &Node) -> Vec<usize> {
        match self.mode {
            CanonMode::Independent => (0..self.nrows).filter(|r| !node.placed.contains(r)).collect(),
            CanonMode::Conjugation => node.cells.first().cloned().unwrap_or_default(),
        }
    }

    /// Union-find orbits of the rows under automorphisms fixing `placed`.
    fn orbit_roots(&self, placed: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.nrows).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (rmap, _) in &self.autos {
            if placed.iter().all(|&p| rmap[p] == p) {
                for (x, &y) in rmap.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx.max(ry)] = rx.min(ry);
                    }
                }
            }
        }
        (0..self.nrows).map(|x| find(&mut parent, x)).collect()
    }

    /// Ordering of the current prefix extended by `key` against the best leaf.
    fn cmp_to_best(&self, key: u64) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => {
                let level = self.path_keys.len();
                self.path_keys
                    .iter()
                    .chain([&key])
                    .cmp(best.keys[..=level].iter())
            }
        }
    }

    /// Returns a level to jump back to when the rest of this subtree is known
    /// to mirror one already searched.
    fn descend(&mut self, node: Node) -> Option<usize> {
        let level = node.placed.len();
        if level == self.nrows {
            return self.leaf(&node);
        }
        let scored: Vec<(usize, u64, Vec<Vec<usize>>)> = self
            .candidates(&node)
            .into_iter()
            .map(|r| {
                let (key, cells) = self.place(&node, r);
                (r, key, cells)
            })
            .collect();
        let min_key = scored.iter().map(|(_, k, _)| *k).min()?;

        let mut explored: Vec<usize> = Vec::new();
        for (r, key, cells) in scored {
            if key != min_key {
                continue;
            }
            // Re-checked per child: a sibling may have improved the best leaf.
            if self.cmp_to_best(key) == Ordering::Greater {
                return None;
            }
            if !explored.is_empty() {
                let roots = self.orbit_roots(&node.placed);
                if explored.iter().any(|&e| roots[e] == roots[r]) {
                    continue;
                }
            }
            explored.push(r);
            let mut placed = node.placed.clone();
            placed.push(r);
            self.path_keys.push(key);
            let jump = self.descend(Node { placed, cells });
            self.path_keys.pop();
            if let Some(target) = jump {
                if target < level {
                    return jump;
                }
            }
        }
        None
    }

    fn leaf(&mut self, node: &Node) -> Option<usize> {
        let rows = node.placed.clone();
        let cols: Vec<usize> = match self.mode {
            CanonMode::Conjugation => rows.clone(),
            CanonMode::Independent => node
                .cells
                .iter()
                .flat_map(|c| {
                    let mut c = c.clone();
                    c.sort_unstable();
                    c
                })
                .collect(),
        };
        let keys = self.path_keys.clone();
        match &self.best {
            None => self.best = Some(Leaf { keys, rows, cols }),
            Some(best) => match keys.cmp(&best.keys) {
                Ordering::Less => self.best = Some(Leaf { keys, rows, cols }),
                Ordering::Greater => {}
                Ordering::Equal => {
                    let mut rmap = vec![0; self.nrows];
                    for (p, &b) in best.rows.iter().enumerate() {
                        rmap[b] = rows[p];
                    }
                    let mut cmap = vec![0; self.ncols];
                    for (p, &b) in best.cols.iter().enumerate() {
                        cmap[b] = cols[p];
                    }
                    // The automorphism fixes the common prefix, so the subtree
                    // below the divergence point is an image of a searched one.
                    let diverge = best.rows.iter().zip(&rows).position(|(a, b)| a != b);
                    self.autos.push((rmap, cmap));
                    return diverge;
                }
            },
        }
        None
    }
}
