mod common;

use std::collections::{HashMap, HashSet};

use binframe_core::enumerate::{
    column_integers, enum_cyclic_gram, enum_cyclic_gram_jobs, enum_nonrepeating, enum_orthogonal,
    is_shift_invariant, shift_matrix,
};
use binframe_core::equiv::{canonical_form, CanonMode};
use binframe_core::frame::{gram, is_orthogonal, is_parseval};
use binframe_core::gramfactor::{factor_gram, GramCandidate};
use binframe_core::naimark::has_naimark_complement;
use binframe_core::{BinMatrix, BinVector};
use common::{
    all_matrices, brute_canonical_independent, dense, gram as dense_gram, identity, mul, packed,
    permutations, permute, transpose, Dense,
};

/// Circulant with `c[i][j] = r[(j - i) mod k]`, built densely.
fn dense_circulant(k: usize, r: u64) -> Dense {
    (0..k)
        .map(|i| (0..k).map(|j| ((r >> ((j + k - i) % k)) & 1) as u8).collect())
        .collect()
}

#[test]
fn cyclic_grams_match_brute_force_over_all_first_rows() {
    for k in 1..=12 {
        let brute: Vec<u64> = (0..1u64 << k)
            .filter(|&r| {
                let c = dense_circulant(k, r);
                c == transpose(&c)
                    && mul(&c, &c) == c
                    && (0..k).all(|j| c.iter().map(|row| row[j]).sum::<u8>() % 2 == 1)
            })
            .collect();
        let found: Vec<u64> = enum_cyclic_gram(k)
            .unwrap()
            .iter()
            .map(|g| g.first_row.to_integer().unwrap())
            .collect();
        assert_eq!(found, brute, "k={k}");
    }
}

#[test]
fn cyclic_gram_invariants_up_to_twenty() {
    for k in 3..=20 {
        let s = shift_matrix(k).unwrap();
        let grams = enum_cyclic_gram(k).unwrap();
        assert_eq!(grams, enum_cyclic_gram_jobs(k, 3).unwrap());
        for g in grams {
            let c = g.matrix();
            assert_eq!(s.mul(&c).unwrap().mul(&s.transpose()).unwrap(), c);
            assert!(c.is_symmetric() && c.is_idempotent());
            assert_eq!(c.column_parities(), BinVector::ones(k).unwrap());
            assert_eq!(c.rank(), g.rank);
            // Adding the identity turns every column even.
            assert!(c.add_identity().unwrap().column_parities().is_zero());

            let theta = factor_gram(&GramCandidate::new(c.clone()).unwrap())
                .unwrap()
                .into_theta();
            assert!(!has_naimark_complement(&theta).unwrap());
            assert!(is_shift_invariant(&theta).unwrap());
        }
    }
}

#[test]
fn nonrepeating_pairs_have_distinct_frame_vectors() {
    for k in 3..=20 {
        let pairs = enum_nonrepeating(k).unwrap();
        let expected: Vec<BinVector> = enum_cyclic_gram(k)
            .unwrap()
            .into_iter()
            .filter(|g| g.rank < k)
            .filter(|g| {
                let rows: HashSet<BinVector> = g.matrix().row_vectors().into_iter().collect();
                rows.len() == k
            })
            .map(|g| g.first_row)
            .collect();
        let got: Vec<BinVector> = pairs.iter().map(|p| p.gram.first_row.clone()).collect();
        assert_eq!(got, expected);
        for p in pairs {
            let theta = &p.theta;
            assert_eq!(theta.shape(), (k, p.gram.rank));
            assert_eq!(gram(theta).into_matrix(), p.gram.matrix());
            assert!(is_parseval(theta));
            let rows: HashSet<BinVector> = theta.row_vectors().into_iter().collect();
            assert_eq!(rows.len(), k);
            assert!(is_shift_invariant(theta).unwrap());
        }
    }
}

#[test]
fn repeated_gram_rows_mean_repeated_vectors() {
    // For spanning frames, equal Gram rows and equal frame vectors coincide.
    for k in 3..=20 {
        for g in enum_cyclic_gram(k).unwrap() {
            let c = g.matrix();
            let theta = factor_gram(&GramCandidate::new(c.clone()).unwrap())
                .unwrap()
                .into_theta();
            for i in 0..k {
                for j in 0..i {
                    assert_eq!(c.row(i) == c.row(j), theta.row(i) == theta.row(j));
                }
            }
        }
    }
}

#[test]
fn orthogonal_catalog_complete_for_small_k() {
    for k in 1..=4 {
        let classes: HashSet<Dense> = all_matrices(k, k)
            .filter(|d| dense_gram(d) == identity(k))
            .map(|d| brute_canonical_independent(&d))
            .collect();
        let cat = enum_orthogonal(k).unwrap();
        assert_eq!(cat.len(), classes.len(), "k={k}");
        let emitted: HashSet<Dense> = cat
            .classes
            .iter()
            .map(|m| brute_canonical_independent(&dense(m)))
            .collect();
        assert_eq!(emitted, classes);
    }
}

/// Permutation-equivalence classes of orthogonal k x k matrices, found by
/// closing the set of all of them under adjacent row and column swaps.
fn orbit_classes(k: usize) -> Vec<Vec<Dense>> {
    let mut all: Vec<Dense> = Vec::new();
    for set in common::orthonormal_sets(k, k) {
        let base = dense(&BinMatrix::from_column_integers(k, &set).unwrap());
        for p in permutations(k) {
            all.push(permute(&base, &(0..k).collect::<Vec<_>>(), &p));
        }
    }
    let index: HashMap<Dense, usize> = all.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let id: Vec<usize> = (0..k).collect();
    for (i, m) in all.iter().enumerate() {
        for t in 0..k.saturating_sub(1) {
            let mut swap = id.clone();
            swap.swap(t, t + 1);
            for img in [permute(m, &swap, &id), permute(m, &id, &swap)] {
                let j = index[&img];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Dense>> = HashMap::new();
    for (i, m) in all.into_iter().enumerate() {
        groups.entry(find(&mut parent, i)).or_default().push(m);
    }
    groups.into_values().collect()
}

#[test]
fn orthogonal_catalog_matches_orbit_closure() {
    for k in 1..=6 {
        let classes = orbit_classes(k);
        let cat = enum_orthogonal(k).unwrap();
        assert_eq!(cat.len(), classes.len(), "k={k}");
        for rep in &cat.classes {
            assert!(is_orthogonal(rep).unwrap());
            let d = dense(rep);
            assert_eq!(classes.iter().filter(|c| c.contains(&d)).count(), 1);
        }
        // Representatives are pairwise inequivalent.
        let forms: HashSet<BinMatrix> = cat
            .classes
            .iter()
            .map(|m| canonical_form(m, CanonMode::Independent).unwrap().matrix)
            .collect();
        assert_eq!(forms.len(), cat.len());
    }
}

#[test]
fn orthogonal_representatives_have_ascending_columns() {
    for k in 1..=6 {
        for m in enum_orthogonal(k).unwrap().classes {
            let cols = column_integers(&m);
            assert!(cols.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(packed(&dense(&m)), m);
        }
    }
}
