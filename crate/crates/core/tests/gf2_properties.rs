mod common;

use binframe_core::{BinMatrix, BinVector};
use common::{dense, mul, rank as dense_rank, transpose};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(any::<bool>(), r * c)
            .prop_map(move |bits| BinMatrix::from_fn(r, c, |i, j| bits[i * c + j]).unwrap())
    })
}

fn vector(len: usize) -> impl Strategy<Value = BinVector> {
    prop::collection::vec(any::<bool>(), len).prop_map(|b| BinVector::from_bools(b).unwrap())
}

fn conformable_pair() -> impl Strategy<Value = (BinMatrix, BinMatrix)> {
    (1..=9usize, 1..=80usize, 1..=9usize).prop_flat_map(|(n, m, p)| {
        let a = prop::collection::vec(any::<bool>(), n * m)
            .prop_map(move |b| BinMatrix::from_fn(n, m, |i, j| b[i * m + j]).unwrap());
        let b = prop::collection::vec(any::<bool>(), m * p)
            .prop_map(move |b| BinMatrix::from_fn(m, p, |i, j| b[i * p + j]).unwrap());
        (a, b)
    })
}

proptest! {
    #[test]
    fn product_matches_dense_oracle((a, b) in conformable_pair()) {
        prop_assert_eq!(dense(&a.mul(&b).unwrap()), mul(&dense(&a), &dense(&b)));
    }

    #[test]
    fn transpose_of_product((a, b) in conformable_pair()) {
        let lhs = a.mul(&b).unwrap().transpose();
        let rhs = b.transpose().mul(&a.transpose()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_matches_dense(a in matrix(12, 140)) {
        prop_assert_eq!(dense(&a.transpose()), transpose(&dense(&a)));
    }

    #[test]
    fn rank_is_transpose_invariant(a in matrix(16, 70)) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
        prop_assert_eq!(a.rank(), dense_rank(&dense(&a)));
    }

    #[test]
    fn parity_is_additive((u, v) in (1..200usize).prop_flat_map(|n| (vector(n), vector(n)))) {
        prop_assert_eq!((&u ^ &v).parity(), u.parity() ^ v.parity());
    }

    #[test]
    fn dot_is_parity_of_meet((u, v) in (1..200usize).prop_flat_map(|n| (vector(n), vector(n)))) {
        let meet = u.support().filter(|&i| v.get(i)).count();
        prop_assert_eq!(u.dot(&v).unwrap(), meet % 2 == 1);
    }

    #[test]
    fn integer_encoding_round_trips((len, x) in (1..=64usize).prop_flat_map(|n| {
        let max = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        (Just(n), 0..=max)
    })) {
        let v = BinVector::from_integer(len, x).unwrap();
        prop_assert_eq!(v.to_integer(), Some(x));
        for i in 0..len {
            prop_assert_eq!(v.get(i), (x >> i) & 1 == 1);
        }
    }

    #[test]
    fn text_round_trips(v in (1..150usize).prop_flat_map(vector)) {
        prop_assert_eq!(v.to_string().parse::<BinVector>().unwrap(), v);
    }

    #[test]
    fn solve_agrees_with_brute_force(
        (a, b) in (1..=8usize, 1..=12usize).prop_flat_map(|(r, c)| {
            (
                prop::collection::vec(any::<bool>(), r * c)
                    .prop_map(move |bits| BinMatrix::from_fn(r, c, |i, j| bits[i * c + j]).unwrap()),
                vector(r),
            )
        })
    ) {
        let n = a.cols();
        let brute: Vec<BinVector> = (0..1u64 << n)
            .map(|x| BinVector::from_integer(n, x).unwrap())
            .filter(|x| a.mul_vec(x).unwrap() == b)
            .collect();
        let set = a.solve(&b).unwrap();
        let mut found: Vec<BinVector> = set.iter().collect();
        prop_assert_eq!(set.count(), brute.len() as u128);
        if set.is_consistent() {
            prop_assert_eq!(found.len(), 1usize << (n - a.rank()));
        }
        for x in &found {
            prop_assert_eq!(&a.mul_vec(x).unwrap(), &b);
        }
        found.sort();
        found.dedup();
        prop_assert_eq!(found.len(), brute.len());
    }

    #[test]
    fn gray_order_steps_by_one_basis_vector(a in matrix(6, 10)) {
        let b = BinVector::zeros(a.rows()).unwrap();
        let set = a.solve(&b).unwrap();
        let sols: Vec<BinVector> = set.iter().collect();
        for w in sols.windows(2) {
            let diff = &w[0] ^ &w[1];
            prop_assert!(set.null_basis().contains(&diff));
        }
    }
}

#[test]
fn wide_rank_examples() {
    // Rows e_i + e_{i+1} over 130 columns: rank equals the number of rows.
    let m = BinMatrix::from_fn(129, 130, |i, j| j == i || j == i + 1).unwrap();
    assert_eq!(m.rank(), 129);
    assert_eq!(m.transpose().rank(), 129);
}
