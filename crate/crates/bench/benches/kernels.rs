use binframe_core::{BinMatrix, BinVector};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::hint::black_box;

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> BinMatrix {
    BinMatrix::from_fn(rows, cols, |_, _| rng.gen()).unwrap()
}

fn kernels(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(7);
    let mut group = c.benchmark_group("gf2");
    for n in [16usize, 64, 256] {
        let a = random_matrix(&mut rng, n, n);
        let b = random_matrix(&mut rng, n, n);
        let rhs = BinVector::from_bools((0..n).map(|_| rng.gen::<bool>())).unwrap();
        group.bench_with_input(BenchmarkId::new("mul", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).mul(black_box(&b)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("rank", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).rank())
        });
        group.bench_with_input(BenchmarkId::new("solve", n), &n, |bench, _| {
            bench.iter(|| black_box(&a).solve(black_box(&rhs)).ok())
        });
    }
    group.finish();
}

criterion_group!(benches, kernels);
criterion_main!(benches);
