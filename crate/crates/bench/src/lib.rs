//! Criterion benchmarks for `binframe-core`; see `benches/`.
