//! Criterion benchmarks for `paraprob`; see `benches/`.
