//! Criterion benchmarks for the spectral engine live in `benches/`.
