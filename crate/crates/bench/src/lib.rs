//! Criterion benchmarks for seaweed-core; see `benches/`.
