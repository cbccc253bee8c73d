//! Criterion benchmarks for the exact kernels; see `benches/exact.rs`.
