//! Criterion benchmarks for `abs-extremal`; see `benches/`.
