//! Criterion benchmarks for `learnspace`; see `benches/`.
