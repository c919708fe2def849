//! Criterion benchmarks for `germ-core`; see `benches/germ.rs`.
