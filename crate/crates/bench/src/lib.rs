//! Benchmarks for `prolate-core`; see `benches/core.rs`.
