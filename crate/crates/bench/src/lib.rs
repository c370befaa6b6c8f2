//! Benchmarks for the algorithms in `monclose-core`; see `benches/`.
