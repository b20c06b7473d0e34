//! Benchmark-only crate; see `benches/qe_benches.rs`.
