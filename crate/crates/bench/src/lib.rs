//! Benchmark-only package; see `benches/calculus.rs`.
