//! Criterion benchmarks for oqkit live in `benches/`; run `cargo bench -p oqkit-bench`.
