//! Benchmark-only crate; the measured kernels live in leechlab-core.
//! See benches/kernels.rs.
