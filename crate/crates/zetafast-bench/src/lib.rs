//! Shared fixtures for the evaluator benchmarks: the height and accuracy
//! grids every bench target sweeps. The interesting numbers live in
//! `benches/evaluator.rs`; run them with `cargo bench -p zetafast-bench`.

/// Heights τ covering four decades of the ~√τ scaling regime.
pub const HEIGHTS: [f64; 4] = [1.0e2, 1.0e4, 1.0e6, 1.0e8];

/// Accuracy targets from casual to near the hardware floor.
pub const ACCURACIES: [f64; 4] = [1.0e-3, 1.0e-6, 1.0e-9, 1.0e-12];
