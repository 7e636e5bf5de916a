//! Error type shared by every evaluation entry point.

use thiserror::Error;

/// Everything that can go wrong during an evaluation request.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// s = 1 is the pole of ζ; evaluations require |s − 1| ≥ 1e-6.
    #[error("s = {0} is too close to the pole at s = 1 (need |s - 1| >= 1e-6)")]
    PoleAtOne(String),

    /// Accuracy target outside the supported range for the requested mode.
    #[error("invalid accuracy target delta = {delta}: {reason}")]
    InvalidAccuracy { delta: f64, reason: String },

    /// Input outside the certified box while in certified mode.
    #[error("certified mode requires 0 <= Re s <= 2 (got sigma = {sigma}); use heuristic mode")]
    OutsideCertifiedStrip { sigma: f64 },

    /// A parameter or argument violated a documented domain restriction.
    #[error("domain error: {0}")]
    Domain(String),

    /// Modulus outside 2 ..= 10_000.
    #[error("modulus q = {0} outside the supported range 2 ..= 10000")]
    UnsupportedModulus(u64),

    /// L-series evaluation requires a primitive non-principal character.
    #[error("character {index} mod {q} is {kind}; L-evaluation needs a primitive non-principal character")]
    CharacterClass { q: u32, index: u32, kind: &'static str },

    /// An iterative scheme failed to meet its own convergence test.
    #[error("non-convergence: {0}")]
    NonConvergence(String),

    /// Even the extended backend cannot certify the requested accuracy.
    #[error("precision exhausted: cancellation ratio {ratio:.3e} defeats delta = {delta:.3e} on every available backend")]
    PrecisionExhausted { ratio: f64, delta: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
