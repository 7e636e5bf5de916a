//! Evaluation-geometry selection: given (σ, τ, δ), pick the cutoff order v,
//! the scale N, the correction-sum length M, and the main-sum length ⌈λvN⌉
//! so the combined truncation error of the three-part representation stays
//! below δ. The selection is backed by explicit error bounds on the strip
//! 0 ≤ σ ≤ 2 with δ ≤ 0.05; outside that box the same formulas are applied
//! heuristically (with a safety clamp on v) and the result is flagged as
//! not certified.

use crate::error::{Error, Result};

/// Main-sum length multiplier: the smooth cutoff weight is ≤ δ/8-negligible
/// beyond n = λ·v·N.
pub const LAMBDA: f64 = 3.151;

/// Largest accuracy the certificate covers; looser requests are silently
/// tightened to this, which only over-delivers.
pub const MAX_CERTIFIED_DELTA: f64 = 0.05;

/// Smallest supported accuracy: past ~24 digits even the extended backend's
/// headroom over its 31-digit epsilon is gone once sums cancel.
pub const MIN_DELTA: f64 = 1.0e-24;

/// Geometry of one evaluation: every sum length the engine needs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalParams {
    /// Cutoff order v (smoothing depth of the main sum, tail order of the
    /// correction sums).
    pub v: u32,
    /// Scale N of the cutoff weight Q(v, n/N).
    pub n_scale: f64,
    /// Correction-sum length M (number of m-terms per branch).
    pub m_terms: u64,
    /// Main-sum length ⌈λvN⌉.
    pub d_cutoff: u64,
    /// Effective accuracy target after clamping into the supported range.
    pub delta: f64,
    /// Whether (σ, δ) sit inside the provably-bounded box.
    pub certified: bool,
}

impl EvalParams {
    /// The a-priori charge for this geometry: main-sum terms plus (v+1)
    /// series terms for each of the M correction summands.
    pub fn charged_summands(&self) -> u64 {
        self.d_cutoff + (self.v as u64 + 1) * self.m_terms
    }
}

fn validate(sigma: f64, tau: f64, delta: f64) -> Result<f64> {
    if !sigma.is_finite() || !tau.is_finite() {
        return Err(Error::Domain(format!(
            "sigma and tau must be finite, got sigma = {sigma}, tau = {tau}"
        )));
    }
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::InvalidAccuracy {
            delta,
            reason: "accuracy target must be a positive number".into(),
        });
    }
    if delta < MIN_DELTA {
        return Err(Error::InvalidAccuracy {
            delta,
            reason: format!("accuracy target below the supported floor {MIN_DELTA:e}"),
        });
    }
    Ok(delta.min(MAX_CERTIFIED_DELTA))
}

/// The real x₀ ≥ ln(8/δ) solving x − max((1−σ)/2, 0)·ln(½ + x + τ) = ln(8/δ);
/// the cutoff order is its ceiling. Unique because the left side is strictly
/// increasing once x exceeds the bracket's lower edge.
pub fn cutoff_order_target(sigma: f64, tau: f64, delta: f64) -> f64 {
    let c = ((1.0 - sigma) / 2.0).max(0.0);
    let l = (8.0 / delta).ln();
    if c == 0.0 {
        return l;
    }
    let tau = tau.abs();
    let f = |x: f64| x - c * (0.5 + x + tau).ln() - l;
    // f(lo) ≤ 0 for lo = max(L, c+1), and f' > 0 to the right of it.
    let mut lo = l.max(c + 1.0);
    let mut hi = lo + c * (0.5 + lo + tau).ln() + 1.0;
    let mut guard = 0;
    while f(hi) < 0.0 {
        hi = 2.0 * hi + 10.0;
        guard += 1;
        assert!(guard < 200, "cutoff-order bracket failed to close");
    }
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Select the evaluation geometry for ζ(σ + iτ) to accuracy δ.
pub fn derive_params(sigma: f64, tau: f64, delta: f64) -> Result<EvalParams> {
    derive_params_for_modulus(sigma, tau, delta, 1)
}

/// Select the evaluation geometry for a Dirichlet L-function of modulus q.
///
/// The correction sums for modulus q converge in m at scale q·N rather than
/// N, so M is scaled accordingly; the main sum keeps the n/N cutoff. The
/// explicit error certificate only covers q = 1, so q > 1 is never marked
/// certified.
pub fn derive_params_for_modulus(sigma: f64, tau: f64, delta: f64, q: u64) -> Result<EvalParams> {
    let delta = validate(sigma, tau, delta)?;
    let tau = tau.abs();
    let x0 = cutoff_order_target(sigma, tau, delta);
    let mut v = x0.ceil() as u32;
    let certified = (0.0..=2.0).contains(&sigma) && q == 1;
    if sigma > 2.0 {
        // Keep the correction-series arguments 1 − s + w clear of the Γ
        // poles with margin; outside the certified strip anyway.
        v = v.max(sigma.ceil() as u32 + 3);
    }
    let n_scale = 1.11 * (1.0 + (0.5 + tau) / v as f64).sqrt();
    let m_terms = (q as f64 * n_scale).ceil() as u64;
    let d_cutoff = (LAMBDA * v as f64 * n_scale).ceil() as u64;
    Ok(EvalParams { v, n_scale, m_terms, d_cutoff, delta, certified })
}

/// Rebuild the geometry around an explicitly chosen cutoff order v
/// (derivative paths deepen v; sensitivity tests pin it). The scale, sum
/// lengths, and budget follow v exactly as in [`derive_params_for_modulus`],
/// but a hand-picked order is never marked certified.
pub fn params_with_cutoff_order(tau: f64, delta: f64, v: u32, q: u64) -> EvalParams {
    let tau = tau.abs();
    let v = v.max(1);
    let n_scale = 1.11 * (1.0 + (0.5 + tau) / v as f64).sqrt();
    let m_terms = (q as f64 * n_scale).ceil() as u64;
    let d_cutoff = (LAMBDA * v as f64 * n_scale).ceil() as u64;
    EvalParams { v, n_scale, m_terms, d_cutoff, delta, certified: false }
}

/// Whether τ is large enough that the √τ summand bound below is in force.
pub fn speed_precondition(tau: f64, delta: f64) -> bool {
    let delta = delta.clamp(MIN_DELTA, MAX_CERTIFIED_DELTA);
    tau.abs() > (5.0 / 3.0) * (1.5 + (8.0 / delta).ln())
}

/// The a-priori summand bound 2 + 8·√(1 + ln(8/δ) + max((1−σ)/2,0)·ln 2τ)·√τ,
/// valid when [`speed_precondition`] holds.
pub fn summand_bound(sigma: f64, tau: f64, delta: f64) -> f64 {
    let tau = tau.abs();
    let delta = delta.clamp(MIN_DELTA, MAX_CERTIFIED_DELTA);
    let c = ((1.0 - sigma) / 2.0).max(0.0);
    let edge = if c > 0.0 && tau > 0.0 { c * (2.0 * tau).ln() } else { 0.0 };
    2.0 + 8.0 * (1.0 + (8.0 / delta).ln() + edge).sqrt() * tau.sqrt()
}
