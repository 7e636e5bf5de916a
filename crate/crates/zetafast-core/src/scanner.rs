//! Critical-line zero scanner.
//!
//! The Riemann–Siegel theta function θ(t) = Im log Γ(¼ + it/2) − (t/2)·ln π
//! rotates ζ(½ + it) onto the real axis: Z(t) = e^{iθ(t)}·ζ(½ + it) is real
//! for real t, and its sign changes are exactly the critical-line zeros.
//! The scanner walks a grid, brackets sign changes of Z, and bisects each
//! bracket down to a requested width; the imaginary residue of the rotated
//! value doubles as a consistency diagnostic for both the evaluator and the
//! θ branch tracking.

use crate::engine::{zeta_opts, EvalOptions};
use crate::error::{Error, Result};
use crate::numerics::complex::Cx64;
use crate::numerics::gamma::log_gamma;

/// Default accuracy for ζ evaluations during scanning.
pub const SCAN_DELTA: f64 = 1.0e-8;
/// Default bisection width target for refined zeros.
pub const REFINE_TOLERANCE: f64 = 1.0e-8;
/// Largest grid spacing that cannot straddle two zeros at the heights this
/// scanner is built for (mean zero gap at t = 10⁴ is still ≈ 0.85).
pub const MAX_GRID_STEP: f64 = 0.25;

/// θ(t): the phase that makes e^{iθ(t)}·ζ(½ + it) real, continuous in t
/// (no 2π ambiguity: both log-gamma branches it is assembled from are
/// themselves continuous on their half-planes).
pub fn rs_theta(t: f64) -> f64 {
    let lg = log_gamma(Cx64::new(0.25, 0.5 * t));
    lg.im - 0.5 * t * std::f64::consts::PI.ln()
}

/// Z(t) together with the imaginary residue of the rotation (which would
/// be exactly zero in exact arithmetic).
pub fn hardy_z_with_residue(t: f64, delta: f64) -> Result<(f64, f64)> {
    let r = zeta_opts(0.5, t, delta, &EvalOptions::default())?;
    let theta = rs_theta(t);
    let rot = Cx64::new(theta.cos(), theta.sin()) * r.value;
    Ok((rot.re, rot.im))
}

/// Hardy's Z function: Z(t) = e^{iθ(t)}·ζ(½ + it), real-valued.
pub fn hardy_z(t: f64, delta: f64) -> Result<f64> {
    hardy_z_with_residue(t, delta).map(|(z, _)| z)
}

/// A sign change of Z between two grid points (z_lo·z_hi < 0 or an exact
/// grid-point zero with z_lo = 0).
#[derive(Clone, Copy, Debug)]
pub struct ZeroBracket {
    pub t_lo: f64,
    pub t_hi: f64,
    pub z_lo: f64,
    pub z_hi: f64,
}

/// Walk [t0, t1] with the given grid step (clamped to ≤ 0.25) and collect
/// every sign change of Z.
pub fn scan_brackets(t0: f64, t1: f64, step: f64, delta: f64) -> Result<Vec<ZeroBracket>> {
    if !(t0.is_finite() && t1.is_finite()) || t1 <= t0 {
        return Err(Error::Domain(format!("invalid scan range [{t0}, {t1}]")));
    }
    if step.is_nan() || step <= 0.0 {
        return Err(Error::Domain(format!("invalid scan step {step}")));
    }
    let step = step.min(MAX_GRID_STEP);
    let mut brackets = Vec::new();
    let mut t_prev = t0;
    let mut z_prev = hardy_z(t_prev, delta)?;
    let steps = ((t1 - t0) / step).ceil() as u64;
    for k in 1..=steps {
        let t = (t0 + k as f64 * step).min(t1);
        let z = hardy_z(t, delta)?;
        if z_prev == 0.0 {
            brackets.push(ZeroBracket { t_lo: t_prev, t_hi: t_prev, z_lo: 0.0, z_hi: 0.0 });
        } else if z_prev * z < 0.0 {
            brackets.push(ZeroBracket { t_lo: t_prev, t_hi: t, z_lo: z_prev, z_hi: z });
        }
        t_prev = t;
        z_prev = z;
    }
    Ok(brackets)
}

/// Bisect a bracket until it is narrower than `tol`; returns the midpoint.
pub fn refine_zero(bracket: &ZeroBracket, delta: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = (bracket.t_lo, bracket.t_hi);
    if lo == hi {
        return Ok(lo);
    }
    let (mut z_lo, z_hi) = (bracket.z_lo, bracket.z_hi);
    if z_lo * z_hi >= 0.0 {
        return Err(Error::Domain(format!(
            "bracket [{lo}, {hi}] does not straddle a sign change (Z = {z_lo}, {z_hi})"
        )));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let z_mid = hardy_z(mid, delta)?;
        if z_mid == 0.0 {
            return Ok(mid);
        }
        if z_lo * z_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            z_lo = z_mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// All critical-line zeros in [t0, t1], refined to the default tolerance,
/// in strictly increasing order.
pub fn find_zeros(t0: f64, t1: f64, delta: f64) -> Result<Vec<f64>> {
    let brackets = scan_brackets(t0, t1, MAX_GRID_STEP, delta)?;
    let mut zeros = Vec::with_capacity(brackets.len());
    for b in &brackets {
        zeros.push(refine_zero(b, delta, REFINE_TOLERANCE)?);
    }
    Ok(zeros)
}
