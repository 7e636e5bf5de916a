//! Complex log Γ, digamma ψ, and trigamma ψ′ at generic working precision.
//!
//! All three use the same scheme: shift the argument up by the recurrence
//! until it is comfortably inside the Stirling-series domain, evaluate the
//! asymptotic series with Bernoulli coefficients, then undo the shift. For
//! Re z < ½, log Γ first reflects through sin — implemented with exponentials
//! so the imaginary part stays continuous in each half plane rather than
//! wrapping at ±π (the zero-scanner's phase function depends on that).

use super::bernoulli::b2k;
use super::complex::Cx;
use super::real::Real;

/// Shift/series depth tuned per precision: (min |z| before Stirling, terms).
fn stirling_config<R: Real>() -> (f64, usize) {
    if R::DIGITS > 20 {
        (15.0, 26)
    } else {
        (12.0, 12)
    }
}

/// ln sin(πz), continuous in Im z on each half plane (no 2π jumps), using
/// sin πz = (i/2)·e^{−iπz}·(1 − e^{2πiz}) for Im z > 0 and its conjugate.
fn ln_sin_pi<R: Real>(z: Cx<R>) -> Cx<R> {
    let pi = R::pi();
    if z.im > R::zero() {
        let e = (Cx::i().scale(pi + pi) * z).exp();
        let half_i_pi = Cx::new(R::zero(), pi * R::from_f64(0.5));
        half_i_pi - Cx::from_re(R::ln_2()) - Cx::i().scale(pi) * z + (Cx::one() - e).ln()
    } else if z.im < R::zero() {
        ln_sin_pi(z.conj()).conj()
    } else {
        let s = (pi * z.re).sin();
        if s >= R::zero() {
            Cx::from_re(s.ln())
        } else {
            Cx::new((-s).ln(), pi)
        }
    }
}

/// Stirling series for log Γ(w), valid once |w| is past the configured
/// threshold with Re w ≥ ½.
fn stirling_log_gamma<R: Real>(w: Cx<R>, terms: usize) -> Cx<R> {
    let ln_w = w.ln();
    let half = R::from_f64(0.5);
    // (w − ½)·ln w − w + ½·ln 2π
    let ln_two_pi = R::ln_2() + R::pi().ln();
    let mut out = (w - Cx::from_re(half)) * ln_w - w + Cx::from_re(ln_two_pi * half);
    let inv = Cx::one() / w;
    let inv2 = inv * inv;
    let mut p = inv; // w^{−(2k−1)}
    for k in 1..=terms {
        let c = b2k::<R>(k) / R::from_u64((2 * k * (2 * k - 1)) as u64);
        out += p.scale(c);
        p *= inv2;
    }
    out
}

/// Principal branch of log Γ(z): analytic continuation along the shift path,
/// i.e. the standard branch with Im log Γ continuous off the negative axis.
pub fn log_gamma<R: Real>(z: Cx<R>) -> Cx<R> {
    let half = R::from_f64(0.5);
    if z.re < half {
        // Reflection: log Γ(z) = ln π − ln sin πz − log Γ(1 − z)
        let ln_pi = Cx::from_re(R::pi().ln());
        return ln_pi - ln_sin_pi(z) - log_gamma(Cx::one() - z);
    }
    let (min_abs, terms) = stirling_config::<R>();
    let min_abs = R::from_f64(min_abs);
    let mut w = z;
    let mut shift = Cx::zero();
    while w.abs() < min_abs {
        shift += w.ln();
        w += Cx::one();
    }
    stirling_log_gamma(w, terms) - shift
}

/// Digamma ψ(z) = d/dz log Γ(z), by upward recurrence ψ(z) = ψ(z+1) − 1/z
/// into the Stirling domain.
pub fn digamma<R: Real>(z: Cx<R>) -> Cx<R> {
    let (min_abs, terms) = stirling_config::<R>();
    let min_abs = R::from_f64(min_abs);
    let half = R::from_f64(0.5);
    let mut w = z;
    let mut shift = Cx::zero();
    while w.abs() < min_abs || w.re < half {
        shift += Cx::one() / w;
        w += Cx::one();
    }
    // ψ(w) = ln w − 1/(2w) − Σ B₂ₖ/(2k·w^{2k})
    let inv = Cx::one() / w;
    let inv2 = inv * inv;
    let mut out = w.ln() - inv.scale(half);
    let mut p = inv2;
    for k in 1..=terms {
        out -= p.scale(b2k::<R>(k) / R::from_u64(2 * k as u64));
        p *= inv2;
    }
    out - shift
}

/// Trigamma ψ′(z), by ψ′(z) = ψ′(z+1) + 1/z² into the Stirling domain.
pub fn trigamma<R: Real>(z: Cx<R>) -> Cx<R> {
    let (min_abs, terms) = stirling_config::<R>();
    let min_abs = R::from_f64(min_abs);
    let half = R::from_f64(0.5);
    let mut w = z;
    let mut shift = Cx::zero();
    while w.abs() < min_abs || w.re < half {
        let inv = Cx::one() / w;
        shift += inv * inv;
        w += Cx::one();
    }
    // ψ′(w) = 1/w + 1/(2w²) + Σ B₂ₖ/w^{2k+1}
    let inv = Cx::one() / w;
    let inv2 = inv * inv;
    let mut out = inv + inv2.scale(half);
    let mut p = inv2 * inv;
    for k in 1..=terms {
        out += p.scale(b2k::<R>(k));
        p *= inv2;
    }
    out + shift
}
