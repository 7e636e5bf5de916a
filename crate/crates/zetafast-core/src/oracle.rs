//! Slow, independent reference evaluator: Euler–Maclaurin summation for the
//! Hurwitz zeta function ζ(s, a) (and ζ(s) = ζ(s, 1)), structurally
//! unrelated to the fast engine — different series, different tail, no
//! shared parameter selection — so agreement between the two is meaningful
//! evidence, not a tautology.
//!
//! Direct terms are summed to a cutoff K ≈ ¾·τ, then the integral,
//! half-term, and Bernoulli boundary corrections are added; successive
//! corrections shrink by ≈ (τ / 2πK)² ≈ 1/22 per order at that cutoff, so
//! the default extended configuration reaches ~28 significant digits for
//! τ up to about 10⁵ (past which the direct sum's O(τ) cost defeats the
//! purpose of a cross-check anyway).

use crate::error::{Error, Result};
use crate::numerics::bernoulli::{b2k, MAX_EVEN_INDEX};
use crate::numerics::complex::{rpow, Cx};
use crate::numerics::dd::DdReal;
use crate::numerics::kahan::ComplexSum;
use crate::numerics::real::Real;

/// Euler–Maclaurin truncation choices.
#[derive(Clone, Copy, Debug)]
pub struct EmConfig {
    /// Number of directly summed terms K.
    pub cutoff: u64,
    /// Number of Bernoulli boundary corrections J (≤ 30).
    pub tail_terms: usize,
}

impl EmConfig {
    /// Defaults for the double-double backend: ~28 digits up to |τ| ≈ 10⁵.
    pub fn extended_for_height(tau: f64) -> Self {
        EmConfig {
            cutoff: 60u64.max((0.75 * tau.abs()).ceil() as u64 + 20),
            tail_terms: 28,
        }
    }

    /// Defaults for the f64 backend: ~13 digits up to |τ| ≈ 10⁵.
    pub fn hardware_for_height(tau: f64) -> Self {
        EmConfig {
            cutoff: 30u64.max((0.5 * tau.abs()).ceil() as u64 + 10),
            tail_terms: 12,
        }
    }
}

/// Hurwitz zeta ζ(s, a) for 0 < a ≤ 1, s ≠ 1, by Euler–Maclaurin.
pub fn hurwitz_zeta_em<R: Real>(s: Cx<R>, a: R, cfg: &EmConfig) -> Result<Cx<R>> {
    if s.re == R::one() && s.im == R::zero() {
        return Err(Error::PoleAtOne(
            "reference evaluator: ζ(s, a) has its pole at s = 1".into(),
        ));
    }
    if !(a > R::zero() && a <= R::one()) {
        return Err(Error::Domain(format!(
            "reference evaluator needs 0 < a ≤ 1, got a = {}",
            a.to_f64()
        )));
    }
    assert!(cfg.cutoff >= 1, "cutoff must be positive");
    assert!(
        (1..=MAX_EVEN_INDEX / 2).contains(&cfg.tail_terms),
        "tail_terms must lie in 1..=30"
    );

    // Σ_{n=0}^{K−1} (n + a)^{−s}, compensated.
    let mut direct = ComplexSum::new();
    for n in 0..cfg.cutoff {
        direct.add(rpow(R::from_u64(n) + a, -s));
    }

    // Boundary x = K + a: integral tail + half term.
    let x = R::from_u64(cfg.cutoff) + a;
    let integral = rpow(x, Cx::one() - s) / (s - Cx::one());
    let half = rpow(x, -s).scale(R::from_f64(0.5));

    // Bernoulli corrections Σ_j B₂ⱼ/(2j)!·s(s+1)…(s+2j−2)·x^{−s−2j+1},
    // accumulated through the term-to-term ratio so no factor ever leaves
    // the representable range even at large |s|.
    let inv_x2 = (x * x).recip();
    let mut term = (s * rpow(x, -(s + Cx::one()))).scale(R::one() / R::from_u64(12));
    let mut tail = ComplexSum::new();
    for j in 1..=cfg.tail_terms {
        tail.add(term);
        if j < cfg.tail_terms {
            let jj = 2 * j as u64;
            let rising =
                (s.add_re(R::from_u64(jj - 1))) * (s.add_re(R::from_u64(jj)));
            let scale = b2k::<R>(j + 1) / b2k::<R>(j)
                / R::from_u64((jj + 1) * (jj + 2))
                * inv_x2;
            term = (term * rising).scale(scale);
        }
    }

    Ok(direct.value() + integral + half + tail.value())
}

/// ζ(s) by Euler–Maclaurin.
pub fn zeta_em<R: Real>(s: Cx<R>, cfg: &EmConfig) -> Result<Cx<R>> {
    hurwitz_zeta_em(s, R::one(), cfg)
}

/// The standard reference call: ζ(σ + iτ) at extended precision with the
/// default configuration for that height.
pub fn zeta_reference(sigma: f64, tau: f64) -> Result<Cx<DdReal>> {
    let s = Cx::new(DdReal::from(sigma), DdReal::from(tau));
    zeta_em(s, &EmConfig::extended_for_height(tau))
}

/// Reference value plus a self-consistency gap: the same evaluation redone
/// with twice the direct cutoff. The gap is an observed (not proven) bound
/// on the reference's own truncation error.
pub fn zeta_reference_validated(sigma: f64, tau: f64) -> Result<(Cx<DdReal>, f64)> {
    let s = Cx::new(DdReal::from(sigma), DdReal::from(tau));
    let base = EmConfig::extended_for_height(tau);
    let double = EmConfig { cutoff: base.cutoff * 2, tail_terms: base.tail_terms };
    let coarse = zeta_em(s, &base)?;
    let fine = zeta_em(s, &double)?;
    Ok((fine, (fine - coarse).abs().to_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Cdd = Cx<DdReal>;

    fn sdd(re: f64, im: f64) -> Cdd {
        Cx::new(DdReal::from(re), DdReal::from(im))
    }

    fn assert_close_dd(got: Cdd, re: f64, im: f64, tol: f64) {
        let (gr, gi) = got.to_f64_pair();
        assert!(
            (gr - re).abs() <= tol && (gi - im).abs() <= tol,
            "got ({gr:.18e}, {gi:.18e}), want ({re:.18e}, {im:.18e}) ± {tol:e}"
        );
    }

    #[test]
    fn real_axis_values_match_frozen_references() {
        let z2 = zeta_reference(2.0, 0.0).unwrap();
        assert_close_dd(z2, 1.64493406684822644, 0.0, 1e-16);
        let z3 = zeta_reference(3.0, 0.0).unwrap();
        assert_close_dd(z3, 1.20205690315959429, 0.0, 1e-16);
        let zm = zeta_reference(-0.5, 0.0).unwrap();
        assert_close_dd(zm, -0.207886224977354566, 0.0, 1e-16);
        let zh = zeta_reference(0.5, 0.0).unwrap();
        assert_close_dd(zh, -1.46035450880958681, 0.0, 1e-16);
        let z15 = zeta_reference(1.5, 0.0).unwrap();
        assert_close_dd(z15, 2.61237534868548834, 0.0, 1e-16);
    }

    #[test]
    fn critical_line_values_match_frozen_references() {
        let a = zeta_reference(0.5, 50.0).unwrap();
        assert_close_dd(a, -0.0817121083209799750, 0.330792194038661296, 1e-15);
        let b = zeta_reference(0.5, 1000.0).unwrap();
        assert_close_dd(b, 0.356334367194396055, 0.931997831232993665, 1e-14);
        let c = zeta_reference(0.7, 30.0).unwrap();
        assert_close_dd(c, 0.145666736937242775, -0.547035630723601534, 1e-15);
    }

    #[test]
    fn high_point_matches_and_self_validates() {
        let (v, gap) = zeta_reference_validated(0.5, 5000.0).unwrap();
        assert_close_dd(v, 0.406842713635432559, -0.693764159198085102, 1e-13);
        assert!(gap < 1e-20, "self-consistency gap {gap:e}");
    }

    #[test]
    fn hurwitz_values_match_frozen_references() {
        // ζ(2, 1/2) = π²/2
        let h = hurwitz_zeta_em(
            sdd(2.0, 0.0),
            DdReal::from(0.5),
            &EmConfig::extended_for_height(0.0),
        )
        .unwrap();
        assert_close_dd(h, 4.93480220054467931, 0.0, 1e-16);
        let third = DdReal::from(1.0) / DdReal::from(3.0);
        let h2 = hurwitz_zeta_em(sdd(0.8, 14.0), third, &EmConfig::extended_for_height(14.0))
            .unwrap();
        assert_close_dd(h2, -2.56792303151042279, 1.89890026048730330, 1e-15);
        let sevenths = DdReal::from(3.0) / DdReal::from(7.0);
        let h3 = hurwitz_zeta_em(
            sdd(1.3, -2.5),
            sevenths,
            &EmConfig::extended_for_height(2.5),
        )
        .unwrap();
        assert_close_dd(h3, -1.51701056170454795, -2.07916685017992579, 1e-15);
    }

    #[test]
    fn hardware_configuration_is_good_to_thirteen_digits() {
        let s = Cx::<f64>::new(0.5, 50.0);
        let z = zeta_em(s, &EmConfig::hardware_for_height(50.0)).unwrap();
        assert!((z.re - -0.0817121083209799750).abs() < 1e-13);
        assert!((z.im - 0.330792194038661296).abs() < 1e-13);
        let r = zeta_em(Cx::<f64>::new(2.0, 0.0), &EmConfig::hardware_for_height(0.0)).unwrap();
        assert!((r.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_pole_and_bad_hurwitz_parameter() {
        assert!(matches!(
            zeta_reference(1.0, 0.0),
            Err(Error::PoleAtOne(_))
        ));
        let cfg = EmConfig::extended_for_height(0.0);
        assert!(matches!(
            hurwitz_zeta_em(sdd(2.0, 0.0), DdReal::from(0.0), &cfg),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta_em(sdd(2.0, 0.0), DdReal::from(1.5), &cfg),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn near_pole_is_finite_and_consistent() {
        // ζ(1 + ε) ≈ 1/ε + γ: check the Laurent leading behaviour
        let eps = 1e-6;
        let z = zeta_reference(1.0 + eps, 0.0).unwrap();
        let expect = 1.0 / eps + 0.577215664901532861;
        assert!((z.re.to_f64() - expect).abs() / expect < 1e-9);
    }
}
