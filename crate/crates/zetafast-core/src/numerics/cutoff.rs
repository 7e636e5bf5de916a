//! Smooth cutoff weight for the truncated Dirichlet series: the Poisson
//! left tail Q(v, x) = e^{−x} Σ_{w<v} x^w / w!. It equals 1 − O(δ) while
//! x ≲ v, then dies off super-exponentially, which is what lets the main
//! sum stop after ~λ·v·N terms instead of ~τ.

use super::real::Real;

/// Q(v, x) = e^{−x} Σ_{w=0}^{v−1} x^w/w!, for v ≥ 1 and x ≥ 0.
pub fn cutoff_weight<R: Real>(v: u32, x: R) -> R {
    debug_assert!(v >= 1);
    let mut term = R::one();
    let mut sum = R::one();
    for w in 1..v {
        term = term * x / R::from_u64(w as u64);
        sum += term;
    }
    (-x).exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::dd::DdReal;

    #[test]
    fn matches_frozen_reference() {
        // v = 6, x = 1/N with N = 1.15532462970370367 (the τ = 0 geometry)
        let x = 1.0 / 1.15532462970370367;
        assert!((cutoff_weight(6, x) - 0.999720201487993871).abs() < 1e-15);
    }

    #[test]
    fn boundary_behaviour() {
        assert_eq!(cutoff_weight::<f64>(6, 0.0), 1.0);
        // far right tail: weight collapses
        assert!(cutoff_weight::<f64>(6, 60.0) < 1e-15);
        // monotone decreasing in x
        let mut prev = 1.0;
        for i in 1..40 {
            let q = cutoff_weight::<f64>(8, i as f64 * 0.5);
            assert!(q < prev);
            prev = q;
        }
    }

    #[test]
    fn double_double_agrees_with_f64_inside_its_precision() {
        let q_dd = cutoff_weight::<DdReal>(6, DdReal::from(0.5)).to_f64();
        let q = cutoff_weight::<f64>(6, 0.5);
        assert!((q_dd - q).abs() < 1e-15);
    }
}
