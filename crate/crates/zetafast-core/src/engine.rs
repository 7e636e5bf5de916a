//! The fast evaluator. ζ(s) is assembled from three pieces:
//!
//! * the main sum D = Σ n^{−s}·Q(v, n/N), smoothly cut after ⌈λvN⌉ terms;
//! * correction branches E_μ, one per sign μ = ±1, each a short sum over
//!   m ≤ M of Γ(1−s)·m^{s−1} minus the first v terms of the binomial
//!   expansion of m^{s−1} about m + iμ/(2πN), carrying the functional-
//!   equation prefactor (2π)^{s−1}e^{iμπ(1−s)/2};
//! * a closed-form pole correction Γ(1−s+v)·N^{1−s}/((1−s)Γ(v)).
//!
//! Every correction term is produced by a single complex exponential of an
//! exactly assembled logarithm, so the huge intermediate factors (Γ growth
//! against e^{±πτ/2}) cancel inside one exponent and the code never forms
//! an overflowing product. Derivative orders 1–2 ride along through the
//! logarithmic derivative of each term (ψ/ψ′ evaluated once per branch and
//! advanced by recurrence), and every sum tracks Σ|term| and max|term| so
//! the driver can bound roundoff, escalate from hardware to double-double
//! precision when cancellation would void the requested accuracy, and
//! report an honest cancellation diagnostic.

use crate::error::{Error, Result};
use crate::numerics::complex::{rpow, Cx, Cx64};
use crate::numerics::cutoff::cutoff_weight;
use crate::numerics::dd::DdReal;
use crate::numerics::gamma::{digamma, log_gamma, trigamma};
use crate::numerics::kahan::ComplexSum;
use crate::numerics::real::Real;
use crate::params::{derive_params, params_with_cutoff_order, EvalParams};
use crate::precision::{BackendPolicy, WorkingPrecision};

/// Multiplies ε·Σ|term| into a roundoff estimate (covers compensated-sum
/// residue, per-term rounding, and assembly).
const ROUNDOFF_FACTOR: f64 = 8.0;
/// Fraction of the requested accuracy reserved for roundoff; the rest goes
/// to the truncation budget that sizes the sums.
const ROUNDOFF_SHARE: f64 = 0.1;
/// Fraction of the requested accuracy handed to the geometry as its
/// truncation target (complement of the roundoff share).
const TRUNCATION_SHARE: f64 = 0.9;
/// Below this accuracy the hardware pass cannot succeed, so start extended.
const HARDWARE_FLOOR: f64 = 1.0e-13;
/// Extra cutoff depth for derivative evaluations (tail bounds lose a factor
/// ~(v+1)·ln-scale when differentiated; e⁶ plus the δ/100 internal target
/// buries it).
const DERIVATIVE_EXTRA_ORDER: u32 = 6;
/// Internal accuracy target for derivative evaluations, as a fraction of δ.
const DERIVATIVE_SHARE: f64 = 0.01;

/// One evaluated value with its accompanying evidence.
#[derive(Clone, Copy, Debug)]
pub struct EvalResult {
    /// The computed value (of ζ, a derivative, or an L-function).
    pub value: Cx64,
    /// Truncation budget plus the measured roundoff estimate.
    pub error_bound: f64,
    /// True iff the geometry and the evaluation mode are inside the
    /// provably-bounded box (never true for derivatives or L-functions).
    pub certified: bool,
    /// Terms actually summed (main sum + correction branches).
    pub summands_used: u64,
    /// max|term| / max(|value|, δ): how much cancellation the assembly
    /// survived; large values mean the result leans on the compensation.
    pub max_cancellation_ratio: f64,
    /// Backend that produced the accepted result.
    pub precision: WorkingPrecision,
}

/// Evaluation options beyond (s, δ).
#[derive(Clone, Copy, Debug, Default)]
pub struct EvalOptions {
    /// Backend selection; `Auto` escalates on a failed roundoff check.
    pub policy: BackendPolicy,
    /// Refuse (with an error) inputs whose geometry cannot be certified,
    /// instead of computing heuristically.
    pub require_certified: bool,
}

/// Which correction branches an assembly includes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum BranchMode {
    /// τ = 0: both branches are below the budget by construction.
    None,
    /// Certified value path: μ = +1 only, μ = −1 is covered by the budget.
    PlusOnly,
    /// Derivative path: both, each skippable when provably negligible.
    BothAdaptive,
}

/// Running tallies for one derivative order.
#[derive(Clone, Copy)]
pub(crate) struct Tally<R: Real> {
    sum: ComplexSum<R>,
    abs_sum: R,
    abs_max: R,
}

impl<R: Real> Tally<R> {
    fn new() -> Self {
        Tally { sum: ComplexSum::new(), abs_sum: R::zero(), abs_max: R::zero() }
    }

    #[inline]
    fn add(&mut self, t: Cx<R>) {
        let a = t.abs();
        self.abs_sum += a;
        if a > self.abs_max {
            self.abs_max = a;
        }
        self.sum.add(t);
    }
}

/// One block's contribution: per-order values plus evidence totals.
pub(crate) struct PartialSums<R: Real> {
    pub vals: [Cx<R>; 3],
    pub abs_sum: [R; 3],
    pub abs_max: [R; 3],
    pub summands: u64,
}

impl<R: Real> PartialSums<R> {
    fn from_tallies(t: [Tally<R>; 3], summands: u64) -> Self {
        PartialSums {
            vals: [t[0].sum.value(), t[1].sum.value(), t[2].sum.value()],
            abs_sum: [t[0].abs_sum, t[1].abs_sum, t[2].abs_sum],
            abs_max: [t[0].abs_max, t[1].abs_max, t[2].abs_max],
            summands,
        }
    }

    fn zero() -> Self {
        PartialSums {
            vals: [Cx::zero(); 3],
            abs_sum: [R::zero(); 3],
            abs_max: [R::zero(); 3],
            summands: 0,
        }
    }
}

/// Main sum Σ χ(n)·n^{−s}·Q(v, n/N) over n ≤ ⌈λvN⌉, with per-order factors
/// (−ln n)^k. `weights` is a residue-indexed character table (None ⇒ ζ).
pub(crate) fn d_sum<R: Real>(
    s: Cx<R>,
    p: &EvalParams,
    order: usize,
    weights: Option<&[Cx<R>]>,
) -> PartialSums<R> {
    let n_scale = R::from_f64(p.n_scale);
    let mut t = [Tally::new(), Tally::new(), Tally::new()];
    let mut summands = 0u64;
    for n in 1..=p.d_cutoff {
        let w = match weights {
            None => Cx::one(),
            Some(table) => {
                let w = table[(n % table.len() as u64) as usize];
                if w.re == R::zero() && w.im == R::zero() {
                    continue;
                }
                w
            }
        };
        let n_r = R::from_u64(n);
        let ln_n = n_r.ln();
        let q_weight = cutoff_weight(p.v, n_r / n_scale);
        let term0 = rpow(n_r, -s).scale(q_weight) * w;
        t[0].add(term0);
        if order >= 1 {
            let term1 = term0.scale(-ln_n);
            t[1].add(term1);
            if order >= 2 {
                t[2].add(term1.scale(-ln_n));
            }
        }
        summands += 1;
    }
    PartialSums::from_tallies(t, summands)
}

/// Everything constant across m within one correction branch.
pub(crate) struct BranchSpec<'a, R: Real> {
    /// Branch sign μ ∈ {−1, +1}.
    pub mu: f64,
    /// Modulus (1 for ζ); scales z = iμq/(2πN) and adds q^{−s}.
    pub q: u64,
    /// Conjugated character table χ̄(m) by residue (None ⇒ ζ).
    pub weights: Option<&'a [Cx<R>]>,
    /// Constant outer factor: G(χ)·χ(−μ) for L-functions, 1 for ζ.
    pub outer: Cx<R>,
}

impl<'a, R: Real> BranchSpec<'a, R> {
    pub(crate) fn zeta(mu: f64) -> Self {
        BranchSpec { mu, q: 1, weights: None, outer: Cx::one() }
    }
}

/// One correction branch: Σ_{m≤M} χ̄(m)·[Γ(1−s)m^{s−1} − Σ_{w<v} Γ(1−s+w)/w!
/// ·(m+z)^{s−1−w} z^w]·(2π)^{s−1} q^{−s} e^{iμπ(1−s)/2}·outer, v+1 summands
/// per m, each produced by one complex exp of an assembled logarithm.
pub(crate) fn e_branch<R: Real>(
    s: Cx<R>,
    p: &EvalParams,
    spec: &BranchSpec<R>,
    order: usize,
) -> PartialSums<R> {
    let v = p.v as usize;
    let one = Cx::<R>::one();
    let s1m = one - s; // 1 − s
    let ln_two_pi = R::ln_2() + R::pi().ln();
    let ln_q = R::from_u64(spec.q).ln();
    let mu_r = R::from_f64(spec.mu);
    let half_pi_mu = R::pi() * mu_r * R::from_f64(0.5);

    // |z| = q/(2πN), z = iμ|z|
    let z_abs = R::from_u64(spec.q) / ((R::pi() + R::pi()) * R::from_f64(p.n_scale));
    let z = Cx::new(R::zero(), mu_r * z_abs);

    // Part of every term's log that does not depend on m or w:
    // log Γ(1−s) + (s−1)·ln 2π − s·ln q + iμπ(1−s)/2
    let lg_1ms = log_gamma(s1m);
    let base_log = lg_1ms + (s - one).scale(ln_two_pi) - s.scale(ln_q)
        + (Cx::new(R::zero(), half_pi_mu) * s1m);

    // w-dependent factors, advanced by recurrence (one ψ/ψ′ call per branch):
    //   ratio numerators (1−s+w)/(w+1); log Γ(1−s+w) − log Γ(1−s) offsets are
    //   implicit in the running product; ψ(1−s+w), ψ′(1−s+w) for derivatives.
    let mut step = Vec::with_capacity(v.saturating_sub(1));
    for w in 0..v.saturating_sub(1) {
        let wr = R::from_u64(w as u64);
        step.push((s1m.add_re(wr)).scale((R::from_u64(w as u64 + 1)).recip()));
    }
    let (psi0_w, psi1_w) = if order >= 1 {
        let mut p0 = Vec::with_capacity(v);
        let mut p1 = Vec::with_capacity(v);
        let mut d0 = digamma(s1m);
        let mut d1 = if order >= 2 { trigamma(s1m) } else { Cx::zero() };
        for w in 0..v {
            p0.push(d0);
            p1.push(d1);
            let a = s1m.add_re(R::from_u64(w as u64)); // 1 − s + w
            let inv = one / a;
            d0 += inv;
            if order >= 2 {
                d1 -= inv * inv;
            }
        }
        (p0, p1)
    } else {
        (Vec::new(), Vec::new())
    };
    let g_const = Cx::new(ln_two_pi - ln_q, -half_pi_mu);
    let psi_m = if order >= 1 { digamma(s1m) } else { Cx::zero() };
    let psi1_m = if order >= 2 { trigamma(s1m) } else { Cx::zero() };

    let mut t = [Tally::new(), Tally::new(), Tally::new()];
    let mut summands = 0u64;
    for m in 1..=p.m_terms {
        let w_char = match spec.weights {
            None => Cx::one(),
            Some(table) => {
                let w = table[(m % table.len() as u64) as usize];
                if w.re == R::zero() && w.im == R::zero() {
                    continue;
                }
                w
            }
        };
        let weight = w_char * spec.outer;
        let m_r = R::from_u64(m);
        let ln_m = m_r.ln();
        let mz = Cx::new(m_r, z.im); // m + z
        let log_mz = mz.ln();

        // Γ(1−s)·m^{s−1}·prefactors — the "full series" term.
        let mterm = (base_log + (s - one).scale(ln_m)).exp() * weight;
        t[0].add(mterm);
        if order >= 1 {
            let g = g_const.add_re(ln_m) - psi_m;
            let m1 = mterm * g;
            t[1].add(m1);
            if order >= 2 {
                t[2].add(mterm * (g * g + psi1_m));
            }
        }

        // Minus the first v binomial-expansion terms, T_{w+1} = T_w·
        // (1−s+w)·z/((w+1)(m+z)), starting from T_0 = Γ(1−s)(m+z)^{s−1}·pref.
        let zf = z / mz;
        let mut term = (base_log + (s - one) * log_mz).exp() * weight;
        for w in 0..v {
            t[0].add(-term);
            if order >= 1 {
                let g = g_const + log_mz - psi0_w[w];
                t[1].add(-(term * g));
                if order >= 2 {
                    t[2].add(-(term * (g * g + psi1_w[w])));
                }
            }
            if w + 1 < v {
                term = term * step[w] * zf;
            }
        }
        summands += v as u64 + 1;
    }
    PartialSums::from_tallies(t, summands)
}

/// The closed-form pole correction C = Γ(1−s+v)·N^{1−s}/((1−s)Γ(v)) and its
/// s-derivatives (to be subtracted from D + ΣE).
pub(crate) fn pole_correction<R: Real>(s: Cx<R>, p: &EvalParams, order: usize) -> PartialSums<R> {
    let one = Cx::<R>::one();
    let s1m = one - s;
    let arg = s1m.add_re(R::from_u64(p.v as u64)); // 1 − s + v
    let ln_n = R::from_f64(p.n_scale).ln();
    let lg_v = log_gamma(Cx::from_re(R::from_u64(p.v as u64)));
    let c = (log_gamma(arg) - lg_v + s1m.scale(ln_n)).exp() / s1m;
    let mut out = PartialSums::zero();
    out.vals[0] = c;
    if order >= 1 {
        // d/ds: −ψ(1−s+v) − ln N + 1/(1−s)
        let h1 = -digamma(arg) - Cx::from_re(ln_n) + one / s1m;
        out.vals[1] = c * h1;
        if order >= 2 {
            let h2 = trigamma(arg) + one / (s1m * s1m);
            out.vals[2] = c * (h1 * h1 + h2);
        }
    }
    for k in 0..=order {
        let a = out.vals[k].abs();
        out.abs_sum[k] = a;
        out.abs_max[k] = a;
    }
    out
}

/// Conservative log-magnitude bound for one branch's total, used to skip a
/// branch that cannot influence the result (chiefly μ = −1 at large τ,
/// where its overall e^{−πτ/2} makes every term underflow anyway).
pub(crate) fn branch_log_bound(sigma: f64, tau: f64, p: &EvalParams, q: u64, mu: f64) -> f64 {
    let lg = log_gamma(Cx64::new(1.0 - sigma, -tau)).re;
    let ln_two_pi = (2.0 * std::f64::consts::PI).ln();
    // growth allowance for the binomial terms: |z|·τ/m ≤ qτ/(2πN)
    let bump = q as f64 * tau / (2.0 * std::f64::consts::PI * p.n_scale);
    lg + (sigma - 1.0) * ln_two_pi + mu * std::f64::consts::PI * tau / 2.0
        + bump
        + (p.m_terms.max(2) as f64).ln()
        + 0.5 * (q as f64).ln()
}

/// Whether the branch bound is so far below the accuracy budget that the
/// branch can be skipped outright.
pub(crate) fn branch_negligible(sigma: f64, tau: f64, p: &EvalParams, q: u64, mu: f64) -> bool {
    branch_log_bound(sigma, tau, p, q, mu) < p.delta.ln() - 16.0
}

/// Combined per-order assembly of D + Σ_μ E_μ − C at one precision.
fn assemble<R: Real>(
    sigma: f64,
    tau_abs: f64,
    p: &EvalParams,
    order: usize,
    branches: BranchMode,
) -> PartialSums<R> {
    let s = Cx::new(R::from_f64(sigma), R::from_f64(tau_abs));
    let d = d_sum(s, p, order, None);
    let mut vals = d.vals;
    let mut abs_sum = d.abs_sum;
    let mut abs_max = d.abs_max;
    let mut summands = d.summands;
    let mut merge = |ps: PartialSums<R>, sign: f64| {
        for k in 0..=order {
            let signed = if sign < 0.0 { -ps.vals[k] } else { ps.vals[k] };
            vals[k] += signed;
            abs_sum[k] += ps.abs_sum[k];
            // block totals participate in the cancellation diagnostic too
            let block = ps.vals[k].abs();
            for cand in [ps.abs_max[k], block] {
                if cand > abs_max[k] {
                    abs_max[k] = cand;
                }
            }
        }
        summands += ps.summands;
    };
    let mus: &[f64] = match branches {
        BranchMode::None => &[],
        BranchMode::PlusOnly => &[1.0],
        BranchMode::BothAdaptive => &[1.0, -1.0],
    };
    for &mu in mus {
        if branches == BranchMode::BothAdaptive && branch_negligible(sigma, tau_abs, p, 1, mu) {
            continue;
        }
        merge(e_branch(s, p, &BranchSpec::zeta(mu), order), 1.0);
    }
    merge(pole_correction(s, p, order), -1.0);
    PartialSums { vals, abs_sum, abs_max, summands }
}

pub(crate) struct Narrowed {
    pub(crate) value: Cx64,
    pub(crate) abs_sum: f64,
    pub(crate) abs_max: f64,
    pub(crate) summands: u64,
}

fn assemble_narrowed<R: Real>(
    sigma: f64,
    tau_abs: f64,
    p: &EvalParams,
    order: usize,
    branches: BranchMode,
) -> Narrowed {
    let ps = assemble::<R>(sigma, tau_abs, p, order, branches);
    let (re, im) = ps.vals[order].to_f64_pair();
    Narrowed {
        value: Cx64::new(re, im),
        abs_sum: ps.abs_sum[order].to_f64(),
        abs_max: ps.abs_max[order].to_f64(),
        summands: ps.summands,
    }
}

/// Run an assembly at the policy-selected precision, escalate if the
/// roundoff estimate eats more than its share of the budget, and package
/// the evidence. The two closures produce the same quantity on the two
/// backends; `conjugate` flips the final value (negative-τ symmetry).
pub(crate) fn drive_generic(
    policy: BackendPolicy,
    roundoff_budget: f64,
    truncation_bound: f64,
    certified_geometry: bool,
    conjugate: bool,
    hardware: impl FnOnce() -> Narrowed,
    extended: impl FnOnce() -> Narrowed,
) -> Result<EvalResult> {
    let try_hardware = match policy {
        BackendPolicy::Auto => roundoff_budget > HARDWARE_FLOOR,
        BackendPolicy::Force(WorkingPrecision::Hardware) => true,
        BackendPolicy::Force(WorkingPrecision::Extended) => false,
    };
    let mut attempt: Option<(Narrowed, WorkingPrecision, f64)> = None;
    if try_hardware {
        let n = hardware();
        let est = ROUNDOFF_FACTOR * f64::machine_epsilon() * n.abs_sum;
        if est <= roundoff_budget && n.value.is_finite() {
            attempt = Some((n, WorkingPrecision::Hardware, est));
        } else if matches!(policy, BackendPolicy::Force(WorkingPrecision::Hardware)) {
            let ratio = n.abs_max / n.value.abs().max(truncation_bound);
            return Err(Error::PrecisionExhausted { ratio, delta: truncation_bound });
        }
    }
    let (n, precision, est) = match attempt {
        Some(t) => t,
        None => {
            let n = extended();
            let est = ROUNDOFF_FACTOR * DdReal::machine_epsilon() * n.abs_sum;
            if est > roundoff_budget || !n.value.is_finite() {
                let ratio = n.abs_max / n.value.abs().max(truncation_bound);
                return Err(Error::PrecisionExhausted { ratio, delta: truncation_bound });
            }
            (n, WorkingPrecision::Extended, est)
        }
    };
    let value = if conjugate { n.value.conj() } else { n.value };
    Ok(EvalResult {
        value,
        error_bound: truncation_bound + est,
        certified: certified_geometry,
        summands_used: n.summands,
        max_cancellation_ratio: n.abs_max / n.value.abs().max(truncation_bound),
        precision,
    })
}

/// ζ-shaped driver: same assembly on either backend.
#[allow(clippy::too_many_arguments)]
fn drive(
    sigma: f64,
    tau: f64,
    p: &EvalParams,
    order: usize,
    branches: BranchMode,
    policy: BackendPolicy,
    roundoff_budget: f64,
    truncation_bound: f64,
    certified_geometry: bool,
) -> Result<EvalResult> {
    let tau_abs = tau.abs();
    drive_generic(
        policy,
        roundoff_budget,
        truncation_bound,
        certified_geometry,
        tau < 0.0,
        || assemble_narrowed::<f64>(sigma, tau_abs, p, order, branches),
        || assemble_narrowed::<DdReal>(sigma, tau_abs, p, order, branches),
    )
}

/// ζ(s) at s = σ + iτ to absolute accuracy δ, default options.
pub fn zeta(sigma: f64, tau: f64, delta: f64) -> Result<EvalResult> {
    zeta_opts(sigma, tau, delta, &EvalOptions::default())
}

/// ζ(s) with explicit backend/certification options.
pub fn zeta_opts(sigma: f64, tau: f64, delta: f64, opts: &EvalOptions) -> Result<EvalResult> {
    reject_pole(sigma, tau)?;
    let p = derive_params(sigma, tau, TRUNCATION_SHARE * delta)?;
    if opts.require_certified && !p.certified {
        return Err(Error::OutsideCertifiedStrip { sigma });
    }
    let branches = if tau == 0.0 { BranchMode::None } else { BranchMode::PlusOnly };
    drive(sigma, tau, &p, 0, branches, opts.policy, delta - p.delta, p.delta, p.certified)
}

/// ζ(s) on caller-supplied geometry (sensitivity studies, pinned-cutoff
/// tests); the certificate flag is taken from the parameters.
pub fn zeta_with_params(
    sigma: f64,
    tau: f64,
    p: &EvalParams,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    reject_pole(sigma, tau)?;
    let branches = if tau == 0.0 { BranchMode::None } else { BranchMode::PlusOnly };
    drive(
        sigma,
        tau,
        p,
        0,
        branches,
        opts.policy,
        ROUNDOFF_SHARE * p.delta,
        p.delta,
        p.certified,
    )
}

/// k-th derivative ζ^{(k)}(s), k ∈ {1, 2}, to heuristic accuracy δ.
///
/// Differentiation amplifies every tail by logarithmic factors, so the
/// geometry is rebuilt for an internal target δ/100 with extra cutoff
/// depth; results are never certified.
pub fn zeta_derivative(order: u32, sigma: f64, tau: f64, delta: f64) -> Result<EvalResult> {
    zeta_derivative_opts(order, sigma, tau, delta, &EvalOptions::default())
}

/// `zeta_derivative` with explicit options.
pub fn zeta_derivative_opts(
    order: u32,
    sigma: f64,
    tau: f64,
    delta: f64,
    opts: &EvalOptions,
) -> Result<EvalResult> {
    if !(1..=2).contains(&order) {
        return Err(Error::Domain(format!("derivative order {order} not in 1..=2")));
    }
    reject_pole(sigma, tau)?;
    let p0 = derive_params(sigma, tau, DERIVATIVE_SHARE * delta)?;
    let p = params_with_cutoff_order(tau, p0.delta, p0.v + DERIVATIVE_EXTRA_ORDER, 1);
    // Near the real axis both branches sit on Γ/ψ poles at integer σ; they
    // are below the (deepened) budget there, so drop them.
    let branches =
        if tau.abs() >= 0.5 { BranchMode::BothAdaptive } else { BranchMode::None };
    drive(
        sigma,
        tau,
        &p,
        order as usize,
        branches,
        opts.policy,
        ROUNDOFF_SHARE * delta,
        delta,
        false,
    )
}

/// Magnitude of the always-neglected μ = −1 branch, computed explicitly on
/// the same geometry the certified value path uses (diagnostic; the
/// certificate budgets it at δ/3 without computing it).
pub fn neglected_branch_magnitude(sigma: f64, tau: f64, delta: f64) -> Result<f64> {
    let p = derive_params(sigma, tau.abs(), TRUNCATION_SHARE * delta)?;
    let s = Cx64::new(sigma, tau.abs());
    let ps = e_branch(s, &p, &BranchSpec::zeta(-1.0), 0);
    Ok(ps.vals[0].abs())
}

/// One m-term of a correction branch at extended precision, narrowed to
/// f64 parts — the exact quantity the branch sums, exposed for
/// cross-checking against direct evaluations of the same expression.
pub fn branch_summand_extended(
    sigma: f64,
    tau: f64,
    v: u32,
    n_scale: f64,
    mu: f64,
    m: u64,
) -> Cx64 {
    let p = EvalParams {
        v,
        n_scale,
        m_terms: m,
        d_cutoff: 1,
        delta: 1.0e-9,
        certified: false,
    };
    let s = Cx::<DdReal>::new(DdReal::from_f64(sigma), DdReal::from_f64(tau));
    let whole = e_branch(s, &p, &BranchSpec::zeta(mu), 0);
    let prev = if m > 1 {
        let p_prev = EvalParams { m_terms: m - 1, ..p };
        e_branch(s, &p_prev, &BranchSpec::zeta(mu), 0).vals[0]
    } else {
        Cx::zero()
    };
    let (re, im) = (whole.vals[0] - prev).to_f64_pair();
    Cx64::new(re, im)
}

fn reject_pole(sigma: f64, tau: f64) -> Result<()> {
    let d2 = (sigma - 1.0) * (sigma - 1.0) + tau * tau;
    if d2 < 1.0e-12 {
        return Err(Error::PoleAtOne(format!("{sigma} + {tau}i")));
    }
    Ok(())
}
