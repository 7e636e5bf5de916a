//! Software double-double scalar: an unevaluated sum hi + lo of two `f64`
//! with |lo| ≤ ulp(hi)/2, giving ~106 mantissa bits (~31 decimal digits).
//!
//! Arithmetic uses the classic error-free transformations (Dekker/Knuth);
//! transcendentals use argument reduction plus short Taylor series (exp,
//! sin, cos) and Newton refinement of an f64 seed (ln, sqrt, atan2). This
//! is the "extended" working precision the evaluation engine falls back to
//! when cancellation diagnostics void a hardware-precision certificate,
//! and the precision the reference oracle runs at by default.

use super::real::Real;

/// Error-free a + b for arbitrary f64 (Knuth two-sum).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Error-free a + b assuming |a| ≥ |b| (Dekker quick-two-sum).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Split a into 26 + 26 mantissa-bit halves (Dekker). Exact for |a| < ~1e292,
/// far above any magnitude these kernels produce.
#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Error-free a · b without requiring hardware FMA.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

/// Double-double value hi + lo, kept normalized (|lo| ≤ ulp(hi)/2).
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct DdReal {
    pub hi: f64,
    pub lo: f64,
}

pub const DD_PI: DdReal =
    DdReal { hi: std::f64::consts::PI, lo: 1.224_646_799_147_353_2e-16 };
pub const DD_TWO_PI: DdReal =
    DdReal { hi: std::f64::consts::TAU, lo: 2.449_293_598_294_706_4e-16 };
pub const DD_FRAC_PI_2: DdReal =
    DdReal { hi: std::f64::consts::FRAC_PI_2, lo: 6.123_233_995_736_766e-17 };
pub const DD_LN_2: DdReal =
    DdReal { hi: std::f64::consts::LN_2, lo: 2.319_046_813_846_299_6e-17 };
pub const DD_E: DdReal =
    DdReal { hi: std::f64::consts::E, lo: 1.445_646_891_729_250_2e-16 };

impl DdReal {
    pub const fn new(hi: f64, lo: f64) -> Self {
        DdReal { hi, lo }
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (h, l) = quick_two_sum(hi, lo);
        DdReal { hi: h, lo: l }
    }

    #[inline]
    pub fn add_f64(self, b: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, b);
        DdReal::renorm(s1, s2 + self.lo)
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        DdReal::renorm(p1, p2 + self.lo * b)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Self {
        self / DdReal::new(b, 0.0)
    }

    /// Exact multiplication by a power of two.
    #[inline]
    pub fn scale_pow2(self, p: f64) -> Self {
        DdReal { hi: self.hi * p, lo: self.lo * p }
    }

    fn nan() -> Self {
        DdReal { hi: f64::NAN, lo: 0.0 }
    }
}

impl std::ops::Add for DdReal {
    type Output = DdReal;
    #[inline]
    fn add(self, b: DdReal) -> DdReal {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        DdReal::renorm(s1, s2 + t2)
    }
}

impl std::ops::Sub for DdReal {
    type Output = DdReal;
    #[inline]
    fn sub(self, b: DdReal) -> DdReal {
        self + (-b)
    }
}

impl std::ops::Mul for DdReal {
    type Output = DdReal;
    #[inline]
    fn mul(self, b: DdReal) -> DdReal {
        let (p1, p2) = two_prod(self.hi, b.hi);
        DdReal::renorm(p1, p2 + self.hi * b.lo + self.lo * b.hi)
    }
}

impl std::ops::Div for DdReal {
    type Output = DdReal;
    #[inline]
    fn div(self, b: DdReal) -> DdReal {
        // Long division: three f64 quotient digits, each exact-remainder corrected.
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        DdReal::renorm(s, e).add_f64(q3)
    }
}

impl std::ops::Neg for DdReal {
    type Output = DdReal;
    #[inline]
    fn neg(self) -> DdReal {
        DdReal { hi: -self.hi, lo: -self.lo }
    }
}

impl std::ops::AddAssign for DdReal {
    #[inline]
    fn add_assign(&mut self, b: DdReal) {
        *self = *self + b;
    }
}
impl std::ops::SubAssign for DdReal {
    #[inline]
    fn sub_assign(&mut self, b: DdReal) {
        *self = *self - b;
    }
}
impl std::ops::MulAssign for DdReal {
    #[inline]
    fn mul_assign(&mut self, b: DdReal) {
        *self = *self * b;
    }
}
impl std::ops::DivAssign for DdReal {
    #[inline]
    fn div_assign(&mut self, b: DdReal) {
        *self = *self / b;
    }
}

impl From<f64> for DdReal {
    fn from(x: f64) -> Self {
        DdReal { hi: x, lo: 0.0 }
    }
}

/// exp(x) − 1 by Taylor series for |x| ≤ ln(2)/1024 (after range reduction).
fn expm1_small(x: DdReal) -> DdReal {
    let mut term = x;
    let mut sum = x;
    for k in 2..=12u32 {
        term = (term * x).div_f64(k as f64);
        sum += term;
    }
    sum
}

/// sin and cos by Taylor series for |r| ≤ π/4.
fn sin_cos_taylor(r: DdReal) -> (DdReal, DdReal) {
    let r2 = r * r;
    let mut term = r;
    let mut s = r;
    let mut k = 1.0f64;
    while k < 31.0 {
        term = -(term * r2).div_f64((k + 1.0) * (k + 2.0));
        s += term;
        k += 2.0;
    }
    let mut term = DdReal::from(1.0);
    let mut c = term;
    let mut k = 0.0f64;
    while k < 30.0 {
        term = -(term * r2).div_f64((k + 1.0) * (k + 2.0));
        c += term;
        k += 2.0;
    }
    (s, c)
}

impl Real for DdReal {
    const DIGITS: u32 = 31;

    fn machine_epsilon() -> f64 {
        // 2^-104: relative rounding unit of a 106-bit significand.
        4.930_380_657_631_324e-32
    }

    fn from_f64(x: f64) -> Self {
        DdReal { hi: x, lo: 0.0 }
    }

    fn from_u64(n: u64) -> Self {
        let hi = n as f64;
        let lo = if hi as u128 >= n as u128 {
            -(((hi as u128) - (n as u128)) as f64)
        } else {
            ((n as u128) - (hi as u128)) as f64
        };
        DdReal::renorm(hi, lo)
    }

    fn from_i64(n: i64) -> Self {
        if n < 0 {
            -Self::from_u64(n.unsigned_abs())
        } else {
            Self::from_u64(n as u64)
        }
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn pi() -> Self {
        DD_PI
    }

    fn ln_2() -> Self {
        DD_LN_2
    }

    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    fn floor(self) -> Self {
        let fh = self.hi.floor();
        if fh < self.hi {
            DdReal { hi: fh, lo: 0.0 }
        } else {
            DdReal::renorm(fh, self.lo.floor())
        }
    }

    fn ceil(self) -> Self {
        -((-self).floor())
    }

    fn round(self) -> Self {
        (self.add_f64(0.5)).floor()
    }

    fn sqrt(self) -> Self {
        if self.hi == 0.0 && self.lo == 0.0 {
            return DdReal::from(0.0);
        }
        if self.hi < 0.0 {
            return DdReal::nan();
        }
        // One dd Newton step on an f64 seed: error O(eps²).
        let r = DdReal::from(self.hi.sqrt());
        (r + self / r).scale_pow2(0.5)
    }

    fn exp(self) -> Self {
        if self.hi > 709.0 {
            return DdReal::from(f64::INFINITY);
        }
        if self.hi < -746.0 {
            return DdReal::from(0.0);
        }
        // x = m·ln2 + r with |r| ≤ ln2/2, then r scaled down by 2^9 so the
        // Taylor series needs 12 terms, then squared back up.
        let m = (self.hi / DD_LN_2.hi).round();
        let r = self - DD_LN_2.mul_f64(m);
        let rs = r.scale_pow2(1.0 / 512.0);
        let mut s = expm1_small(rs);
        for _ in 0..9 {
            s = s.scale_pow2(2.0) + s * s; // exp(2x)−1 = 2u + u² for u = exp(x)−1
        }
        let e = s.add_f64(1.0);
        // Exact scaling by 2^m, split in two so each factor stays normal
        // (|m| ≤ 1077 here, each half ≤ 539).
        let half = (m / 2.0).trunc() as i32;
        e.scale_pow2(2.0f64.powi(half)).scale_pow2(2.0f64.powi(m as i32 - half))
    }

    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 && self.lo == 0.0 {
                DdReal::from(f64::NEG_INFINITY)
            } else {
                DdReal::nan()
            };
        }
        // Take out the binary exponent first: ln(m·2^k) = ln m + k·ln 2 with
        // m ∈ [1, 2). Newton's exp(−y) then stays near 1, so its low word
        // cannot underflow the way exp(−700) would for a direct iteration.
        let k = self.hi.log2().floor();
        let a = (k / 2.0).trunc() as i32;
        let m = self.scale_pow2(2.0f64.powi(-a)).scale_pow2(2.0f64.powi(a - k as i32));
        // Newton on exp(y) = m: y ← y + m·exp(−y) − 1, twice from an f64 seed.
        let mut y = DdReal::from(m.hi.ln());
        for _ in 0..2 {
            y = y + m * (-y).exp() - DdReal::from(1.0);
        }
        y + DD_LN_2.mul_f64(k)
    }

    fn sin(self) -> Self {
        self.sin_cos().0
    }

    fn cos(self) -> Self {
        self.sin_cos().1
    }

    fn sin_cos(self) -> (Self, Self) {
        let k = (self.hi / DD_FRAC_PI_2.hi).round();
        if k.is_nan() || k.abs() >= 9.0e15 {
            // Phase already unrepresentable; mirror the f64 result.
            let (s, c) = self.hi.sin_cos();
            return (DdReal::from(s), DdReal::from(c));
        }
        let r = self - DD_FRAC_PI_2.mul_f64(k);
        let (s, c) = sin_cos_taylor(r);
        match ((k as i64) % 4 + 4) % 4 {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn atan2(self, x: Self) -> Self {
        let y = self;
        if y.hi == 0.0 && y.lo == 0.0 && x.hi == 0.0 && x.lo == 0.0 {
            return DdReal::from(0.0);
        }
        if x.hi == 0.0 && x.lo == 0.0 {
            return if y.hi > 0.0 { DD_FRAC_PI_2 } else { -DD_FRAC_PI_2 };
        }
        // Newton on sin(z)·x − cos(z)·y = 0 from the f64 seed; the seed fixes
        // the branch, the iteration only polishes within it.
        let mut z = DdReal::from(y.hi.atan2(x.hi));
        for _ in 0..2 {
            let (s, c) = z.sin_cos();
            let num = y * c - x * s;
            let den = x * c + y * s;
            z += num / den;
        }
        z
    }

    fn is_finite(self) -> bool {
        self.hi.is_finite()
    }
}
