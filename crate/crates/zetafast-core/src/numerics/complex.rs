//! Minimal complex arithmetic over any [`Real`] scalar, so every kernel in
//! this crate runs unchanged at hardware (f64) and extended (double-double)
//! precision. Only the operations the evaluation engine actually uses are
//! provided: ring ops, robust division, exp/ln, polar helpers.

use super::real::Real;

/// Complex number re + i·im over a generic real scalar.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cx<R: Real> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Cx<R> {
    #[inline]
    pub fn new(re: R, im: R) -> Self {
        Cx { re, im }
    }

    #[inline]
    pub fn from_re(re: R) -> Self {
        Cx { re, im: R::zero() }
    }

    #[inline]
    pub fn zero() -> Self {
        Cx { re: R::zero(), im: R::zero() }
    }

    #[inline]
    pub fn one() -> Self {
        Cx { re: R::one(), im: R::zero() }
    }

    /// The imaginary unit.
    #[inline]
    pub fn i() -> Self {
        Cx { re: R::zero(), im: R::one() }
    }

    #[inline]
    pub fn conj(self) -> Self {
        Cx { re: self.re, im: -self.im }
    }

    #[inline]
    pub fn scale(self, r: R) -> Self {
        Cx { re: self.re * r, im: self.im * r }
    }

    #[inline]
    pub fn add_re(self, r: R) -> Self {
        Cx { re: self.re + r, im: self.im }
    }

    #[inline]
    pub fn norm_sqr(self) -> R {
        self.re * self.re + self.im * self.im
    }

    /// |z|, overflow-safe.
    #[inline]
    pub fn abs(self) -> R {
        self.re.hypot(self.im)
    }

    /// Principal argument in (−π, π].
    #[inline]
    pub fn arg(self) -> R {
        self.im.atan2(self.re)
    }

    /// r·e^{iθ}.
    pub fn from_polar(r: R, theta: R) -> Self {
        let (s, c) = theta.sin_cos();
        Cx { re: r * c, im: r * s }
    }

    /// e^z = e^{Re z}(cos Im z + i sin Im z).
    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cx { re: m * c, im: m * s }
    }

    /// Principal log: ln|z| + i·arg z.
    pub fn ln(self) -> Self {
        Cx { re: self.abs().ln(), im: self.arg() }
    }

    /// Principal z^w = exp(w·ln z).
    pub fn pow(self, w: Cx<R>) -> Self {
        (w * self.ln()).exp()
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Narrow to hardware precision (for reporting / diagnostics).
    pub fn to_f64_pair(self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl<R: Real> std::ops::Add for Cx<R> {
    type Output = Cx<R>;
    #[inline]
    fn add(self, b: Cx<R>) -> Cx<R> {
        Cx { re: self.re + b.re, im: self.im + b.im }
    }
}

impl<R: Real> std::ops::Sub for Cx<R> {
    type Output = Cx<R>;
    #[inline]
    fn sub(self, b: Cx<R>) -> Cx<R> {
        Cx { re: self.re - b.re, im: self.im - b.im }
    }
}

impl<R: Real> std::ops::Mul for Cx<R> {
    type Output = Cx<R>;
    #[inline]
    fn mul(self, b: Cx<R>) -> Cx<R> {
        Cx {
            re: self.re * b.re - self.im * b.im,
            im: self.re * b.im + self.im * b.re,
        }
    }
}

impl<R: Real> std::ops::Div for Cx<R> {
    type Output = Cx<R>;
    /// Smith's algorithm: scales by the dominant component first, so the
    /// intermediate products cannot overflow when the plain cross-product
    /// formula would.
    fn div(self, b: Cx<R>) -> Cx<R> {
        if b.re.abs() >= b.im.abs() {
            let r = b.im / b.re;
            let den = b.re + b.im * r;
            Cx {
                re: (self.re + self.im * r) / den,
                im: (self.im - self.re * r) / den,
            }
        } else {
            let r = b.re / b.im;
            let den = b.re * r + b.im;
            Cx {
                re: (self.re * r + self.im) / den,
                im: (self.im * r - self.re) / den,
            }
        }
    }
}

impl<R: Real> std::ops::Neg for Cx<R> {
    type Output = Cx<R>;
    #[inline]
    fn neg(self) -> Cx<R> {
        Cx { re: -self.re, im: -self.im }
    }
}

impl<R: Real> std::ops::AddAssign for Cx<R> {
    #[inline]
    fn add_assign(&mut self, b: Cx<R>) {
        *self = *self + b;
    }
}

impl<R: Real> std::ops::SubAssign for Cx<R> {
    #[inline]
    fn sub_assign(&mut self, b: Cx<R>) {
        *self = *self - b;
    }
}

impl<R: Real> std::ops::MulAssign for Cx<R> {
    #[inline]
    fn mul_assign(&mut self, b: Cx<R>) {
        *self = *self * b;
    }
}

/// x^w for a positive real base: e^{w ln x}, one real ln + exp + sin/cos.
/// The workhorse behind every n^{−s} in the main sums.
#[inline]
pub fn rpow<R: Real>(x: R, w: Cx<R>) -> Cx<R> {
    let l = x.ln();
    Cx::from_polar((l * w.re).exp(), l * w.im)
}

/// Complex number at hardware precision.
pub type Cx64 = Cx<f64>;
