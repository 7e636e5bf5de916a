//! Scalar abstraction over the two working precisions.
//!
//! Every numeric kernel in this crate (smoothed main sum, binomial tails,
//! log-gamma, Euler–Maclaurin oracle) is generic over `Real`, so the same
//! code runs on hardware `f64` (~15.9 significant digits) and on the
//! software double-double backend `DdReal` (~31 digits). Only the handful
//! of operations those kernels actually need are abstracted.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub trait Real:
    Copy
    + Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
{
    /// Significant decimal digits carried by this scalar.
    const DIGITS: u32;

    /// Unit roundoff of the representation, as an `f64`.
    fn machine_epsilon() -> f64;

    fn from_f64(x: f64) -> Self;
    fn from_u64(n: u64) -> Self;
    fn from_i64(n: i64) -> Self;
    fn to_f64(self) -> f64;

    fn pi() -> Self;
    fn ln_2() -> Self;

    fn zero() -> Self {
        Self::from_f64(0.0)
    }
    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn abs(self) -> Self;
    fn floor(self) -> Self;
    fn ceil(self) -> Self;
    fn round(self) -> Self;
    fn sqrt(self) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn atan2(self, x: Self) -> Self;
    fn is_finite(self) -> bool;

    fn sin_cos(self) -> (Self, Self) {
        (self.sin(), self.cos())
    }

    fn recip(self) -> Self {
        Self::one() / self
    }

    /// Overflow-safe √(x² + y²).
    fn hypot(self, other: Self) -> Self {
        let (a, b) = (self.abs(), other.abs());
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        if hi == Self::zero() {
            return Self::zero();
        }
        let r = lo / hi;
        hi * (Self::one() + r * r).sqrt()
    }

    /// Integer power by binary exponentiation.
    fn powi(self, n: i32) -> Self {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut base = self;
        let mut acc = Self::one();
        let mut k = n as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }

    fn max2(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    fn min2(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl Real for f64 {
    const DIGITS: u32 = 15;

    fn machine_epsilon() -> f64 {
        f64::EPSILON
    }

    fn from_f64(x: f64) -> Self {
        x
    }
    fn from_u64(n: u64) -> Self {
        n as f64
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn to_f64(self) -> f64 {
        self
    }

    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn ln_2() -> Self {
        std::f64::consts::LN_2
    }

    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
    fn ceil(self) -> Self {
        f64::ceil(self)
    }
    fn round(self) -> Self {
        f64::round(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn sin_cos(self) -> (Self, Self) {
        f64::sin_cos(self)
    }
    fn atan2(self, x: Self) -> Self {
        f64::atan2(self, x)
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn hypot(self, other: Self) -> Self {
        f64::hypot(self, other)
    }
    fn recip(self) -> Self {
        f64::recip(self)
    }
    fn max2(self, other: Self) -> Self {
        f64::max(self, other)
    }
    fn min2(self, other: Self) -> Self {
        f64::min(self, other)
    }
}
