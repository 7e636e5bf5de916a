//! Compensated (Neumaier) summation. The main sums in this crate have up to
//! ~10⁶ terms of wildly mixed magnitude; carrying the rounding residue in a
//! second accumulator keeps the plain-f64 path honest and costs little.

use super::complex::Cx;
use super::real::Real;

/// Neumaier-compensated running sum of real values.
#[derive(Clone, Copy, Debug)]
pub struct CompensatedSum<R: Real> {
    sum: R,
    carry: R,
}

impl<R: Real> Default for CompensatedSum<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Real> CompensatedSum<R> {
    pub fn new() -> Self {
        CompensatedSum { sum: R::zero(), carry: R::zero() }
    }

    #[inline]
    pub fn add(&mut self, x: R) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> R {
        self.sum + self.carry
    }
}

/// Componentwise compensated sum of complex values.
#[derive(Clone, Copy, Debug)]
pub struct ComplexSum<R: Real> {
    re: CompensatedSum<R>,
    im: CompensatedSum<R>,
}

impl<R: Real> Default for ComplexSum<R> {
    fn default() -> Self {
        Self::new()
    }
}

impl<R: Real> ComplexSum<R> {
    pub fn new() -> Self {
        ComplexSum { re: CompensatedSum::new(), im: CompensatedSum::new() }
    }

    #[inline]
    pub fn add(&mut self, z: Cx<R>) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Cx<R> {
        Cx::new(self.re.value(), self.im.value())
    }
}
