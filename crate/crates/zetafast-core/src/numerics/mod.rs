//! Precision-generic numeric kernels: the [`real::Real`] scalar abstraction
//! with f64 and double-double backends, complex arithmetic, compensated
//! summation, Bernoulli numbers, the log Γ/ψ/ψ′ family, and the Poisson
//! cutoff weight. Everything above this layer is written once against
//! [`real::Real`] and runs at either precision.

pub mod bernoulli;
pub mod complex;
pub mod cutoff;
pub mod dd;
pub mod gamma;
pub mod kahan;
pub mod real;
