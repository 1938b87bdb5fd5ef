//! Pseudospectral simulation and verification toolkit for the fifth-order
//! KdV-BBM equation
//!
//! ```text
//! eta_t + eta_x - gamma1*eta_txx + gamma2*eta_xxx + delta1*eta_txxxx + delta2*eta_xxxxx
//!     = -(3/4)(eta^2)_x - gamma*(eta^2)_xxx + (7/48)(eta_x^2)_x + (1/8)(eta^3)_x
//! ```
//!
//! on a periodic box `[-L/2, L/2)`. The equation is integrated in Fourier
//! space after dividing by `1 + gamma1*xi^2 + delta1*xi^4`, which turns the
//! linear part into a bounded dispersion multiplier and the nonlinearity into
//! a combination of bounded Fourier multipliers acting on pointwise products.
//!
//! Beyond plain simulation the crate measures analyticity-related quantities:
//! Gevrey norms with `exp` and `cosh` weights (evaluated in log space so the
//! weights never overflow), the modified energy of the cosh-weighted field
//! `v_sigma = cosh(sigma|D|) eta`, the commutator remainders that drive its
//! time derivative, and brute-force verifiers for the hyperbolic-weight
//! inequalities that control them. The [`solver`] module provides an
//! integrating-factor RK4 stepper, a Picard/Duhamel fixed-point solver with
//! contraction-rate tracking, and a continuation driver that shrinks the
//! strip width like `1/sqrt(t)` over long horizons.
//!
//! All core math is generic over the scalar type via [`scalar::Real`];
//! `f64` aliases for the main types live at the crate root.

pub mod diagnostics;
pub mod error;
pub mod model;
pub mod scalar;
pub mod solver;
pub mod spectral;

pub use error::CoreError;
pub use scalar::Real;

/// Double-precision aliases; the CLI and the acceptance suite use these.
pub type Grid64 = spectral::SpectralGrid<f64>;
pub type Field64 = spectral::SpectralField<f64>;
pub type Params64 = model::ModelParams<f64>;
pub type GevreyParams64 = spectral::GevreyParams<f64>;

/// Single-precision aliases for the generic instantiation.
pub type Grid32 = spectral::SpectralGrid<f32>;
pub type Field32 = spectral::SpectralField<f32>;
pub type Params32 = model::ModelParams<f32>;
