//! Periodic spectral discretization: grids, transforms, Fourier multipliers,
//! dealiased products and overflow-safe weighted norms.
//!
//! Spectra are stored in monotone mode order `k = -N/2 ... N/2-1`, aligned
//! with [`SpectralGrid::wavenumbers`]. Collocation points are
//! `x_j = -L/2 + j L/N` and the forward transform carries the `1/N`
//! normalization, so the coefficient at `k = 0` is the mean of the samples.

mod dealias;
mod field;
mod grid;
mod multiplier;
mod norms;
mod transform;

pub use dealias::{dealias_cube, dealias_product, dealias_square, dealias_triple_product};
pub use field::SpectralField;
pub use grid::{make_grid, SpectralGrid};
pub use multiplier::{
    apply_multiplier, apply_real_multiplier, apply_weight, derivative, gevrey_weight, WeightKind,
};
pub use norms::{
    g_norm, h_norm, inner_product, quadrature, sobolev_norm, weighted_norm, GevreyParams,
    NormWeight,
};
pub use transform::{forward_transform, inverse_transform, HERMITIAN_TOLERANCE};
