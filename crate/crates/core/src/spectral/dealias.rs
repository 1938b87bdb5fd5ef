//! Dealiased pointwise products via zero padding.
//!
//! Quadratic products are evaluated on a `2N` companion grid and cubic
//! products on a `4N` grid, then truncated back to the base band
//! `k = -N/2 ... N/2-1`. For band-limited inputs the retained modes equal
//! the exact (continuum) convolution: all product modes are representable on
//! the padded grid, so nothing aliases back into the kept band.
//!
//! The one subtlety is the unpaired base mode `k = -N/2`: on the padded grid
//! its real content splits evenly between `-N/2` and `+N/2`, and on
//! truncation the two fold back into the single stored slot.

use num_complex::Complex;

use crate::error::CoreError;
use crate::scalar::Real;

use super::field::SpectralField;
use super::grid::SpectralGrid;
use super::transform::forward_transform;

/// Spectrum of `f * g`, dealiased on a `2N` grid.
pub fn dealias_product<T: Real>(
    f: &SpectralField<T>,
    g: &SpectralField<T>,
) -> Result<SpectralField<T>, CoreError> {
    f.grid().check_same(g.grid())?;
    let padded = f.grid().padded(2);
    let fs = padded_samples(f, &padded)?;
    let gs = padded_samples(g, &padded)?;
    let prod: Vec<T> = fs.iter().zip(&gs).map(|(&a, &b)| a * b).collect();
    truncate(f.grid(), &forward_transform(&prod, &padded)?)
}

/// Spectrum of `f^2`, dealiased on a `2N` grid.
pub fn dealias_square<T: Real>(f: &SpectralField<T>) -> Result<SpectralField<T>, CoreError> {
    let padded = f.grid().padded(2);
    let fs = padded_samples(f, &padded)?;
    let prod: Vec<T> = fs.iter().map(|&a| a * a).collect();
    truncate(f.grid(), &forward_transform(&prod, &padded)?)
}

/// Spectrum of `f * g * h`, dealiased on a `4N` grid.
pub fn dealias_triple_product<T: Real>(
    f: &SpectralField<T>,
    g: &SpectralField<T>,
    h: &SpectralField<T>,
) -> Result<SpectralField<T>, CoreError> {
    f.grid().check_same(g.grid())?;
    f.grid().check_same(h.grid())?;
    let padded = f.grid().padded(4);
    let fs = padded_samples(f, &padded)?;
    let gs = padded_samples(g, &padded)?;
    let hs = padded_samples(h, &padded)?;
    let prod: Vec<T> = fs
        .iter()
        .zip(&gs)
        .zip(&hs)
        .map(|((&a, &b), &c)| a * b * c)
        .collect();
    truncate(f.grid(), &forward_transform(&prod, &padded)?)
}

/// Spectrum of `f^3`, dealiased on a `4N` grid.
pub fn dealias_cube<T: Real>(f: &SpectralField<T>) -> Result<SpectralField<T>, CoreError> {
    let padded = f.grid().padded(4);
    let fs = padded_samples(f, &padded)?;
    let prod: Vec<T> = fs.iter().map(|&a| a * a * a).collect();
    truncate(f.grid(), &forward_transform(&prod, &padded)?)
}

/// Samples of `f` on the padded grid (spectral interpolation).
fn padded_samples<T: Real>(
    f: &SpectralField<T>,
    padded: &std::sync::Arc<SpectralGrid<T>>,
) -> Result<Vec<T>, CoreError> {
    let n = f.grid().n_modes();
    let np = padded.n_modes();
    let offset = (np - n) / 2;
    let mut coeffs = vec![Complex::new(T::zero(), T::zero()); np];
    coeffs[offset..offset + n].copy_from_slice(f.coefficients());
    // Split the unpaired base Nyquist across the now-available +/- N/2 pair.
    let nyq = coeffs[offset];
    if nyq.norm_sqr() != T::zero() {
        let half = nyq * T::lit(0.5);
        coeffs[offset] = half;
        coeffs[offset + n] = half.conj();
    }
    super::transform::inverse_transform(&coeffs, padded)
}

/// Keep the base band of a padded spectrum, folding `+N/2` into `-N/2`.
fn truncate<T: Real>(
    base: &std::sync::Arc<SpectralGrid<T>>,
    padded_coeffs: &[Complex<T>],
) -> Result<SpectralField<T>, CoreError> {
    let n = base.n_modes();
    let offset = (padded_coeffs.len() - n) / 2;
    let mut out: Vec<Complex<T>> = padded_coeffs[offset..offset + n].to_vec();
    // +N/2 and -N/2 are conjugates for a real product; their fold is real.
    let folded = padded_coeffs[offset] + padded_coeffs[offset + n];
    out[0] = Complex::new(folded.re, T::zero());
    Ok(SpectralField::from_coefficients_unchecked(base, out))
}
