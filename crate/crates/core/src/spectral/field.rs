//! Real-valued fields stored as centered spectra.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::CoreError;
use crate::scalar::Real;

use super::grid::SpectralGrid;
use super::transform::{
    forward_transform, hermitian_residual, inverse_transform, symmetrize, HERMITIAN_TOLERANCE,
};

/// One real-valued field: a grid plus `N` complex coefficients in monotone
/// mode order. Real samples are derived on demand.
#[derive(Clone)]
pub struct SpectralField<T: Real> {
    grid: Arc<SpectralGrid<T>>,
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> std::fmt::Debug for SpectralField<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralField")
            .field("n_modes", &self.grid.n_modes())
            .field("l2_norm", &self.l2_norm().to_f64())
            .finish()
    }
}

impl<T: Real> SpectralField<T> {
    pub fn zero(grid: &Arc<SpectralGrid<T>>) -> Self {
        Self {
            grid: grid.clone(),
            coeffs: vec![Complex::new(T::zero(), T::zero()); grid.n_modes()],
        }
    }

    /// Wrap a centered spectrum, validating length and Hermitian symmetry.
    pub fn from_coefficients(
        grid: &Arc<SpectralGrid<T>>,
        coeffs: Vec<Complex<T>>,
    ) -> Result<Self, CoreError> {
        if coeffs.len() != grid.n_modes() {
            return Err(CoreError::LengthMismatch {
                expected: grid.n_modes(),
                got: coeffs.len(),
            });
        }
        let residual = hermitian_residual(&coeffs);
        if residual.to_f64().unwrap_or(f64::INFINITY) > HERMITIAN_TOLERANCE {
            return Err(CoreError::HermitianViolation {
                residual: residual.to_f64().unwrap_or(f64::INFINITY),
                tolerance: HERMITIAN_TOLERANCE,
            });
        }
        Ok(Self {
            grid: grid.clone(),
            coeffs,
        })
    }

    /// Wrap a spectrum that is Hermitian by construction (no validation).
    pub(crate) fn from_coefficients_unchecked(
        grid: &Arc<SpectralGrid<T>>,
        coeffs: Vec<Complex<T>>,
    ) -> Self {
        debug_assert_eq!(coeffs.len(), grid.n_modes());
        Self {
            grid: grid.clone(),
            coeffs,
        }
    }

    pub fn from_samples(grid: &Arc<SpectralGrid<T>>, samples: &[T]) -> Result<Self, CoreError> {
        let coeffs = forward_transform(samples, grid)?;
        Ok(Self {
            grid: grid.clone(),
            coeffs,
        })
    }

    /// Evaluate a profile at the collocation points and transform.
    pub fn from_profile(
        grid: &Arc<SpectralGrid<T>>,
        profile: impl Fn(T) -> T,
    ) -> Result<Self, CoreError> {
        let samples: Vec<T> = grid.nodes().into_iter().map(profile).collect();
        Self::from_samples(grid, &samples)
    }

    pub fn grid(&self) -> &Arc<SpectralGrid<T>> {
        &self.grid
    }

    pub fn coefficients(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub(crate) fn coefficients_mut(&mut self) -> &mut [Complex<T>] {
        &mut self.coeffs
    }

    pub fn samples(&self) -> Result<Vec<T>, CoreError> {
        inverse_transform(&self.coeffs, &self.grid)
    }

    pub fn hermitian_residual(&self) -> T {
        hermitian_residual(&self.coeffs)
    }

    /// Project onto the Hermitian subspace in place.
    pub fn symmetrize(&mut self) {
        symmetrize(&mut self.coeffs);
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// `sqrt(L * sum |eta_hat|^2)`, the discrete `L^2` norm over the box.
    pub fn l2_norm(&self) -> T {
        let sum: T = self.coeffs.iter().map(|c| c.norm_sqr()).sum();
        (self.grid.length() * sum).sqrt()
    }

    pub fn scaled(&self, a: T) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| c * a).collect();
        Self {
            grid: self.grid.clone(),
            coeffs,
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Self {
        assert!(
            self.grid.same_grid(&other.grid),
            "field arithmetic requires a common grid"
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Self {
            grid: self.grid.clone(),
            coeffs,
        }
    }
}

impl<T: Real> std::ops::Add for &SpectralField<T> {
    type Output = SpectralField<T>;
    fn add(self, rhs: Self) -> SpectralField<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Real> std::ops::Sub for &SpectralField<T> {
    type Output = SpectralField<T>;
    fn sub(self, rhs: Self) -> SpectralField<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}
