//! Periodic grid with cached FFT plans.

use std::sync::{Arc, OnceLock};

use rustfft::{Fft, FftPlanner};

use crate::error::CoreError;
use crate::scalar::Real;

/// A periodic truncation of the line: `N` collocation points on
/// `[-L/2, L/2)` with wavenumbers `xi_k = 2 pi k / L`, `k = -N/2 ... N/2-1`.
///
/// Grids are immutable after construction and shared through `Arc`. FFT
/// plans for the grid's own size are built eagerly; the `2N`/`4N` padded
/// companions used by dealiased products are built on first use.
pub struct SpectralGrid<T: Real> {
    n_modes: usize,
    length: T,
    wavenumbers: Vec<T>,
    fwd: Arc<dyn Fft<T>>,
    inv: Arc<dyn Fft<T>>,
    padded2: OnceLock<Arc<SpectralGrid<T>>>,
    padded4: OnceLock<Arc<SpectralGrid<T>>>,
}

impl<T: Real> std::fmt::Debug for SpectralGrid<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralGrid")
            .field("n_modes", &self.n_modes)
            .field("length", &self.length.to_f64())
            .finish()
    }
}

/// Build a grid. Rejects odd or tiny mode counts and nonpositive lengths.
pub fn make_grid<T: Real>(n_modes: usize, length: T) -> Result<Arc<SpectralGrid<T>>, CoreError> {
    SpectralGrid::new(n_modes, length)
}

impl<T: Real> SpectralGrid<T> {
    pub fn new(n_modes: usize, length: T) -> Result<Arc<Self>, CoreError> {
        if n_modes < 8 || n_modes % 2 != 0 {
            return Err(CoreError::InvalidModeCount(n_modes));
        }
        if !(length > T::zero()) || !length.is_finite() {
            return Err(CoreError::InvalidLength(length.to_f64().unwrap_or(f64::NAN)));
        }
        let half = n_modes as i64 / 2;
        let step = T::lit(2.0) * T::PI() / length;
        let wavenumbers = (-half..half)
            .map(|k| step * T::from_i64(k).unwrap())
            .collect();
        let mut planner = FftPlanner::new();
        Ok(Arc::new(Self {
            n_modes,
            length,
            wavenumbers,
            fwd: planner.plan_fft_forward(n_modes),
            inv: planner.plan_fft_inverse(n_modes),
            padded2: OnceLock::new(),
            padded4: OnceLock::new(),
        }))
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn length(&self) -> T {
        self.length
    }

    /// Wavenumbers in monotone order, `xi_k = 2 pi k / L`.
    pub fn wavenumbers(&self) -> &[T] {
        &self.wavenumbers
    }

    /// `max |xi| = pi N / L` (attained at the unpaired mode `k = -N/2`).
    pub fn max_wavenumber(&self) -> T {
        self.wavenumbers[0].abs()
    }

    /// Signed mode number for a storage slot: `k = slot - N/2`.
    pub fn mode_number(&self, slot: usize) -> i64 {
        slot as i64 - self.n_modes as i64 / 2
    }

    /// Collocation points `x_j = -L/2 + j L / N`.
    pub fn nodes(&self) -> Vec<T> {
        let n = T::from_usize(self.n_modes).unwrap();
        let h = self.length / n;
        (0..self.n_modes)
            .map(|j| -self.length / T::lit(2.0) + h * T::from_usize(j).unwrap())
            .collect()
    }

    /// The `factor`-times finer companion grid (same `L`, `factor*N` modes)
    /// used for dealiased products. Only factors 2 and 4 are cached.
    pub fn padded(self: &Arc<Self>, factor: usize) -> Arc<SpectralGrid<T>> {
        let build = || {
            SpectralGrid::new(self.n_modes * factor, self.length)
                .expect("padded grid sizes are valid by construction")
        };
        match factor {
            2 => self.padded2.get_or_init(build).clone(),
            4 => self.padded4.get_or_init(build).clone(),
            _ => build(),
        }
    }

    pub(crate) fn fft_forward(&self) -> &Arc<dyn Fft<T>> {
        &self.fwd
    }

    pub(crate) fn fft_inverse(&self) -> &Arc<dyn Fft<T>> {
        &self.inv
    }

    /// Two grids are compatible when they have the same size and length.
    pub fn same_grid(&self, other: &Self) -> bool {
        self.n_modes == other.n_modes && self.length == other.length
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<(), CoreError> {
        if self.same_grid(other) {
            Ok(())
        } else {
            Err(CoreError::GridMismatch(
                self.n_modes,
                self.length.to_f64().unwrap_or(f64::NAN),
                other.n_modes,
                other.length.to_f64().unwrap_or(f64::NAN),
            ))
        }
    }
}
