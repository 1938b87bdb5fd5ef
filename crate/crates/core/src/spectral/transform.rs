//! Forward/inverse transforms between collocation samples and centered
//! spectra.
//!
//! With `x_j = -L/2 + jL/N` the kernel picks up an alternating sign relative
//! to the textbook DFT: `exp(-i xi_k x_j) = (-1)^k exp(-2 pi i k j / N)`.
//! The forward transform is normalized by `1/N` so single-mode examples are
//! exact and the `k = 0` coefficient is the sample mean.

use num_complex::Complex;

use crate::error::CoreError;
use crate::scalar::Real;

use super::grid::SpectralGrid;

/// Relative Hermitian-symmetry residual above which a spectrum is treated as
/// corrupted rather than merely rounded.
pub const HERMITIAN_TOLERANCE: f64 = 1e-8;

/// Samples -> centered spectrum, `eta_hat(xi_k) = (1/N) sum_j s_j e^{-i xi_k x_j}`.
pub fn forward_transform<T: Real>(
    samples: &[T],
    grid: &SpectralGrid<T>,
) -> Result<Vec<Complex<T>>, CoreError> {
    let n = grid.n_modes();
    if samples.len() != n {
        return Err(CoreError::LengthMismatch {
            expected: n,
            got: samples.len(),
        });
    }
    let mut buf: Vec<Complex<T>> = samples
        .iter()
        .map(|&s| Complex::new(s, T::zero()))
        .collect();
    grid.fft_forward().process(&mut buf);
    let scale = T::one() / T::from_usize(n).unwrap();
    let mut out = vec![Complex::new(T::zero(), T::zero()); n];
    for (slot, value) in out.iter_mut().enumerate() {
        let k = slot as i64 - n as i64 / 2;
        let bin = k.rem_euclid(n as i64) as usize;
        let sign = if k % 2 == 0 { scale } else { -scale };
        *value = buf[bin] * sign;
    }
    Ok(out)
}

/// Centered spectrum -> real samples. The input must be Hermitian symmetric
/// up to [`HERMITIAN_TOLERANCE`]; anything worse signals corrupted state.
pub fn inverse_transform<T: Real>(
    coefficients: &[Complex<T>],
    grid: &SpectralGrid<T>,
) -> Result<Vec<T>, CoreError> {
    let n = grid.n_modes();
    if coefficients.len() != n {
        return Err(CoreError::LengthMismatch {
            expected: n,
            got: coefficients.len(),
        });
    }
    let residual = hermitian_residual(coefficients);
    if residual.to_f64().unwrap_or(f64::INFINITY) > HERMITIAN_TOLERANCE {
        return Err(CoreError::HermitianViolation {
            residual: residual.to_f64().unwrap_or(f64::INFINITY),
            tolerance: HERMITIAN_TOLERANCE,
        });
    }
    let mut buf = vec![Complex::new(T::zero(), T::zero()); n];
    for (slot, &c) in coefficients.iter().enumerate() {
        let k = slot as i64 - n as i64 / 2;
        let bin = k.rem_euclid(n as i64) as usize;
        buf[bin] = if k % 2 == 0 { c } else { -c };
    }
    grid.fft_inverse().process(&mut buf);
    Ok(buf.into_iter().map(|c| c.re).collect())
}

/// Max-norm deviation from `eta_hat(-xi) = conj(eta_hat(xi))`, relative to
/// the largest coefficient magnitude. Zero spectra report zero.
pub fn hermitian_residual<T: Real>(coefficients: &[Complex<T>]) -> T {
    let n = coefficients.len();
    let scale = coefficients
        .iter()
        .map(|c| c.norm_sqr())
        .fold(T::zero(), T::max)
        .sqrt();
    if scale == T::zero() {
        return T::zero();
    }
    // Slots s and n-s hold modes k and -k; slot 0 (k = -N/2) and slot n/2
    // (k = 0) pair with themselves and must be real.
    let mut worst = coefficients[0].im.abs().max(coefficients[n / 2].im.abs());
    for s in 1..n / 2 {
        let d = coefficients[s] - coefficients[n - s].conj();
        worst = worst.max(d.norm_sqr().sqrt());
    }
    worst / scale
}

/// Project onto the Hermitian-symmetric subspace (average conjugate pairs,
/// drop the imaginary parts of the self-paired modes).
pub fn symmetrize<T: Real>(coefficients: &mut [Complex<T>]) {
    let n = coefficients.len();
    let half = T::lit(0.5);
    coefficients[0].im = T::zero();
    coefficients[n / 2].im = T::zero();
    for s in 1..n / 2 {
        let avg = (coefficients[s] + coefficients[n - s].conj()) * half;
        coefficients[s] = avg;
        coefficients[n - s] = avg.conj();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::grid::make_grid;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn constant_samples_give_mean_mode() {
        let grid = make_grid::<f64>(16, 5.0).unwrap();
        let samples = vec![1.0; 16];
        let coeffs = forward_transform(&samples, &grid).unwrap();
        for (slot, c) in coeffs.iter().enumerate() {
            let expect = if grid.mode_number(slot) == 0 { 1.0 } else { 0.0 };
            assert!(close(c.re, expect, 1e-14) && close(c.im, 0.0, 1e-14), "slot {slot}: {c}");
        }
    }

    #[test]
    fn single_cosine_splits_into_half_amplitudes() {
        let l = 32.0;
        let grid = make_grid::<f64>(64, l).unwrap();
        let xi1 = 2.0 * std::f64::consts::PI / l;
        let samples: Vec<f64> = grid.nodes().iter().map(|&x| (xi1 * x).cos()).collect();
        let coeffs = forward_transform(&samples, &grid).unwrap();
        for (slot, c) in coeffs.iter().enumerate() {
            let k = grid.mode_number(slot);
            let expect = if k.abs() == 1 { 0.5 } else { 0.0 };
            assert!(close(c.re, expect, 1e-13), "k={k}: {c}");
            assert!(close(c.im, 0.0, 1e-13), "k={k}: {c}");
        }
    }

    #[test]
    fn round_trip_is_identity_across_grid_sizes() {
        let mut n = 8usize;
        while n <= 4096 {
            let grid = make_grid::<f64>(n, 17.0).unwrap();
            // deterministic pseudo-random samples
            let samples: Vec<f64> = (0..n)
                .map(|j| ((j as f64 * 12.9898).sin() * 43758.5453).fract() - 0.5)
                .collect();
            let coeffs = forward_transform(&samples, &grid).unwrap();
            let back = inverse_transform(&coeffs, &grid).unwrap();
            let scale = samples.iter().fold(0.0f64, |m, s| m.max(s.abs()));
            for (a, b) in samples.iter().zip(&back) {
                assert!(
                    (a - b).abs() <= 1e-12 * scale,
                    "n={n}: {a} vs {b}"
                );
            }
            n *= 4;
        }
    }

    #[test]
    fn zero_and_constant_spectra_invert() {
        let grid = make_grid::<f64>(16, 3.0).unwrap();
        let zeros = vec![Complex::new(0.0, 0.0); 16];
        assert!(inverse_transform(&zeros, &grid).unwrap().iter().all(|&s| s == 0.0));

        let mut coeffs = zeros;
        coeffs[8] = Complex::new(2.5, 0.0); // k = 0
        let samples = inverse_transform(&coeffs, &grid).unwrap();
        for s in samples {
            assert!(close(s, 2.5, 1e-14));
        }
    }

    #[test]
    fn corrupted_symmetry_is_rejected() {
        let grid = make_grid::<f64>(16, 3.0).unwrap();
        let mut coeffs = vec![Complex::new(0.0, 0.0); 16];
        coeffs[9] = Complex::new(1.0, 0.5); // k = 1 with no conjugate partner
        let err = inverse_transform(&coeffs, &grid).unwrap_err();
        assert!(matches!(err, CoreError::HermitianViolation { .. }));
    }

    #[test]
    fn nyquist_mode_round_trips() {
        // alternating samples live entirely in the unpaired k = -N/2 slot
        let grid = make_grid::<f64>(8, 4.0).unwrap();
        let samples: Vec<f64> = (0..8).map(|j| if j % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let coeffs = forward_transform(&samples, &grid).unwrap();
        assert!(close(coeffs[0].re, 1.0, 1e-14));
        assert!(close(coeffs[0].im, 0.0, 1e-14));
        let back = inverse_transform(&coeffs, &grid).unwrap();
        for (a, b) in samples.iter().zip(&back) {
            assert!(close(*a, *b, 1e-13));
        }
    }
}
