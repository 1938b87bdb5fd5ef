//! Fourier multiplier application and the hyperbolic Gevrey weights.

use num_complex::Complex;

use crate::error::CoreError;
use crate::scalar::Real;

use super::field::SpectralField;
use super::grid::SpectralGrid;

/// Apply a pointwise multiplier `m(xi)` to the spectrum.
///
/// Realness of the output requires `m(-xi) = conj(m(xi))`; that is the
/// caller's responsibility and can be checked post hoc via
/// [`SpectralField::hermitian_residual`].
pub fn apply_multiplier<T: Real>(
    field: &SpectralField<T>,
    m: impl Fn(T) -> Complex<T>,
) -> SpectralField<T> {
    let coeffs = field
        .grid()
        .wavenumbers()
        .iter()
        .zip(field.coefficients())
        .map(|(&xi, &c)| c * m(xi))
        .collect();
    SpectralField::from_coefficients_unchecked(field.grid(), coeffs)
}

/// Apply a real even multiplier (always preserves realness).
pub fn apply_real_multiplier<T: Real>(
    field: &SpectralField<T>,
    m: impl Fn(T) -> T,
) -> SpectralField<T> {
    apply_multiplier(field, |xi| Complex::new(m(xi), T::zero()))
}

/// Spectral derivative `i xi`. The unpaired mode `k = -N/2` has no conjugate
/// partner under differentiation and is dropped, the usual pseudospectral
/// convention for keeping derivatives of real fields real.
pub fn derivative<T: Real>(field: &SpectralField<T>) -> SpectralField<T> {
    let mut out = apply_multiplier(field, |xi| Complex::new(T::zero(), xi));
    out.coefficients_mut()[0] = Complex::new(T::zero(), T::zero());
    out
}

/// Hyperbolic/exponential weight families evaluated on the grid's modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// `cosh(sigma |xi|)`
    Cosh,
    /// `sech(sigma |xi|)`
    Sech,
    /// `exp(sigma |xi|)`
    Exp,
    /// `exp(-sigma |xi|)`
    InvExp,
}

/// Tabulate a Gevrey weight on the grid, one value per mode in monotone
/// order. Growing kinds are refused beyond `sigma * max|xi| <= MAX_WEIGHT_ARG`.
pub fn gevrey_weight<T: Real>(
    kind: WeightKind,
    sigma: T,
    grid: &SpectralGrid<T>,
) -> Result<Vec<T>, CoreError> {
    if sigma < T::zero() {
        return Err(CoreError::NegativeSigma(sigma.to_f64().unwrap_or(f64::NAN)));
    }
    let arg_max = sigma * grid.max_wavenumber();
    if matches!(kind, WeightKind::Cosh | WeightKind::Exp) && arg_max > T::MAX_WEIGHT_ARG {
        return Err(CoreError::WeightOverflow {
            arg: arg_max.to_f64().unwrap_or(f64::INFINITY),
            max: T::MAX_WEIGHT_ARG.to_f64().unwrap_or(f64::INFINITY),
        });
    }
    let values = grid
        .wavenumbers()
        .iter()
        .map(|&xi| {
            let a = (sigma * xi).abs();
            match kind {
                WeightKind::Cosh => a.cosh(),
                WeightKind::Sech => T::one() / a.cosh(),
                WeightKind::Exp => a.exp(),
                WeightKind::InvExp => (-a).exp(),
            }
        })
        .collect();
    Ok(values)
}

/// Multiply a field's spectrum by a Gevrey weight.
pub fn apply_weight<T: Real>(
    field: &SpectralField<T>,
    kind: WeightKind,
    sigma: T,
) -> Result<SpectralField<T>, CoreError> {
    let table = gevrey_weight(kind, sigma, field.grid())?;
    let coeffs = table
        .iter()
        .zip(field.coefficients())
        .map(|(&w, &c)| c * w)
        .collect();
    Ok(SpectralField::from_coefficients_unchecked(
        field.grid(),
        coeffs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::grid::make_grid;

    #[test]
    fn identity_multiplier() {
        let grid = make_grid::<f64>(32, 7.0).unwrap();
        let field =
            SpectralField::from_profile(&grid, |x| (2.0 * std::f64::consts::PI * x / 7.0).cos())
                .unwrap();
        let out = apply_multiplier(&field, |_| Complex::new(1.0, 0.0));
        for (a, b) in field.coefficients().iter().zip(out.coefficients()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn derivative_of_cosine_is_minus_k_sine() {
        let l = 2.0 * std::f64::consts::PI;
        let grid = make_grid::<f64>(64, l).unwrap();
        let k = 3.0;
        let field = SpectralField::from_profile(&grid, |x| (k * x).cos()).unwrap();
        let d = derivative(&field);
        let samples = d.samples().unwrap();
        for (x, s) in grid.nodes().iter().zip(&samples) {
            assert!((s - (-k * (k * x).sin())).abs() < 1e-11, "x={x}");
        }
    }

    #[test]
    fn sech_then_cosh_is_identity_within_guard() {
        let grid = make_grid::<f64>(64, 4.0).unwrap(); // max|xi| = 16 pi
        let sigma = 30.0 / grid.max_wavenumber(); // sigma * max|xi| = 30
        let field = SpectralField::from_profile(&grid, |x| (x * 1.3).sin() + 0.2).unwrap();
        let filtered = apply_weight(&field, WeightKind::Sech, sigma).unwrap();
        let back = apply_weight(&filtered, WeightKind::Cosh, sigma).unwrap();
        for (a, b) in field.coefficients().iter().zip(back.coefficients()) {
            assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn weight_table_examples() {
        let grid = make_grid::<f64>(16, 2.0 * std::f64::consts::PI).unwrap();
        // sigma = 0: all ones for every kind
        for kind in [WeightKind::Cosh, WeightKind::Sech, WeightKind::Exp, WeightKind::InvExp] {
            let w = gevrey_weight(kind, 0.0, &grid).unwrap();
            assert!(w.iter().all(|&v| v == 1.0));
        }
        // cosh(1) at xi = 1
        let w = gevrey_weight(WeightKind::Cosh, 1.0, &grid).unwrap();
        let slot = grid
            .wavenumbers()
            .iter()
            .position(|&xi| (xi - 1.0).abs() < 1e-12)
            .unwrap();
        assert!((w[slot] - 1.5430806348152437).abs() < 1e-15);
        // sech * cosh = 1 pointwise
        let s = gevrey_weight(WeightKind::Sech, 1.0, &grid).unwrap();
        for (a, b) in w.iter().zip(&s) {
            assert!((a * b - 1.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn overflow_guard_trips() {
        let grid = make_grid::<f64>(64, 4.0).unwrap(); // max|xi| ~ 50.3
        let err = gevrey_weight(WeightKind::Cosh, 13.0, &grid).unwrap_err();
        assert!(matches!(err, CoreError::WeightOverflow { .. }));
        // decaying kinds are fine at the same sigma
        assert!(gevrey_weight(WeightKind::Sech, 13.0, &grid).is_ok());
        // negative sigma rejected everywhere
        assert!(matches!(
            gevrey_weight(WeightKind::Sech, -1.0, &grid),
            Err(CoreError::NegativeSigma(_))
        ));
    }

    #[test]
    fn odd_multiplier_on_nyquist_flagged_post_hoc() {
        let grid = make_grid::<f64>(16, 4.0).unwrap();
        let samples: Vec<f64> = (0..16).map(|j| if j % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let field = SpectralField::from_samples(&grid, &samples).unwrap();
        // raw i*xi (without the Nyquist convention) breaks realness
        let raw = apply_multiplier(&field, |xi| Complex::new(0.0, xi));
        assert!(raw.hermitian_residual() > 1e-3);
        // the derivative operator drops the unpaired mode instead
        assert!(derivative(&field).hermitian_residual() < 1e-14);
    }
}
