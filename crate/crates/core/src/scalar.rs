//! Scalar abstraction for the spectral machinery.
//!
//! Everything numerical in this crate is written against [`Real`], a small
//! trait alias over `num-traits` plus `rustfft::FftNum`. `f32` and `f64`
//! implement it; concrete aliases live at the crate root.

use num_traits::{Float, FloatConst, FromPrimitive};
use rustfft::FftNum;

/// Floating-point scalar usable throughout the crate.
pub trait Real: Float + FloatConst + FromPrimitive + FftNum + std::iter::Sum<Self> {
    /// Largest argument at which an `exp`/`cosh` weight table may be
    /// materialized without overflowing the type. Norms themselves run in
    /// log space and are not limited by this.
    const MAX_WEIGHT_ARG: Self;

    /// Embed an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }

    /// `ln(cosh(x))`, stable for arbitrarily large `|x|`.
    #[inline]
    fn ln_cosh(self) -> Self {
        let a = self.abs();
        // cosh x = e^|x| (1 + e^{-2|x|}) / 2
        a + (-(a + a)).exp().ln_1p() - Self::lit(std::f64::consts::LN_2)
    }
}

impl Real for f64 {
    // cosh overflows f64 near 710; 600 leaves headroom for derived factors.
    const MAX_WEIGHT_ARG: f64 = 600.0;
}

impl Real for f32 {
    // cosh overflows f32 near 89.
    const MAX_WEIGHT_ARG: f32 = 60.0;
}
