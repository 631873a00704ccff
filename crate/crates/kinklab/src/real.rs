//! Generic scalar abstraction for the closed-form layer.
//!
//! Profile functions, scattering data, and the frequency-side coefficient
//! tables are polynomial/hyperbolic expressions that make sense at any
//! floating-point width, so they are written against this trait. The
//! discretized machinery (FFTs, solvers, harness) instantiates everything at
//! `f64` via [`crate::Scalar`].

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar usable in the closed-form layer.
pub trait Real: Float + FloatConst + FromPrimitive + core::fmt::Debug + Send + Sync + 'static {
    /// Lossy conversion from `f64` for literals in closed forms.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// sech(x) without overflow for large |x|.
#[inline]
pub fn sech<T: Real>(x: T) -> T {
    let two = T::lit(2.0);
    let e = (-x.abs()).exp();
    two * e / (T::one() + e * e)
}

/// ⟨x⟩ = (1 + x²)^{1/2}.
#[inline]
pub fn japanese<T: Real>(x: T) -> T {
    (T::one() + x * x).sqrt()
}

/// x / sinh(πx/2), extended continuously by 2/π at x = 0.
///
/// This combination multiplies every cosech-type Fourier identity, so the
/// removable singularity is handled here once.
#[inline]
pub fn x_cosech_half_pi<T: Real>(x: T) -> T {
    let half_pi = T::FRAC_PI_2();
    let z = half_pi * x;
    if z.abs() < T::lit(1e-6) {
        // sinh(z)/z = 1 + z²/6 + O(z⁴)
        let corr = T::one() + z * z / T::lit(6.0);
        T::one() / (half_pi * corr)
    } else {
        x / z.sinh()
    }
}
