//! Scalar scattering data for the reflectionless Pöschl–Teller problem
//! −∂² − 2 sech²(x): Jost solutions, transmission coefficient, Wronskian.

use crate::real::Real;
use num_complex::Complex;
use num_traits::One;

/// Transmission coefficient T(ζ) = (ζ + i)/(ζ − i); a Blaschke factor, so
/// |T| = 1 on the real axis.
pub fn transmission<T: Real>(zeta: Complex<T>) -> Complex<T> {
    let i = Complex::<T>::i();
    (zeta + i) / (zeta - i)
}

/// Normalization constants c±(ζ) = ∓(iζ − 1)^{−1}.
pub fn jost_normalizer<T: Real>(sign: i8, zeta: Complex<T>) -> Complex<T> {
    let i = Complex::<T>::i();
    let s = T::lit(if sign >= 0 { -1.0 } else { 1.0 });
    Complex::new(s, T::zero()) / (i * zeta - Complex::one())
}

/// Jost solution f±(x, ζ) = c±(ζ)(∓iζ + tanh x) e^{±ixζ}, normalized to
/// plane waves as x → ±∞.
pub fn jost<T: Real>(sign: i8, x: T, zeta: Complex<T>) -> Complex<T> {
    let i = Complex::<T>::i();
    let pm = T::lit(if sign >= 0 { 1.0 } else { -1.0 });
    let c = jost_normalizer(sign, zeta);
    let amp = -i * zeta.scale(pm) + Complex::new(x.tanh(), T::zero());
    let phase = (i * zeta.scale(pm * x)).exp();
    c * amp * phase
}

/// ∂ₓ f±(x, ζ) in closed form (sech² from the tanh factor plus the plane wave
/// phase).
pub fn jost_deriv<T: Real>(sign: i8, x: T, zeta: Complex<T>) -> Complex<T> {
    let i = Complex::<T>::i();
    let pm = T::lit(if sign >= 0 { 1.0 } else { -1.0 });
    let c = jost_normalizer(sign, zeta);
    let s = crate::real::sech(x);
    let amp = -i * zeta.scale(pm) + Complex::new(x.tanh(), T::zero());
    let damp = Complex::new(s * s, T::zero());
    let phase = (i * zeta.scale(pm * x)).exp();
    c * (damp + i * zeta.scale(pm) * amp) * phase
}

/// Wronskian W(f₊(·,ζ), f₋(·,ζ)) = −2iζ / T(ζ) in closed form.
pub fn wronskian<T: Real>(zeta: Complex<T>) -> Complex<T> {
    let i = Complex::<T>::i();
    -i.scale(T::lit(2.0)) * zeta / transmission(zeta)
}
