//! Quadratic spectral distributions μ_{ℓ;+−}, μ_{ℓ;++}, μ_{ℓ;−−} of the
//! modulation equations, with their null factorizations μ = (phase)·κ.
//!
//! The closed forms carry the prefactors i/96 (for +−, defined with weight ½)
//! and i/192 (for ++ and −−, defined with weight ¼), as validated against
//! adaptive quadrature of the defining integrals.

use crate::dft::eta;
use crate::quad::oscillatory_quadrature;
use crate::real::{japanese, sech, x_cosech_half_pi, Real};
use crate::{Result, Scalar};
use num_complex::Complex;

/// Sign pattern of the two basis factors in the defining integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadKind {
    /// ½ ∫ γ sech²(γy) tanh(γy) e^#(y,ξ₁) conj(e^#(y,ξ₂)) dy
    PlusMinus,
    /// ¼ ∫ γ sech²(γy) tanh(γy) e^#(y,ξ₁) e^#(y,ξ₂) dy
    PlusPlus,
    /// ¼ ∫ γ sech²(γy) tanh(γy) conj(e^#(y,ξ₁)) conj(e^#(y,ξ₂)) dy
    MinusMinus,
}

/// Evaluation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadMethod {
    Closed,
    Quadrature,
}

/// Phase factor of the null factorization for each kind:
/// (⟨ξ₁⟩+ℓξ₁) ∓ (⟨ξ₂⟩+ℓξ₂).
pub fn quad_phase<T: Real>(kind: QuadKind, ell: T, x1: T, x2: T) -> T {
    let s1 = japanese(x1) + ell * x1;
    let s2 = japanese(x2) + ell * x2;
    match kind {
        QuadKind::PlusMinus => s1 - s2,
        QuadKind::PlusPlus | QuadKind::MinusMinus => s1 + s2,
    }
}

fn gamma_of<T: Real>(ell: T) -> T {
    T::one() / (T::one() - ell * ell).sqrt()
}

/// Closed form of κ_{ℓ;+−}: the factor multiplying the vanishing phase.
fn kappa_pm<T: Real>(ell: T, x1: T, x2: T) -> Complex<T> {
    let g = gamma_of(ell);
    let e1 = eta_t(ell, x1);
    let e2 = eta_t(ell, x2);
    let php = (japanese(x1) + ell * x1) + (japanese(x2) + ell * x2);
    let phm = (japanese(x1) + ell * x1) - (japanese(x2) + ell * x2);
    let z = (x1 - x2) / g;
    let three = T::lit(3.0);
    let b = three * g * g * php * (e1 + e2) - three * g * ell * (e1 + e2) * (e1 + e2)
        + ell * (x1 - x2) * (-T::lit(6.0) * (e1 - e2) + three * g * ell * phm)
        + T::lit(4.0) * g * ell * (-T::lit(2.0) + z * z);
    let denom = Complex::new(e1.abs(), -T::one()) * Complex::new(e2.abs(), T::one());
    let pref = Complex::new(T::zero(), T::one() / T::lit(96.0));
    pref / denom * Complex::new(x_cosech_half_pi(z) * b, T::zero())
}

/// Closed form of κ_{ℓ;++} (and of κ_{ℓ;−−} after conjugation).
fn kappa_pp<T: Real>(ell: T, x1: T, x2: T) -> Complex<T> {
    let g = gamma_of(ell);
    let e1 = eta_t(ell, x1);
    let e2 = eta_t(ell, x2);
    let php = (japanese(x1) + ell * x1) + (japanese(x2) + ell * x2);
    let phm = (japanese(x1) + ell * x1) - (japanese(x2) + ell * x2);
    let w = (x1 + x2) / g;
    let three = T::lit(3.0);
    let d = e1 - e2;
    let b = -three * g * g * phm * d + three * g * ell * d * d
        + T::lit(2.0) * g * ell * w * w
        + three * g * g * ell * ell * w * php
        + T::lit(8.0) * g * ell;
    let denom = Complex::new(e1.abs(), -T::one()) * Complex::new(e2.abs(), -T::one());
    let pref = Complex::new(T::zero(), T::one() / T::lit(192.0));
    pref / denom * Complex::new(x_cosech_half_pi(w) * b, T::zero())
}

fn eta_t<T: Real>(ell: T, xi: T) -> T {
    gamma_of(ell) * (xi + ell * japanese(xi))
}

/// κ evaluator of the factorization μ = phase·κ; continuous across the
/// phase's zero set (the z·cosech combination removes the singularity).
pub fn quad_dist_kappa<T: Real>(kind: QuadKind, ell: T, x1: T, x2: T) -> Complex<T> {
    match kind {
        QuadKind::PlusMinus => kappa_pm(ell, x1, x2),
        QuadKind::PlusPlus => kappa_pp(ell, x1, x2),
        QuadKind::MinusMinus => kappa_pp(ell, x1, x2).conj(),
    }
}

/// Quadratic spectral distribution by the selected route.
pub fn quad_dist(
    kind: QuadKind,
    ell: Scalar,
    x1: Scalar,
    x2: Scalar,
    method: QuadMethod,
) -> Result<crate::Complex> {
    match method {
        QuadMethod::Closed => {
            let phase = quad_phase(kind, ell, x1, x2);
            Ok(quad_dist_kappa(kind, ell, x1, x2) * phase)
        }
        QuadMethod::Quadrature => quad_dist_quadrature(kind, ell, x1, x2),
    }
}

/// Adaptive quadrature of the defining integral (the oracle route).
pub fn quad_dist_quadrature(
    kind: QuadKind,
    ell: Scalar,
    x1: Scalar,
    x2: Scalar,
) -> Result<crate::Complex> {
    let g = gamma_of(ell);
    let e1 = eta(ell, x1);
    let e2 = eta(ell, x2);
    let norm = 1.0 / (2.0 * std::f64::consts::PI);
    let (weight, zeta, m_fun): (Scalar, Scalar, Box<dyn Fn(Scalar) -> crate::Complex>) = match kind
    {
        QuadKind::PlusMinus => (
            0.5,
            x1 - x2,
            Box::new(move |y: Scalar| {
                let t = (g * y).tanh();
                let m1 = crate::Complex::new(e1, t) / crate::Complex::new(e1.abs(), -1.0);
                let m2 = (crate::Complex::new(e2, t) / crate::Complex::new(e2.abs(), -1.0)).conj();
                m1 * m2
            }),
        ),
        QuadKind::PlusPlus => (
            0.25,
            x1 + x2,
            Box::new(move |y: Scalar| {
                let t = (g * y).tanh();
                let m1 = crate::Complex::new(e1, t) / crate::Complex::new(e1.abs(), -1.0);
                let m2 = crate::Complex::new(e2, t) / crate::Complex::new(e2.abs(), -1.0);
                m1 * m2
            }),
        ),
        QuadKind::MinusMinus => (
            0.25,
            -(x1 + x2),
            Box::new(move |y: Scalar| {
                let t = (g * y).tanh();
                let m1 = (crate::Complex::new(e1, t) / crate::Complex::new(e1.abs(), -1.0)).conj();
                let m2 = (crate::Complex::new(e2, t) / crate::Complex::new(e2.abs(), -1.0)).conj();
                m1 * m2
            }),
        ),
    };
    let profile = move |y: Scalar| {
        let s = sech(g * y);
        let t = (g * y).tanh();
        m_fun(y) * (weight * norm * g * s * s * t)
    };
    Ok(oscillatory_quadrature(&profile, zeta, 45.0, 1e-12)?.value)
}
