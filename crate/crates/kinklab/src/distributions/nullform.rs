//! The resonance null structure: the distorted transform of
//! α(γy)·e_ℓ^#(y,−γℓ)² factors through the phase ⟨ξ⟩ + ℓξ − 2γ^{−1}, which
//! vanishes exactly at ξ = γ(−2ℓ ± √3). ψ_ℓ is the smooth cofactor.

use crate::dft::{eta, DistortedBasis, SpectralFunction};
use crate::grid::Grid;
use crate::quad::oscillatory_quadrature;
use crate::real::{japanese, sech, Real};
use crate::{Result, Scalar};
use num_complex::Complex;

/// The two resonant frequencies ξ± = γ(−2ℓ ± √3).
pub fn resonant_frequencies<T: Real>(ell: T) -> (T, T) {
    let g = T::one() / (T::one() - ell * ell).sqrt();
    let rt3 = T::lit(3.0).sqrt();
    let two = T::lit(2.0);
    (g * (-two * ell + rt3), g * (-two * ell - rt3))
}

/// Smooth cofactor ψ_ℓ(ξ) of the null factorization
/// F^#[α(γ·)e^#(·,−γℓ)²](ξ) = (⟨ξ⟩ + ℓξ − 2γ^{−1}) ψ_ℓ(ξ).
///
/// With z̄ := γ^{−1}ξ + 2ℓ the polynomial factor is
/// 4ℓγ·z̄·(−5+z̄²) + 3(⟨ξ⟩−ℓξ+2γ^{−1})(1+z̄²); the z̄ in the first term is
/// required for the factorization to hold at ℓ ≠ 0 (validated against the
/// quadrature oracle to roundoff).
pub fn null_factor_psi<T: Real>(ell: T, xi: T) -> Complex<T> {
    let g = T::one() / (T::one() - ell * ell).sqrt();
    let zb = xi / g + T::lit(2.0) * ell;
    let e = g * (xi + ell * japanese(xi));
    let pref = Complex::new(T::zero(), -T::one())
        / Complex::new(T::lit(48.0) * g, T::zero())
        / Complex::new(e.abs(), T::one())
        / Complex::new((T::lit(2.0) * T::PI()).sqrt(), T::zero());
    let poly = T::lit(4.0) * ell * g * zb * (-T::lit(5.0) + zb * zb)
        + T::lit(3.0) * (japanese(xi) - ell * xi + T::lit(2.0) / g) * (T::one() + zb * zb);
    pref * Complex::new(poly * sech(T::FRAC_PI_2() * zb), T::zero())
}

/// Resonance phase ⟨ξ⟩ + ℓξ − 2γ^{−1}.
pub fn resonance_phase<T: Real>(ell: T, xi: T) -> T {
    let g = T::one() / (T::one() - ell * ell).sqrt();
    japanese(xi) + ell * xi - T::lit(2.0) / g
}

/// F^#_ℓ[α(γ·) e_ℓ^#(·,−γℓ)²](ξ) by adaptive quadrature (the oracle route).
///
/// At the threshold frequency the basis element collapses to
/// −tanh(γy)e^{−iγℓy}/√(2π), so the profile is −sech(γy)tanh³(γy)/(2π) with
/// the phase e^{−2iγℓy} folded into the oscillation.
pub fn null_structure_transform(ell: Scalar, xi: Scalar) -> Result<crate::Complex> {
    let g = 1.0 / (1.0f64 - ell * ell).sqrt();
    let e_out = eta(ell, xi);
    let norm = (2.0 * std::f64::consts::PI).powf(1.5);
    let profile = move |y: Scalar| {
        let t = (g * y).tanh();
        let s = sech(g * y);
        let m0 = (crate::Complex::new(e_out, t) / crate::Complex::new(e_out.abs(), -1.0)).conj();
        // α(γy)·tanh²(γy), α = −sech·tanh, with the (2π)^{3/2} basis norm
        m0 * (-s * t * t * t / norm)
    };
    let zeta = -(xi + 2.0 * g * ell);
    Ok(oscillatory_quadrature(&profile, zeta, 45.0, 1e-13)?.value)
}

/// The three normal-form coefficients 𝔮₁, 𝔮₂, 𝔮₃ on the frequency lattice:
/// scalar transforms of α(γy) against the squared/mixed threshold basis
/// element e_ℓ^#(y, −γℓ).
pub fn normal_form_coefficients(
    grid: &Grid,
    ell: Scalar,
) -> (SpectralFunction, SpectralFunction, SpectralFunction) {
    let basis = DistortedBasis::new(grid, ell);
    let g = 1.0 / (1.0f64 - ell * ell).sqrt();
    let two_pi = 2.0 * std::f64::consts::PI;
    // e^#(y,−γℓ) = −tanh(γy) e^{−iγℓy} / √(2π)
    let e0 = |y: Scalar| -> crate::Complex {
        crate::Complex::from_polar(1.0, -g * ell * y) * (-(g * y).tanh() / two_pi.sqrt())
    };
    let alpha = |y: Scalar| -> Scalar {
        let s = sech(g * y);
        -s * (g * y).tanh()
    };
    let q1_profile = grid.sample_complex(|y| e0(y) * e0(y) * alpha(y) * 0.25);
    let q2_profile = grid.sample_complex(|y| e0(y) * e0(y).conj() * alpha(y) * 0.5);
    let q3_profile = grid.sample_complex(|y| e0(y).conj() * e0(y).conj() * alpha(y) * 0.25);
    (
        basis.forward_complex(&q1_profile),
        basis.forward_complex(&q2_profile),
        basis.forward_complex(&q3_profile),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resonant_frequencies_at_rest() {
        let (p, m) = resonant_frequencies(0.0f64);
        assert!((p - 3.0f64.sqrt()).abs() < 1e-15);
        assert!((m + 3.0f64.sqrt()).abs() < 1e-15);
        assert!((p - 1.7320508).abs() < 1e-6);
    }

    #[test]
    fn transform_vanishes_at_resonant_frequencies() {
        for &l in &[0.0, 0.4] {
            let (xp, xm) = resonant_frequencies(l);
            for xi in [xp, xm] {
                let v = null_structure_transform(l, xi).unwrap();
                assert!(v.norm() < 1e-10, "l={l}, xi={xi}: |F| = {:.3e}", v.norm());
            }
        }
    }

    #[test]
    fn factorization_matches_quadrature_on_a_grid() {
        for &l in &[0.0, 0.4, -0.6] {
            for k in 0..9 {
                let xi = -2.0 + 0.5 * k as Scalar;
                let quad = null_structure_transform(l, xi).unwrap();
                let closed = null_factor_psi(l, xi) * resonance_phase(l, xi);
                assert!(
                    (quad - closed).norm() < 1e-8,
                    "l={l}, xi={xi}: |diff| = {:.3e}",
                    (quad - closed).norm()
                );
            }
        }
    }

    #[test]
    fn psi_is_bounded_and_decaying() {
        let l = 0.3;
        let near = null_factor_psi(l, 0.0f64).norm();
        let far = null_factor_psi(l, 30.0f64).norm();
        assert!(near.is_finite());
        assert!(far < 1e-6 * near.max(1.0));
    }

    #[test]
    fn normal_form_coefficient_vanishes_at_resonance() {
        let grid = Grid::new(80.0, 2048);
        let l = 0.4;
        let (q1, _, _) = normal_form_coefficients(&grid, l);
        let (xp, _) = resonant_frequencies(l);
        // lattice resolution limits how close we can probe the zero
        let v = q1.at(xp).norm();
        assert!(v < 1e-3, "|q1(xi+)| = {v:.3e}");
        // and 4·q1 agrees with the adaptive-quadrature transform evaluated at
        // a lattice frequency
        let at = *grid
            .freqs()
            .iter()
            .min_by(|a, b| (**a - 1.0f64).abs().partial_cmp(&(**b - 1.0).abs()).unwrap())
            .unwrap();
        let oracle = null_structure_transform(l, at).unwrap();
        let got = q1.at(at) * 4.0;
        assert!((got - oracle).norm() < 1e-6, "diff {}", (got - oracle).norm());
    }
}
