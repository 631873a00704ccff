//! Cubic spectral distributions ν_{ℓ,s₁s₂s₃} and their decomposition into a
//! δ₀ part, a principal-value cosech part, and a regular part.
//!
//! Writing η_j = γ(ξ_j + ℓ⟨ξ_j⟩) and expanding the product of basis factors
//! ∏ (η_j + σ_j i tanh(γy)) in elementary symmetric sums A_k, the three parts
//! read (with Δ the signed frequency sum and denominators from the basis):
//!   δ₀ part:   (2π)^{-1} (A₀ − A₂ + A₄)/denoms · δ₀(Δ)
//!   p.v. part: −(4πγ)^{-1}(A₁ − A₃)/denoms · p.v. cosech(πΔ/(2γ))
//!   regular:   (2π)^{-2}γ^{-1}[(A₂−2A₄)·F₂ + iA₃·F₂T + A₄·F₄](Δ/γ)/denoms
//! with F₂, F₂T, F₄ the sech², sech²tanh, sech⁴ transforms. The identities
//! m^{δ₀}_{+−+}(ξ,ξ,ξ,ξ) = 1/(2π) and m^{pv}_{+−+}(ξ,ξ,ξ,ξ) = 0 hold exactly.

use crate::quad::oscillatory_quadrature;
use crate::real::{japanese, x_cosech_half_pi, Real};
use crate::{Result, Scalar};
use num_complex::Complex;

/// Signs (s₁, s₂, s₃) of the three input slots; the output slot is always
/// conjugated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignPattern {
    Ppp,
    Pmp,
    Pmm,
    Mmm,
}

impl SignPattern {
    pub fn signs(self) -> [i8; 3] {
        match self {
            SignPattern::Ppp => [1, 1, 1],
            SignPattern::Pmp => [1, -1, 1],
            SignPattern::Pmm => [1, -1, -1],
            SignPattern::Mmm => [-1, -1, -1],
        }
    }
    /// Δ = −ξ + s₁ξ₁ + s₂ξ₂ + s₃ξ₃.
    pub fn delta<T: Real>(self, xi: T, x: [T; 3]) -> T {
        let s = self.signs();
        -xi + T::lit(s[0] as f64) * x[0] + T::lit(s[1] as f64) * x[1] + T::lit(s[2] as f64) * x[2]
    }
}

/// Coefficient kind within the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicKind {
    Delta0,
    PrincipalValue,
}

fn gamma_of<T: Real>(ell: T) -> T {
    T::one() / (T::one() - ell * ell).sqrt()
}

fn eta_t<T: Real>(ell: T, xi: T) -> T {
    gamma_of(ell) * (xi + ell * japanese(xi))
}

/// Elementary sign-weighted symmetric sums A₀..A₄ of ∏(η_j + σ_j iT).
fn eta_sums<T: Real>(etas: [T; 4], sigma: [T; 4]) -> [T; 5] {
    let [e0, e1, e2, e3] = etas;
    let [s0, s1, s2, s3] = sigma;
    let a0 = e0 * e1 * e2 * e3;
    let a1 = s0 * e1 * e2 * e3 + s1 * e0 * e2 * e3 + s2 * e0 * e1 * e3 + s3 * e0 * e1 * e2;
    let a2 = s0 * s1 * e2 * e3
        + s0 * s2 * e1 * e3
        + s0 * s3 * e1 * e2
        + s1 * s2 * e0 * e3
        + s1 * s3 * e0 * e2
        + s2 * s3 * e0 * e1;
    let a3 = s0 * s1 * s2 * e3 + s0 * s1 * s3 * e2 + s0 * s2 * s3 * e1 + s1 * s2 * s3 * e0;
    let a4 = s0 * s1 * s2 * s3;
    [a0, a1, a2, a3, a4]
}

/// Product of basis denominators (|η|+i for conjugated slots, |η|−i else).
fn denoms<T: Real>(etas: [T; 4], signs: [i8; 3]) -> Complex<T> {
    let mut d = Complex::new(etas[0].abs(), T::one());
    for j in 0..3 {
        let im = if signs[j] > 0 { -T::one() } else { T::one() };
        d = d * Complex::new(etas[j + 1].abs(), im);
    }
    d
}

fn sums_for<T: Real>(pattern: SignPattern, ell: T, xi: T, x: [T; 3]) -> ([T; 5], Complex<T>) {
    let signs = pattern.signs();
    let etas = [
        eta_t(ell, xi),
        eta_t(ell, x[0]),
        eta_t(ell, x[1]),
        eta_t(ell, x[2]),
    ];
    let sigma = [
        -T::one(),
        T::lit(signs[0] as f64),
        T::lit(signs[1] as f64),
        T::lit(signs[2] as f64),
    ];
    (eta_sums(etas, sigma), denoms(etas, signs))
}

/// δ₀ or p.v. coefficient of the cubic spectral distribution.
pub fn cubic_coeff<T: Real>(
    pattern: SignPattern,
    kind: CubicKind,
    ell: T,
    xi: T,
    x: [T; 3],
) -> Complex<T> {
    let (a, den) = sums_for(pattern, ell, xi, x);
    let two_pi = T::lit(2.0) * T::PI();
    match kind {
        CubicKind::Delta0 => {
            let num = a[0] - a[2] + a[4];
            Complex::new(num / two_pi, T::zero()) / den
        }
        CubicKind::PrincipalValue => {
            let g = gamma_of(ell);
            let num = -(a[1] - a[3]) / (T::lit(2.0) * two_pi * g);
            Complex::new(num, T::zero()) / den
        }
    }
}

// entire versions of the hyperbolic transforms (z·cosech(πz/2) built in)
fn ft_sech2<T: Real>(z: T) -> T {
    T::PI() * x_cosech_half_pi(z)
}
fn ft_sech2_tanh<T: Real>(z: T) -> Complex<T> {
    Complex::new(T::zero(), T::FRAC_PI_2() * z * x_cosech_half_pi(z))
}
fn ft_sech4<T: Real>(z: T) -> T {
    T::PI() / T::lit(6.0) * (T::lit(4.0) + z * z) * x_cosech_half_pi(z)
}

/// Smooth (regular) part of the cubic distribution.
pub fn regular_part<T: Real>(pattern: SignPattern, ell: T, xi: T, x: [T; 3]) -> Complex<T> {
    let (a, den) = sums_for(pattern, ell, xi, x);
    let g = gamma_of(ell);
    let z = pattern.delta(xi, x) / g;
    let two_pi = T::lit(2.0) * T::PI();
    let pref = T::one() / (two_pi * two_pi * g);
    let val = Complex::new((a[2] - T::lit(2.0) * a[4]) * ft_sech2(z), T::zero())
        + ft_sech2_tanh(z) * Complex::new(T::zero(), a[3])
        + Complex::new(a[4] * ft_sech4(z), T::zero());
    val * Complex::new(pref, T::zero()) / den
}

/// Gaussian test function used by the mollified pairing oracle.
#[derive(Debug, Clone, Copy)]
pub struct GaussianTest {
    pub center: Scalar,
    pub width: Scalar,
}

impl GaussianTest {
    fn eval(&self, s: Scalar) -> Scalar {
        (-((s - self.center) / self.width).powi(2)).exp()
    }
    fn support(&self) -> (Scalar, Scalar) {
        (self.center - 7.5 * self.width, self.center + 7.5 * self.width)
    }
}

/// Left side of the pairing oracle: ∫ ν(ξ, ·) G⊗G⊗G evaluated by swapping the
/// y- and ξ-integrals, so only smooth rapidly decaying 1-d integrals appear.
/// The frequency rules split at ξ = −γℓ, where |η(ξ)| has its kink.
pub fn cubic_pairing_direct(
    pattern: SignPattern,
    ell: Scalar,
    xi: Scalar,
    test: GaussianTest,
) -> Result<crate::Complex> {
    let g = gamma_of(ell);
    let signs = pattern.signs();
    let (lo, hi) = test.support();
    let kink = -g * ell;
    let (sn, sw) = crate::quad::composite_gauss(140, lo, hi, &[kink]);
    // wave packets w_±(y) = ∫ e^{±}(y, s) G(s) ds (without the 1/√2π)
    let packet = |y: Scalar, conj: bool| -> crate::Complex {
        let t = (g * y).tanh();
        let mut acc = crate::Complex::new(0.0, 0.0);
        for (&s, &w) in sn.iter().zip(&sw) {
            let e = eta_t(ell, s);
            let m = crate::Complex::new(e, t) / crate::Complex::new(e.abs(), -1.0);
            let ph = crate::Complex::from_polar(1.0, y * s);
            let v = m * ph;
            acc += w * test.eval(s) * if conj { v.conj() } else { v };
        }
        acc
    };
    let profile = move |y: Scalar| -> crate::Complex {
        let t = (g * y).tanh();
        let e0 = eta_t(ell, xi);
        let m0 = (crate::Complex::new(e0, t) / crate::Complex::new(e0.abs(), -1.0)).conj();
        let wp = packet(y, false);
        let wm = if signs.iter().any(|&s| s < 0) {
            packet(y, true)
        } else {
            crate::Complex::new(0.0, 0.0)
        };
        let mut v = m0;
        for &s in &signs {
            v *= if s > 0 { wp } else { wm };
        }
        v / (2.0 * std::f64::consts::PI).powi(2)
    };
    // the packets decay like Gaussians; −ξ is the only residual oscillation
    Ok(oscillatory_quadrature(&profile, -xi, 30.0, 1e-9)?.value)
}

/// Right side of the pairing oracle: δ₀ + p.v. + regular parts integrated
/// against the same Gaussian test function.
///
/// All quadrature panels split at the preimages of the |η|-kink ξ = −γℓ in
/// each integration variable; the inner ξ₁ rule additionally splits where the
/// constrained ξ₃ crosses the kink, keeping every panel analytic.
pub fn cubic_pairing_reconstructed(
    pattern: SignPattern,
    ell: Scalar,
    xi: Scalar,
    test: GaussianTest,
) -> crate::Complex {
    let g = gamma_of(ell);
    let signs = pattern.signs();
    let (s1, s2, s3) = (
        signs[0] as Scalar,
        signs[1] as Scalar,
        signs[2] as Scalar,
    );
    let (lo, hi) = test.support();
    let kink = -g * ell;
    let n = 96;
    // outer breaks: the |η| kink itself, plus where the inner ξ₁ break curve
    // (ξ₃ constrained to the kink) crosses the kink or the domain edges
    let outer_breaks = [
        kink,
        (xi - s1 * kink - s3 * kink) / s2,
        (xi - s1 * lo - s3 * kink) / s2,
        (xi - s1 * hi - s3 * kink) / s2,
    ];
    let (x2n, x2w) = crate::quad::composite_gauss(n, lo, hi, &outer_breaks);

    let xi3_at =
        |x1: Scalar, x2: Scalar, delta: Scalar| (xi - s1 * x1 - s2 * x2 + delta) / s3;

    let d_max = 18.0 * g;
    let mut delta_part = crate::Complex::new(0.0, 0.0);
    let mut pv_part = crate::Complex::new(0.0, 0.0);
    let mut reg_part = crate::Complex::new(0.0, 0.0);
    for (&x2, &w2) in x2n.iter().zip(&x2w) {
        let g2 = test.eval(x2);
        if g2 < 1e-16 {
            continue;
        }
        // ξ₁ value at which the constrained ξ₃(Δ=0) crosses the kink
        let x1_of_x3kink = (xi - s2 * x2 - s3 * kink) / s1;
        let (x1n, x1w) = crate::quad::composite_gauss(n, lo, hi, &[kink, x1_of_x3kink]);
        for (&x1, &w1) in x1n.iter().zip(&x1w) {
            let g12 = g2 * test.eval(x1);
            if g12 < 1e-16 {
                continue;
            }
            let x3 = xi3_at(x1, x2, 0.0);
            let m = cubic_coeff(pattern, CubicKind::Delta0, ell, xi, [x1, x2, x3]);
            delta_part += w1 * w2 * g12 * test.eval(x3) * m;

            // Δ rules split where ξ₃(±Δ) crosses the kink
            let d_star = (s3 * (kink - x3)).abs();
            let (dn, dw) = crate::quad::composite_gauss(48, 0.0, d_max, &[d_star]);
            let mut acc_pv = crate::Complex::new(0.0, 0.0);
            let mut acc_reg = crate::Complex::new(0.0, 0.0);
            for (&d, &wd) in dn.iter().zip(&dw) {
                let xp = xi3_at(x1, x2, d);
                let xm = xi3_at(x1, x2, -d);
                let fp = cubic_coeff(pattern, CubicKind::PrincipalValue, ell, xi, [x1, x2, xp])
                    * test.eval(xp);
                let fm = cubic_coeff(pattern, CubicKind::PrincipalValue, ell, xi, [x1, x2, xm])
                    * test.eval(xm);
                let csch = 1.0 / (std::f64::consts::PI * d / (2.0 * g)).sinh();
                acc_pv += wd * (fp - fm) * csch;
                let rp = regular_part(pattern, ell, xi, [x1, x2, xp]) * test.eval(xp);
                let rm = regular_part(pattern, ell, xi, [x1, x2, xm]) * test.eval(xm);
                acc_reg += wd * (rp + rm);
            }
            pv_part += w1 * w2 * g12 * acc_pv;
            reg_part += w1 * w2 * g12 * acc_reg;
        }
    }
    (delta_part + pv_part + reg_part) / s3.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pmp_delta_identity_on_the_diagonal() {
        // m^{δ₀}_{+−+}(ξ,ξ,ξ,ξ) = 1/(2π) for all ξ
        for &xi in &[0.0, 1.3, -4.0] {
            for &l in &[0.0, 0.3, -0.6] {
                let m = cubic_coeff(SignPattern::Pmp, CubicKind::Delta0, l, xi, [xi, xi, xi]);
                let expected = 1.0 / (2.0 * std::f64::consts::PI);
                assert!(
                    (m - crate::Complex::new(expected, 0.0)).norm() < 1e-14,
                    "xi={xi}, l={l}: {m}"
                );
            }
        }
    }

    #[test]
    fn pmp_pv_vanishes_on_the_diagonal() {
        for &xi in &[0.0, 1.3, -4.0] {
            for &l in &[0.0, 0.3, -0.6] {
                let m = cubic_coeff(
                    SignPattern::Pmp,
                    CubicKind::PrincipalValue,
                    l,
                    xi,
                    [xi, xi, xi],
                );
                assert!(m.norm() < 1e-15, "xi={xi}, l={l}: {m}");
            }
        }
    }

    #[test]
    fn ppp_delta_coefficient_is_slot_symmetric() {
        let l = 0.3;
        let (xi, a, b, c) = (0.4, 0.9, -1.3, 2.2);
        let base = cubic_coeff(SignPattern::Ppp, CubicKind::Delta0, l, xi, [a, b, c]);
        for perm in [[a, c, b], [b, a, c], [c, b, a]] {
            let other = cubic_coeff(SignPattern::Ppp, CubicKind::Delta0, l, xi, perm);
            assert!((base - other).norm() < 1e-15);
        }
    }

    #[test]
    fn mollified_pairing_identity_pmp() {
        let test = GaussianTest {
            center: 0.5,
            width: 1.0,
        };
        let l = 0.3;
        let xi = 0.4;
        let direct = cubic_pairing_direct(SignPattern::Pmp, l, xi, test).unwrap();
        let recon = cubic_pairing_reconstructed(SignPattern::Pmp, l, xi, test);
        let rel = (direct - recon).norm() / direct.norm();
        assert!(rel < 1e-6, "direct {direct}, recon {recon}, rel {rel:.3e}");
    }

    #[test]
    fn mollified_pairing_identity_ppp() {
        let test = GaussianTest {
            center: -0.3,
            width: 0.8,
        };
        let l = 0.2;
        let xi = 0.9;
        let direct = cubic_pairing_direct(SignPattern::Ppp, l, xi, test).unwrap();
        let recon = cubic_pairing_reconstructed(SignPattern::Ppp, l, xi, test);
        let rel = (direct - recon).norm() / direct.norm();
        assert!(rel < 1e-6, "rel {rel:.3e}");
    }
}
