//! Discrete matrix operators 𝐋_ℓ and 𝐇_ℓ, Riesz projections onto the
//! discrete/essential spectrum, and the explicit resolvent kernel.

use crate::grid::{
    spectral_derivative, spectral_derivative_complex, ComplexField, ComplexPair, FieldPair, Grid,
    RealField,
};
use crate::kink::{j_inner, kernel_elements, KernelElements, KinkParams};
use crate::real::sech;
use crate::scattering::{jost, wronskian};
use crate::{Complex, Error, Result, Scalar};

/// −2 sech²(γy) sampled on the grid.
pub fn potential(grid: &Grid, ell: Scalar) -> RealField {
    let g = KinkParams::new(ell, 0.0).gamma();
    grid.sample(|y| -2.0 * sech(g * y).powi(2))
}

/// 𝐋_ℓ f = (ℓ∂f₁ + f₂, −L_ℓ f₁ + ℓ∂f₂) with L_ℓ = −∂² − 2sech²(γ·) + 1.
pub fn apply_l(f: &FieldPair, ell: Scalar) -> FieldPair {
    let v = potential(f.grid(), ell);
    let d1 = spectral_derivative(&f.first, 1).expect("finite field");
    let d2f1 = spectral_derivative(&f.first, 2).expect("finite field");
    let d1f2 = spectral_derivative(&f.second, 1).expect("finite field");
    let first = RealField::from_values(
        f.grid(),
        d1.values()
            .iter()
            .zip(f.second.values())
            .map(|(&df1, &f2)| ell * df1 + f2)
            .collect(),
    );
    let second = RealField::from_values(
        f.grid(),
        d2f1.values()
            .iter()
            .zip(v.values())
            .zip(f.first.values())
            .zip(d1f2.values())
            .map(|(((&dd, &pot), &f1), &df2)| dd - (pot + 1.0) * f1 + ell * df2)
            .collect(),
    );
    FieldPair::new(first, second)
}

/// 𝐇_ℓ f = (L_ℓ f₁ − ℓ∂f₂, ℓ∂f₁ + f₂); symmetric, and 𝐋 = J𝐇.
pub fn apply_h(f: &FieldPair, ell: Scalar) -> FieldPair {
    let v = potential(f.grid(), ell);
    let d1f1 = spectral_derivative(&f.first, 1).expect("finite field");
    let d2f1 = spectral_derivative(&f.first, 2).expect("finite field");
    let d1f2 = spectral_derivative(&f.second, 1).expect("finite field");
    let first = RealField::from_values(
        f.grid(),
        d2f1.values()
            .iter()
            .zip(v.values())
            .zip(f.first.values())
            .zip(d1f2.values())
            .map(|(((&dd, &pot), &f1), &df2)| -dd + (pot + 1.0) * f1 - ell * df2)
            .collect(),
    );
    let second = RealField::from_values(
        f.grid(),
        d1f1.values()
            .iter()
            .zip(f.second.values())
            .map(|(&df1, &f2)| ell * df1 + f2)
            .collect(),
    );
    FieldPair::new(first, second)
}

/// Complex-pair variant of [`apply_l`], used for the threshold resonances.
pub fn apply_l_complex(f: &ComplexPair, ell: Scalar) -> ComplexPair {
    let v = potential(f.grid(), ell);
    let d1 = spectral_derivative_complex(&f.first, 1).expect("finite field");
    let d2f1 = spectral_derivative_complex(&f.first, 2).expect("finite field");
    let d1f2 = spectral_derivative_complex(&f.second, 1).expect("finite field");
    let first = ComplexField::from_values(
        f.grid(),
        d1.values()
            .iter()
            .zip(f.second.values())
            .map(|(&df1, &f2)| ell * df1 + f2)
            .collect(),
    );
    let second = ComplexField::from_values(
        f.grid(),
        d2f1.values()
            .iter()
            .zip(v.values())
            .zip(f.first.values())
            .zip(d1f2.values())
            .map(|(((&dd, &pot), &f1), &df2)| dd - f1 * (pot + 1.0) + ell * df2)
            .collect(),
    );
    ComplexPair { first, second }
}

/// Coefficients of a state on the generalized kernel span {Y₀, Y₁}.
#[derive(Debug, Clone, Copy)]
pub struct DiscreteComponents {
    pub d0: Scalar,
    pub d1: Scalar,
}

/// Riesz projection split f = d₀Y₀ + d₁Y₁ + P_e f.
///
/// The coefficients come from the pairing with the adjoint kernel JY₀, JY₁:
/// d₀ = ⟨f, JY₁⟩/⟨Y₀, JY₁⟩ and d₁ = −⟨f, JY₀⟩/⟨Y₀, JY₁⟩.
pub fn riesz_projections(f: &FieldPair, ell: Scalar) -> (DiscreteComponents, FieldPair) {
    let ke = kernel_elements(f.grid(), KinkParams::new(ell, 0.0));
    riesz_projections_with(f, &ke)
}

/// Projection using precomputed kernel elements (hot paths reuse them).
pub fn riesz_projections_with(
    f: &FieldPair,
    ke: &KernelElements,
) -> (DiscreteComponents, FieldPair) {
    // ⟨φ, Jψ⟩ = ⟨Jψ opposite sign…⟩: with j_inner(a,b) = ⟨Ja, b⟩ we have
    // ⟨φ, Jψ⟩ = j_inner(ψ, φ).
    let denom = j_inner(&ke.y1, &ke.y0); // ⟨Y₀, JY₁⟩ = γ³‖K′‖²
    assert!(
        denom.abs() > 1e-8,
        "degenerate kernel pairing; grid too coarse"
    );
    let d0 = j_inner(&ke.y1, f) / denom;
    let d1 = -j_inner(&ke.y0, f) / denom;
    let pe = f.sub(&ke.y0.scaled(d0)).sub(&ke.y1.scaled(d1));
    (DiscreteComponents { d0, d1 }, pe)
}

/// Margin kept between the spectral parameter and {0} ∪ Σ_ℓ.
pub const RESOLVENT_MARGIN: Scalar = 0.05;

/// Apply the resolvent (𝐋_ℓ − iλ)^{−1} through the explicit kernel.
///
/// `lambda` is the real spectral parameter of 𝐑(λ) = (𝐋 − iλ)^{−1}; it must
/// keep [`RESOLVENT_MARGIN`] distance from the essential spectrum
/// (|λ| ≥ γ^{−1}) and from the generalized eigenvalue at 0. The output is
/// complex even for real input because of the iλ shift.
pub fn resolvent_apply(g: &FieldPair, lambda: Scalar, ell: Scalar) -> Result<ComplexPair> {
    let gamma = KinkParams::new(ell, 0.0).gamma();
    let edge_distance = (1.0 / gamma - lambda.abs()).abs();
    let zero_distance = lambda.abs();
    if lambda.abs() >= 1.0 / gamma - RESOLVENT_MARGIN {
        return Err(Error::NearSpectrum {
            lambda,
            distance: edge_distance,
            margin: RESOLVENT_MARGIN,
        });
    }
    if zero_distance < RESOLVENT_MARGIN {
        // pole of order two at λ = 0
        return Err(Error::NearSpectrum {
            lambda,
            distance: zero_distance,
            margin: RESOLVENT_MARGIN,
        });
    }

    let grid = g.grid();
    // w = (ℓ∂ − iλ) g₁ − g₂, complex-valued
    let dg1 = spectral_derivative(&g.first, 1)?;
    let w: Vec<Complex> = dg1
        .values()
        .iter()
        .zip(g.first.values())
        .zip(g.second.values())
        .map(|((&d1, &g1), &g2)| Complex::new(ell * d1 - g2, -lambda * g1))
        .collect();

    let v = scalar_resolvent_apply(grid, &w, lambda, ell)?;

    // (Rg)₁ = v, (Rg)₂ = g₁ − (ℓ∂ − iλ) v
    let vf = ComplexField::from_values(grid, v);
    let dv = spectral_derivative_complex(&vf, 1)?;
    let second: Vec<Complex> = dv
        .values()
        .iter()
        .zip(vf.values())
        .zip(g.first.values())
        .map(|((&dvj, &vj), &g1)| Complex::new(g1, 0.0) - ell * dvj + Complex::i() * lambda * vj)
        .collect();

    Ok(ComplexPair {
        first: vf,
        second: ComplexField::from_values(grid, second),
    })
}

/// Scalar resolvent R_ℓ(λ) applied to complex samples via the Green's
/// function built from Jost solutions: kernel
/// e^{−iγ²ℓλx} R̃(x,y) e^{iγ²ℓλy} with R̃ the two-sided Jost product.
fn scalar_resolvent_apply(
    grid: &Grid,
    w: &[Complex],
    lambda: Scalar,
    ell: Scalar,
) -> Result<Vec<Complex>> {
    let gamma = KinkParams::new(ell, 0.0).gamma();
    // ζ² = γ²λ² − 1 with ζ ∈ ℂ₊
    let zsq = gamma * gamma * lambda * lambda - 1.0;
    let zeta = Complex::new(zsq, 0.0).sqrt();
    let zeta = if zeta.im < 0.0 { -zeta } else { zeta };
    let wr = wronskian(zeta) * gamma; // W(f₊(γ·), f₋(γ·)) = γ·W(f₊, f₋)
    let pref = gamma * gamma / wr;

    let n = grid.len();
    let h = grid.spacing();
    let nodes = grid.nodes();
    let fp: Vec<Complex> = nodes.iter().map(|&x| jost(1, gamma * x, zeta)).collect();
    let fm: Vec<Complex> = nodes.iter().map(|&x| jost(-1, gamma * x, zeta)).collect();
    // conjugation phases e^{∓iγ²ℓλ·}
    let phase: Vec<Complex> = nodes
        .iter()
        .map(|&x| Complex::from_polar(1.0, -gamma * gamma * ell * lambda * x))
        .collect();

    // integrands for the cumulative pieces
    let im: Vec<Complex> = (0..n).map(|j| fm[j] * w[j] / phase[j]).collect();
    let ip: Vec<Complex> = (0..n).map(|j| fp[j] * w[j] / phase[j]).collect();

    let left = cumulative_from_left(&im, h);
    let right = cumulative_from_right(&ip, h);

    Ok((0..n)
        .map(|j| phase[j] * pref * (fp[j] * left[j] + fm[j] * right[j]))
        .collect())
}

/// Cumulative integral I_j = ∫_{x_0}^{x_j} F dy with 4th-order increments.
fn cumulative_from_left(f: &[Complex], h: Scalar) -> Vec<Complex> {
    let n = f.len();
    let mut out = vec![Complex::new(0.0, 0.0); n];
    for j in 0..n - 1 {
        let inc = if j == 0 {
            // cubic through the first four samples
            h / 24.0 * (f[0] * 9.0 + f[1] * 19.0 - f[2] * 5.0 + f[3])
        } else if j == n - 2 {
            h / 24.0 * (f[n - 1] * 9.0 + f[n - 2] * 19.0 - f[n - 3] * 5.0 + f[n - 4])
        } else {
            h / 24.0 * (-f[j - 1] + f[j] * 13.0 + f[j + 1] * 13.0 - f[j + 2])
        };
        out[j + 1] = out[j] + inc;
    }
    out
}

/// Cumulative integral I_j = ∫_{x_j}^{x_{N−1}} F dy (same increments, reversed).
fn cumulative_from_right(f: &[Complex], h: Scalar) -> Vec<Complex> {
    let rev: Vec<Complex> = f.iter().rev().copied().collect();
    let mut acc = cumulative_from_left(&rev, h);
    acc.reverse();
    acc
}

/// Smallest Rayleigh quotient ⟨𝐇u, u⟩ / ‖u‖²_{H¹×L²} over random smooth
/// fields orthogonal to JY₁ (the direction that controls coercivity).
pub fn measured_coercivity(
    grid: &Grid,
    ell: Scalar,
    samples: usize,
    rng: &mut impl rand::Rng,
) -> Scalar {
    let ke = kernel_elements(grid, KinkParams::new(ell, 0.0));
    let jy1 = ke.y1.apply_j();
    let jy1_norm2 = crate::kink::pair_inner(&jy1, &jy1);
    let mut worst = Scalar::INFINITY;
    for _ in 0..samples {
        let mut u = random_smooth_pair(grid, rng);
        // enforce ⟨JY₁, u⟩ = 0
        let c = crate::kink::pair_inner(&jy1, &u) / jy1_norm2;
        u = u.sub(&jy1.scaled(c));
        let num = crate::kink::pair_inner(&apply_h(&u, ell), &u);
        let den = u.h1l2_norm().powi(2);
        if den > 1e-12 {
            worst = worst.min(num / den);
        }
    }
    worst
}

/// Smooth random field: few low-frequency modes under a Gaussian envelope.
pub fn random_smooth_field(grid: &Grid, rng: &mut impl rand::Rng) -> RealField {
    let modes = 8;
    let len = grid.length();
    let coef: Vec<(Scalar, Scalar, Scalar)> = (0..modes)
        .map(|m| {
            (
                rng.gen_range(-1.0..1.0),
                rng.gen_range(0.0..2.0 * Scalar::PI()),
                2.0 * Scalar::PI() * (m as Scalar + 1.0) / (0.25 * len),
            )
        })
        .collect();
    grid.sample(move |x| {
        let env = (-x * x / 36.0).exp();
        env * coef
            .iter()
            .map(|&(a, ph, k)| a * (k * x + ph).cos())
            .sum::<Scalar>()
    })
}

use num_traits::FloatConst;

/// Random smooth pair for property tests.
pub fn random_smooth_pair(grid: &Grid, rng: &mut impl rand::Rng) -> FieldPair {
    FieldPair::new(random_smooth_field(grid, rng), random_smooth_field(grid, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use crate::scattering::jost_deriv;

    fn grid() -> Grid {
        Grid::new(80.0, 2048)
    }

    #[test]
    fn kernel_identities() {
        let gr = grid();
        for &l in &[0.0, 0.3] {
            let ke = kernel_elements(&gr, KinkParams::new(l, 0.0));
            let ly0 = apply_l(&ke.y0, l);
            assert!(ly0.first.l2_norm().hypot(ly0.second.l2_norm()) < 1e-8, "LY0");
            let ly1 = apply_l(&ke.y1, l);
            let res = ly1.sub(&ke.y0);
            assert!(res.first.l2_norm().hypot(res.second.l2_norm()) < 1e-8, "LY1=Y0");
        }
    }

    #[test]
    fn l_is_j_h() {
        let gr = grid();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let f = random_smooth_pair(&gr, &mut rng);
        let lf = apply_l(&f, 0.4);
        let jhf = apply_h(&f, 0.4).apply_j();
        assert!(lf.sub(&jhf).sup_norm() < 1e-10);
    }

    #[test]
    fn h_is_symmetric() {
        let gr = grid();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let f = random_smooth_pair(&gr, &mut rng);
        let g = random_smooth_pair(&gr, &mut rng);
        let a = crate::kink::pair_inner(&apply_h(&f, 0.3), &g);
        let b = crate::kink::pair_inner(&f, &apply_h(&g, 0.3));
        assert!((a - b).abs() < 1e-10, "symmetry defect {}", (a - b).abs());
    }

    #[test]
    fn resonance_eigenrelation_interior() {
        // (𝐋 ∓ iγ^{−1}) Φ± ≈ 0 in the interior. Φ± do not decay, so the
        // periodic wrap is removed by a smooth cutoff before the FFTs; the
        // commutator terms live only where the cutoff varies, outside the
        // interior window used for the residual.
        let gr = Grid::new(80.0, 2048);
        let p = KinkParams::new(0.3, 0.0);
        let res = crate::kink::threshold_resonances(&gr, p);
        let g = p.gamma();
        let l = gr.length();
        // C^inf transition: anything less regular rings under the FFT
        let chi = |x: Scalar| -> Scalar {
            let a = 0.35 * l;
            let b = 0.45 * l;
            let ax = x.abs();
            if ax <= a {
                1.0
            } else if ax >= b {
                0.0
            } else {
                let t = (ax - a) / (b - a);
                let e1 = (-1.0 / t).exp();
                let e2 = (-1.0 / (1.0 - t)).exp();
                e2 / (e1 + e2)
            }
        };
        let windowed = ComplexPair {
            first: ComplexField::from_values(
                &gr,
                gr.nodes()
                    .iter()
                    .zip(res.plus.first.values())
                    .map(|(&x, &v)| v * chi(x))
                    .collect(),
            ),
            second: ComplexField::from_values(
                &gr,
                gr.nodes()
                    .iter()
                    .zip(res.plus.second.values())
                    .map(|(&x, &v)| v * chi(x))
                    .collect(),
            ),
        };
        let l_phi = apply_l_complex(&windowed, p.ell);
        let mut worst: Scalar = 0.0;
        for (j, &x) in gr.nodes().iter().enumerate() {
            if x.abs() > 0.3 * l {
                continue;
            }
            let expected = Complex::new(0.0, 1.0 / g) * res.plus.first.values()[j];
            worst = worst.max((l_phi.first.values()[j] - expected).norm());
            let expected2 = Complex::new(0.0, 1.0 / g) * res.plus.second.values()[j];
            worst = worst.max((l_phi.second.values()[j] - expected2).norm());
        }
        assert!(worst < 1e-6, "interior residual {worst:.3e}");
    }

    #[test]
    fn projection_reproduces_kernel_coordinates() {
        let gr = grid();
        let ke = kernel_elements(&gr, KinkParams::new(0.25, 0.0));
        let (c0, _) = riesz_projections(&ke.y0, 0.25);
        assert!((c0.d0 - 1.0).abs() < 1e-10 && c0.d1.abs() < 1e-10);
        let (c1, _) = riesz_projections(&ke.y1, 0.25);
        assert!(c1.d0.abs() < 1e-10 && (c1.d1 - 1.0).abs() < 1e-10);
    }

    #[test]
    fn essential_part_is_j_orthogonal_and_projection_idempotent() {
        let gr = grid();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let ke = kernel_elements(&gr, KinkParams::new(0.3, 0.0));
        for _ in 0..20 {
            let f = random_smooth_pair(&gr, &mut rng);
            let (_, pe) = riesz_projections_with(&f, &ke);
            assert!(j_inner(&ke.y0, &pe).abs() < 1e-10);
            assert!(j_inner(&ke.y1, &pe).abs() < 1e-10);
            let (c2, pe2) = riesz_projections_with(&pe, &ke);
            assert!(c2.d0.abs() < 1e-10 && c2.d1.abs() < 1e-10);
            assert!(pe2.sub(&pe).sup_norm() < 1e-10);
        }
    }

    #[test]
    fn resolvent_identity_in_the_gap() {
        let gr = Grid::new(60.0, 4096);
        let ell = 0.3;
        let lambda = 0.4;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let g = random_smooth_pair(&gr, &mut rng);
        let v = resolvent_apply(&g, lambda, ell).unwrap();
        // residual of (𝐋 − iλ) v = g in relative L²
        let lv = apply_l_complex(&v, ell);
        let h = gr.spacing();
        let mut num = 0.0;
        let mut den = 0.0;
        for j in 0..gr.len() {
            let r1 = lv.first.values()[j] - Complex::i() * lambda * v.first.values()[j]
                - g.first.values()[j];
            let r2 = lv.second.values()[j] - Complex::i() * lambda * v.second.values()[j]
                - g.second.values()[j];
            num += h * (r1.norm_sqr() + r2.norm_sqr());
            den += h * (g.first.values()[j].powi(2) + g.second.values()[j].powi(2));
        }
        let rel = (num / den).sqrt();
        assert!(rel < 1e-6, "relative residual {rel:.3e}");
    }

    #[test]
    fn resolvent_refuses_near_zero_and_near_edge() {
        let gr = Grid::new(40.0, 256);
        let g = FieldPair::zeros(&gr);
        assert!(matches!(
            resolvent_apply(&g, 0.01, 0.3),
            Err(Error::NearSpectrum { .. })
        ));
        let gamma_inv = (1.0f64 - 0.09).sqrt();
        assert!(matches!(
            resolvent_apply(&g, gamma_inv - 0.01, 0.3),
            Err(Error::NearSpectrum { .. })
        ));
    }

    #[test]
    fn wronskian_rescaled_under_argument_scaling() {
        // W(f₊(γ·,σ), f₋(γ·,σ)) = γ(−2iσ)/T(σ) at σ = 1, ℓ = 0.3
        let ell: f64 = 0.3;
        let gamma = 1.0 / (1.0 - ell * ell).sqrt();
        let sigma = Complex::new(1.0, 0.0);
        let x = 0.83;
        let direct = jost(1, gamma * x, sigma)
            * jost_deriv(-1, gamma * x, sigma).scale(gamma)
            - jost_deriv(1, gamma * x, sigma).scale(gamma) * jost(-1, gamma * x, sigma);
        let expected = wronskian(sigma).scale(gamma);
        assert!((direct - expected).norm() < 1e-10);
    }

    #[test]
    fn empirical_coercivity_constant() {
        let gr = grid();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for &l in &[0.0, 0.4] {
            let gamma = KinkParams::new(l, 0.0).gamma();
            let mu = measured_coercivity(&gr, l, 200, &mut rng);
            assert!(
                mu >= 0.1 / (gamma * gamma),
                "l={l}: measured μγ² = {}",
                mu * gamma * gamma
            );
        }
    }
}
