//! Post-processing: the effective profile g^#(t,ξ) of the radiation, the
//! asymptotic-state reconstruction, power-law fits for decay and
//! modulation convergence, and the (Λ, θ) phase diagnostics that expose the
//! logarithmic phase correction at desk scale.

use crate::dft::{DistortedBasis, SpectralFunction};
use crate::grid::{FieldPair, Grid, RealField};
use crate::kink::{kernel_elements, KinkParams};
use crate::operators::riesz_projections_with;
use crate::real::japanese;
use crate::solver::RunRecord;
use crate::{Complex, Scalar};
use num_traits::FloatConst;

/// g^#(t,ξ) per snapshot: the distorted transform of the P_e-projected
/// radiation with the free phase e^{it(⟨ξ⟩+ℓ̄ξ)} removed.
pub struct EffectiveProfileSeries {
    pub ell_bar: Scalar,
    pub times: Vec<Scalar>,
    pub profiles: Vec<SpectralFunction>,
}

/// Compute the effective profile series from moving-frame snapshots
/// (t, u(t)) relative to the reference boost `ell_bar`.
pub fn effective_profile(
    grid: &Grid,
    snapshots: &[(Scalar, FieldPair)],
    ell_bar: Scalar,
) -> EffectiveProfileSeries {
    let basis = DistortedBasis::new(grid, ell_bar);
    let ke = kernel_elements(grid, KinkParams::new(ell_bar, 0.0));
    let mut times = Vec::with_capacity(snapshots.len());
    let mut profiles = Vec::with_capacity(snapshots.len());
    for (t, u) in snapshots {
        let (_, pe) = riesz_projections_with(u, &ke);
        let transformed = basis.vector_transform(&pe);
        let g = basis.propagator_multiplier(&transformed, -t);
        times.push(*t);
        profiles.push(g);
    }
    EffectiveProfileSeries {
        ell_bar,
        times,
        profiles,
    }
}

impl EffectiveProfileSeries {
    /// sup over the lattice of |⟨ξ⟩^{3/2} g^#(t_i, ξ)| restricted to a band.
    pub fn weighted_sup(&self, i: usize, band: impl Fn(Scalar) -> bool) -> Scalar {
        let g = &self.profiles[i];
        g.freqs()
            .iter()
            .zip(g.values())
            .filter(|(&xi, _)| band(xi))
            .map(|(&xi, v)| japanese(xi).powf(1.5) * v.norm())
            .fold(0.0, Scalar::max)
    }
}

/// Mid-frequency band |ξ + γ̄ℓ̄| ∈ [0.3, 3]: excises the resonant frequency
/// and the noisy high-frequency tail from sup-norms.
pub fn mid_band(ell_bar: Scalar) -> impl Fn(Scalar) -> bool + Copy {
    let gamma = KinkParams::new(ell_bar, 0.0).gamma();
    move |xi: Scalar| {
        let d = (xi + gamma * ell_bar).abs();
        (0.3..=3.0).contains(&d)
    }
}

/// Power-law fit a·t^p over a window: least-squares slope of log a vs log t.
#[derive(Debug, Clone, Copy)]
pub struct PowerLawFit {
    pub exponent: Scalar,
    pub stderr: Scalar,
    pub points: usize,
}

/// Fit the exponent of a positive series on [t0, t1]; the window should span
/// at least half a decade (t1/t0 ≥ 5) for the slope to mean anything.
pub fn fit_decay(series: &[(Scalar, Scalar)], window: (Scalar, Scalar)) -> PowerLawFit {
    let pts: Vec<(Scalar, Scalar)> = series
        .iter()
        .filter(|(t, v)| *t >= window.0 && *t <= window.1 && *v > 0.0)
        .map(|&(t, v)| (t.ln(), v.ln()))
        .collect();
    let n = pts.len();
    assert!(n >= 3, "need at least 3 samples in the fit window");
    let xm = pts.iter().map(|p| p.0).sum::<Scalar>() / n as Scalar;
    let ym = pts.iter().map(|p| p.1).sum::<Scalar>() / n as Scalar;
    let sxx = pts.iter().map(|p| (p.0 - xm).powi(2)).sum::<Scalar>();
    let sxy = pts
        .iter()
        .map(|p| (p.0 - xm) * (p.1 - ym))
        .sum::<Scalar>();
    let slope = sxy / sxx;
    let ss_res: Scalar = pts
        .iter()
        .map(|p| (p.1 - ym - slope * (p.0 - xm)).powi(2))
        .sum();
    let stderr = if n > 2 {
        (ss_res / (n as Scalar - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    PowerLawFit {
        exponent: slope,
        stderr,
        points: n,
    }
}

/// Exponents of |ℓ(t) − ℓ(T)| and |q̇(t) − ℓ(t)| from a co-evolved record.
pub fn fit_modulation_convergence(
    record: &RunRecord,
    window: (Scalar, Scalar),
) -> (Option<PowerLawFit>, PowerLawFit) {
    let ell_final = record
        .samples
        .last()
        .and_then(|s| s.ell)
        .expect("modulation data attached");
    let ell_series: Vec<(Scalar, Scalar)> = record
        .samples
        .iter()
        .filter_map(|s| s.ell.map(|l| (s.t, (l - ell_final).abs())))
        .collect();
    let qdot_series: Vec<(Scalar, Scalar)> = record
        .samples
        .iter()
        .filter_map(|s| match (s.q_dot, s.ell) {
            (Some(qd), Some(l)) => Some((s.t, (qd - l).abs())),
            _ => None,
        })
        .collect();
    // ℓ(t) − ℓ(T) may cross zero inside the window; fit only if it stays away
    let ell_fit = if ell_series
        .iter()
        .filter(|(t, _)| *t >= window.0 && *t <= window.1)
        .all(|(_, v)| *v > 1e-14)
    {
        Some(fit_decay(&ell_series, window))
    } else {
        None
    };
    (ell_fit, fit_decay(&qdot_series, window))
}

/// Λ(t,ξ) and θ(t) phase diagnostics for an effective-profile series.
pub struct PhaseDiagnostics {
    pub times: Vec<Scalar>,
    /// Λ(t_i, ξ_k), accumulated by the trapezoid rule in log-time from the
    /// first sample at t ≥ 1.
    pub lambda: Vec<Vec<Scalar>>,
    /// θ(t_i) = q(t_i) − q(0) − ℓ̄ t_i from the modulation series.
    pub theta: Vec<Scalar>,
}

/// Accumulate Λ(t,ξ) = (1/16)∫ s^{−1}|g^#(s,ξ)|² ds and pair it with θ.
pub fn phase_diagnostics(
    series: &EffectiveProfileSeries,
    theta: &[Scalar],
) -> PhaseDiagnostics {
    assert_eq!(series.times.len(), theta.len());
    let n_xi = series.profiles[0].values().len();
    let mut lambda = vec![vec![0.0; n_xi]; series.times.len()];
    for i in 1..series.times.len() {
        let (t0, t1) = (series.times[i - 1], series.times[i]);
        if t1 <= 1.0 {
            continue;
        }
        let lo = t0.max(1.0);
        let dlog = (t1 / lo).ln();
        for k in 0..n_xi {
            let a = series.profiles[i - 1].values()[k].norm_sqr();
            let b = series.profiles[i].values()[k].norm_sqr();
            lambda[i][k] = lambda[i - 1][k] + 0.0625 * 0.5 * (a + b) * dlog;
        }
    }
    PhaseDiagnostics {
        times: series.times.clone(),
        lambda,
        theta: theta.to_vec(),
    }
}

/// Dyadic drift comparison between the raw and the (Λ, θ)-corrected profile.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DriftReport {
    pub pairs: Vec<(Scalar, Scalar)>,
    pub uncorrected: Vec<Scalar>,
    pub corrected: Vec<Scalar>,
    pub max_uncorrected: Scalar,
    pub max_corrected: Scalar,
    /// max_uncorrected / max_corrected
    pub improvement: Scalar,
}

/// sup over the band of |⟨ξ⟩^{3/2}(P(t₂,ξ) − P(t₁,ξ))| over dyadic pairs,
/// where P is g^# either raw or phase-corrected by e^{+iΛ}e^{−iξθ}.
///
/// The measured secular rotation of g^# is e^{−iΛ(t)} (clockwise): probing
/// arg g^#(t₂,ξ)/g^#(t₁,ξ) against the accumulated Λ reproduces the 1/16
/// coefficient to well under a percent at band center, with the opposite
/// orientation to the sign usually quoted alongside this correction. That is
/// the same orientation flip the quadrature oracle finds in the printed
/// p.v. coefficients of the cubic distribution table that generate this
/// phase. The correction below undoes the rotation that is actually there.
pub fn dyadic_drift(
    series: &EffectiveProfileSeries,
    diags: &PhaseDiagnostics,
    window: (Scalar, Scalar),
    band: impl Fn(Scalar) -> bool + Copy,
) -> DriftReport {
    let idx_of = |t: Scalar| -> Option<usize> {
        series
            .times
            .iter()
            .enumerate()
            .min_by(|a, b| {
                (a.1 - t).abs().partial_cmp(&(b.1 - t).abs()).unwrap()
            })
            .filter(|(_, &ti)| (ti - t).abs() < 0.51 * t.max(1.0) * 0.1 + 1.0)
            .map(|(i, _)| i)
    };
    let freqs: Vec<Scalar> = series.profiles[0].freqs().to_vec();
    let mut pairs = Vec::new();
    let mut unc = Vec::new();
    let mut cor = Vec::new();
    let mut t1 = window.0;
    while 2.0 * t1 <= window.1 * 1.0001 {
        let (i1, i2) = match (idx_of(t1), idx_of(2.0 * t1)) {
            (Some(a), Some(b)) if a != b => (a, b),
            _ => {
                t1 *= 2.0;
                continue;
            }
        };
        let mut d_raw: Scalar = 0.0;
        let mut d_cor: Scalar = 0.0;
        for (k, &xi) in freqs.iter().enumerate() {
            if !band(xi) {
                continue;
            }
            let w = japanese(xi).powf(1.5);
            let g1 = series.profiles[i1].values()[k];
            let g2 = series.profiles[i2].values()[k];
            d_raw = d_raw.max(w * (g2 - g1).norm());
            let c1 = Complex::from_polar(1.0, diags.lambda[i1][k] - xi * diags.theta[i1]) * g1;
            let c2 = Complex::from_polar(1.0, diags.lambda[i2][k] - xi * diags.theta[i2]) * g2;
            d_cor = d_cor.max(w * (c2 - c1).norm());
        }
        pairs.push((series.times[i1], series.times[i2]));
        unc.push(d_raw);
        cor.push(d_cor);
        t1 *= 2.0;
    }
    let max_u = unc.iter().fold(0.0_f64, |a, &b| a.max(b));
    let max_c = cor.iter().fold(0.0_f64, |a, &b| a.max(b));
    DriftReport {
        pairs,
        uncorrected: unc,
        corrected: cor,
        max_uncorrected: max_u,
        max_corrected: max_c,
        improvement: if max_c > 0.0 { max_u / max_c } else { Scalar::INFINITY },
    }
}

/// Data of the long-time asymptotic state.
pub struct AsymptoticProfile {
    pub ell_inf: Scalar,
    pub q0: Scalar,
    /// Limiting amplitude on the frequency lattice.
    pub g_inf: SpectralFunction,
}

impl AsymptoticProfile {
    /// Γ∞(ξ) = (1/16)⟨ξ⟩^{−3}|g∞(ξ)|².
    pub fn gamma_inf(&self, xi: Scalar) -> Scalar {
        0.0625 * japanese(xi).powi(-3) * self.g_inf.at(xi).norm_sqr()
    }

    /// m∞,₁(t, x, ξ*): the basis-shaped amplitude of the asymptotic wave.
    pub fn m_inf_1(&self, t: Scalar, x: Scalar, theta_inf: Scalar) -> Complex {
        let center = self.q0 + theta_inf;
        let rho2 = t * t - (x - center) * (x - center);
        if rho2 <= 0.0 {
            return Complex::new(0.0, 0.0);
        }
        let rho = rho2.sqrt();
        let xi_star = -(x - center) / rho;
        let gamma_inf = KinkParams::new(self.ell_inf, 0.0).gamma();
        let eta = gamma_inf * (xi_star + self.ell_inf * japanese(xi_star));
        let tanh_arg = gamma_inf * (x - self.ell_inf * t - center);
        Complex::new(eta, tanh_arg.tanh()) / Complex::new(eta.abs(), -1.0) / japanese(xi_star)
    }

    /// u∞(t, x) on a grid; zero outside the light cone by the indicator.
    pub fn build(&self, grid: &Grid, t: Scalar, theta_inf: Scalar) -> FieldPair {
        assert!(t >= 1.0, "asymptotic state defined for t >= 1");
        let center = self.q0 + theta_inf;
        let n = grid.len();
        let mut first = vec![0.0; n];
        let mut second = vec![0.0; n];
        let quarter_pi = Scalar::PI() / 4.0;
        let h = grid.spacing();
        for (j, &x) in grid.nodes().iter().enumerate() {
            let d = x - center;
            if d.abs() >= t {
                continue;
            }
            let rho = (t * t - d * d).sqrt();
            let xi_star = -d / rho;
            let g = self.g_inf.at(xi_star);
            let gamma = self.gamma_inf(xi_star);
            let phase = Complex::from_polar(
                1.0,
                quarter_pi + rho + gamma * t.ln() + xi_star * theta_inf,
            );
            let m1 = self.m_inf_1(t, x, theta_inf);
            // m∞,₂ = i⟨ξ*⟩m∞,₁ − ℓ∞ ∂ₓm∞,₁, the derivative by centered
            // differences at the grid scale (post-processing accuracy)
            let dm1 = if d.abs() + 2.0 * h < t {
                (self.m_inf_1(t, x + h, theta_inf) - self.m_inf_1(t, x - h, theta_inf))
                    / (2.0 * h)
            } else {
                Complex::new(0.0, 0.0)
            };
            let m2 = Complex::i() * japanese(xi_star) * m1 - self.ell_inf * dm1;
            let amp = phase * g / t.sqrt();
            first[j] = (amp * m1).im;
            second[j] = (amp * m2).im;
        }
        FieldPair::new(
            RealField::from_values(grid, first),
            RealField::from_values(grid, second),
        )
    }
}
