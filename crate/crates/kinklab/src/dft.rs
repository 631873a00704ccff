//! Modified distorted Fourier basis e_ℓ^#, the scalar transforms F_ℓ^# and
//! F_{ℓ,D}^#, their adjoints, the vectorial transform T_ℓ, inversion on both
//! sides, the Plancherel pairing, and the propagator multiplier.
//!
//! The basis tensorizes as e_ℓ^#(y,ξ) = (a(ξ) + b(ξ)·tanh(γy)) e^{iyξ}/√(2π),
//! so every transform is two weighted FFTs; adjoints use the mirrored
//! formula. The frequency lattice is the grid's DFT lattice ξ_k = 2πk/L.

use crate::grid::{fft_forward, fft_inverse, spectral_derivative, FieldPair, Grid, RealField};
use crate::kink::KinkParams;
use crate::operators::apply_h;
use crate::real::{japanese, sech};
use crate::{Complex, Scalar};
use num_traits::FloatConst;

/// Complex samples on the dual (frequency) lattice, DFT ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralFunction {
    grid: Grid,
    values: Vec<Complex>,
}

impl SpectralFunction {
    pub fn from_values(grid: &Grid, values: Vec<Complex>) -> Self {
        assert_eq!(values.len(), grid.len());
        SpectralFunction {
            grid: grid.clone(),
            values,
        }
    }
    pub fn zeros(grid: &Grid) -> Self {
        SpectralFunction {
            grid: grid.clone(),
            values: vec![Complex::new(0.0, 0.0); grid.len()],
        }
    }
    pub fn grid(&self) -> &Grid {
        &self.grid
    }
    /// Frequencies ξ_k, same ordering as `values`.
    pub fn freqs(&self) -> &[Scalar] {
        self.grid.freqs()
    }
    pub fn values(&self) -> &[Complex] {
        &self.values
    }
    pub fn values_mut(&mut self) -> &mut [Complex] {
        &mut self.values
    }
    pub fn sup_norm(&self) -> Scalar {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }
    /// Value at the lattice point closest to `xi`.
    pub fn at(&self, xi: Scalar) -> Complex {
        let mut best = 0;
        let mut dist = Scalar::INFINITY;
        for (k, &f) in self.freqs().iter().enumerate() {
            if (f - xi).abs() < dist {
                dist = (f - xi).abs();
                best = k;
            }
        }
        self.values[best]
    }
    /// L²(dξ) norm on the lattice.
    pub fn l2_norm(&self) -> Scalar {
        let dxi = 2.0 * Scalar::PI() / self.grid.length();
        (dxi * self.values.iter().map(|v| v.norm_sqr()).sum::<Scalar>()).sqrt()
    }
    pub fn sub(&self, other: &SpectralFunction) -> SpectralFunction {
        assert_eq!(self.grid, other.grid);
        SpectralFunction {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
    /// Entries sorted by increasing ξ (for emission).
    pub fn sorted(&self) -> Vec<(Scalar, Complex)> {
        let mut rows: Vec<(Scalar, Complex)> = self
            .freqs()
            .iter()
            .copied()
            .zip(self.values.iter().copied())
            .collect();
        rows.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        rows
    }
}

/// Distorted basis data for one boost: the ξ-dependent weights of the
/// tensorized form and the tanh/sech profiles on the grid.
pub struct DistortedBasis {
    pub ell: Scalar,
    pub gamma: Scalar,
    grid: Grid,
    /// a(ξ_k) = η/(|η| − i)
    wa: Vec<Complex>,
    /// b(ξ_k) = i/(|η| − i)
    wb: Vec<Complex>,
    /// c(ξ_k) = 1/(|η| − i) (adjoint-D correction weight)
    wc: Vec<Complex>,
    /// ⟨ξ_k⟩
    jap: Vec<Scalar>,
    /// ⟨ξ_k⟩ + ℓξ_k (the propagator symbol)
    symbol: Vec<Scalar>,
    tanh_gy: Vec<Scalar>,
    sech2_gy: Vec<Scalar>,
}

/// η(ξ) = γ(ξ + ℓ⟨ξ⟩); vanishes exactly at ξ = −γℓ.
pub fn eta(ell: Scalar, xi: Scalar) -> Scalar {
    let g = KinkParams::new(ell, 0.0).gamma();
    g * (xi + ell * japanese(xi))
}

impl DistortedBasis {
    pub fn new(grid: &Grid, ell: Scalar) -> Self {
        let gamma = KinkParams::new(ell, 0.0).gamma();
        let mut wa = Vec::with_capacity(grid.len());
        let mut wb = Vec::with_capacity(grid.len());
        let mut wc = Vec::with_capacity(grid.len());
        let mut jap_v = Vec::with_capacity(grid.len());
        let mut symbol = Vec::with_capacity(grid.len());
        for &xi in grid.freqs() {
            let e = eta(ell, xi);
            let den = Complex::new(e.abs(), -1.0);
            wa.push(Complex::new(e, 0.0) / den);
            wb.push(Complex::i() / den);
            wc.push(Complex::new(1.0, 0.0) / den);
            jap_v.push(japanese(xi));
            symbol.push(japanese(xi) + ell * xi);
        }
        let tanh_gy = grid.nodes().iter().map(|&y| (gamma * y).tanh()).collect();
        let sech2_gy = grid.nodes().iter().map(|&y| sech(gamma * y).powi(2)).collect();
        DistortedBasis {
            ell,
            gamma,
            grid: grid.clone(),
            wa,
            wb,
            wc,
            jap: jap_v,
            symbol,
            tanh_gy,
            sech2_gy,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// ⟨ξ⟩ + ℓξ on the lattice.
    pub fn symbol(&self) -> &[Scalar] {
        &self.symbol
    }

    /// Pointwise basis element e_ℓ^#(y, ξ) (reference evaluator; transforms
    /// use the tensorized path instead).
    pub fn eval(&self, y: Scalar, xi: Scalar) -> Complex {
        let e = eta(self.ell, xi);
        let m = Complex::new(e, (self.gamma * y).tanh()) / Complex::new(e.abs(), -1.0);
        m * Complex::from_polar(1.0, y * xi) / (2.0 * Scalar::PI()).sqrt()
    }

    /// Continuum Fourier quadrature ∫ e^{−iyξ_k} g(y) dy for real samples.
    fn osc_integrals(&self, g: &[Scalar]) -> Vec<Complex> {
        let n = self.grid.len();
        let h = self.grid.spacing();
        let mut buf: Vec<Complex> = g.iter().map(|&v| Complex::new(v, 0.0)).collect();
        fft_forward(&mut buf);
        (0..n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                buf[k] * h * sign
            })
            .collect()
    }

    /// F_ℓ^#[g](ξ) = ∫ conj(e_ℓ^#(y,ξ)) g(y) dy by two weighted FFTs.
    pub fn forward(&self, g: &RealField) -> SpectralFunction {
        assert_eq!(g.grid(), &self.grid);
        let plain = self.osc_integrals(g.values());
        let weighted: Vec<Scalar> = g
            .values()
            .iter()
            .zip(&self.tanh_gy)
            .map(|(&v, &t)| v * t)
            .collect();
        let tanh_part = self.osc_integrals(&weighted);
        let norm = 1.0 / (2.0 * Scalar::PI()).sqrt();
        let values = (0..self.grid.len())
            .map(|k| norm * (self.wa[k].conj() * plain[k] + self.wb[k].conj() * tanh_part[k]))
            .collect();
        SpectralFunction::from_values(&self.grid, values)
    }

    /// [`Self::forward`] for complex samples (used by the normal-form
    /// coefficient integrals whose in-profiles carry an intrinsic phase).
    pub fn forward_complex(&self, g: &crate::grid::ComplexField) -> SpectralFunction {
        assert_eq!(g.grid(), &self.grid);
        let n = self.grid.len();
        let h = self.grid.spacing();
        let osc = |data: Vec<Complex>| -> Vec<Complex> {
            let mut buf = data;
            fft_forward(&mut buf);
            (0..n)
                .map(|k| {
                    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                    buf[k] * h * sign
                })
                .collect()
        };
        let plain = osc(g.values().to_vec());
        let tanh_part = osc(
            g.values()
                .iter()
                .zip(&self.tanh_gy)
                .map(|(&v, &t)| v * t)
                .collect(),
        );
        let norm = 1.0 / (2.0 * Scalar::PI()).sqrt();
        let values = (0..n)
            .map(|k| norm * (self.wa[k].conj() * plain[k] + self.wb[k].conj() * tanh_part[k]))
            .collect();
        SpectralFunction::from_values(&self.grid, values)
    }

    /// F_{ℓ,D}^#[g] with D = ℓ∂_y − i(⟨ξ⟩ + ℓξ): the derivative routes through
    /// one spectral differentiation, the multiplier is applied per ξ.
    pub fn forward_d(&self, g: &RealField) -> SpectralFunction {
        let dg = spectral_derivative(g, 1).expect("finite field");
        let f_dg = self.forward(&dg);
        let f_g = self.forward(g);
        let values = (0..self.grid.len())
            .map(|k| {
                self.ell * f_dg.values()[k]
                    - Complex::i() * self.symbol[k] * f_g.values()[k]
            })
            .collect();
        SpectralFunction::from_values(&self.grid, values)
    }

    /// Inverse-direction quadrature Σ_k e^{+iy_jξ_k} F_k Δξ for all j.
    fn osc_integrals_inverse(&self, f: &[Complex]) -> Vec<Complex> {
        let n = self.grid.len();
        let dxi = 2.0 * Scalar::PI() / self.grid.length();
        let mut buf: Vec<Complex> = (0..n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                f[k] * sign
            })
            .collect();
        fft_inverse(&mut buf);
        buf.iter().map(|&z| z * dxi * n as Scalar).collect()
    }

    /// Adjoint F_ℓ^{#,∗}[h](y) = ∫ e_ℓ^#(y,ξ) h(ξ) dξ.
    pub fn adjoint(&self, h: &SpectralFunction) -> Vec<Complex> {
        let n = self.grid.len();
        let a_h: Vec<Complex> = (0..n).map(|k| self.wa[k] * h.values()[k]).collect();
        let b_h: Vec<Complex> = (0..n).map(|k| self.wb[k] * h.values()[k]).collect();
        let ia = self.osc_integrals_inverse(&a_h);
        let ib = self.osc_integrals_inverse(&b_h);
        let norm = 1.0 / (2.0 * Scalar::PI()).sqrt();
        (0..n)
            .map(|j| norm * (ia[j] + self.tanh_gy[j] * ib[j]))
            .collect()
    }

    /// Adjoint F_{ℓ,D}^{#,∗}[h](y) = ∫ D^∗e_ℓ^#(y,ξ) h(ξ) dξ, using
    /// D^∗e^# = i⟨ξ⟩ e^# − iℓγ sech²(γy) e^{iyξ} (|η|−i)^{−1} / √(2π).
    pub fn adjoint_d(&self, h: &SpectralFunction) -> Vec<Complex> {
        let n = self.grid.len();
        let jh: Vec<Complex> = (0..n)
            .map(|k| Complex::i() * self.jap[k] * h.values()[k])
            .collect();
        let main = self.adjoint(&SpectralFunction::from_values(&self.grid, jh));
        let c_h: Vec<Complex> = (0..n).map(|k| self.wc[k] * h.values()[k]).collect();
        let ic = self.osc_integrals_inverse(&c_h);
        let norm = 1.0 / (2.0 * Scalar::PI()).sqrt();
        (0..n)
            .map(|j| {
                main[j]
                    - Complex::i()
                        * (self.ell * self.gamma * self.sech2_gy[j] * norm)
                        * ic[j]
            })
            .collect()
    }

    /// Vectorial transform T_ℓ[f] = F_{ℓ,D}^#[f₁] − F_ℓ^#[f₂].
    pub fn vector_transform(&self, f: &FieldPair) -> SpectralFunction {
        let d_part = self.forward_d(&f.first);
        let plain = self.forward(&f.second);
        d_part.sub(&plain)
    }

    /// Physical-side inversion P_e f = J^∗ T_ℓ^∗[ i⟨ξ⟩^{−1} h ]: reconstructs
    /// the essential part from frequency data h = T_ℓ f.
    pub fn invert_physical(&self, h: &SpectralFunction) -> FieldPair {
        let n = self.grid.len();
        let weighted: Vec<Complex> = (0..n)
            .map(|k| Complex::i() / self.jap[k] * h.values()[k])
            .collect();
        let wsf = SpectralFunction::from_values(&self.grid, weighted);
        let first: Vec<Scalar> = self.adjoint(&wsf).iter().map(|z| z.re).collect();
        let second: Vec<Scalar> = self.adjoint_d(&wsf).iter().map(|z| z.re).collect();
        FieldPair::new(
            RealField::from_values(&self.grid, first),
            RealField::from_values(&self.grid, second),
        )
    }

    /// Frequency-side companion of [`Self::invert_physical`]:
    /// T_ℓ[ J T_ℓ^∗[i⟨ξ⟩^{−1} h] ] = h for h in the transform range.
    pub fn invert_spectral(&self, h: &SpectralFunction) -> SpectralFunction {
        self.vector_transform(&self.invert_physical(h))
    }

    /// Propagator multiplier e^{it(⟨ξ⟩+ℓξ)} applied to frequency data.
    pub fn propagator_multiplier(&self, h: &SpectralFunction, t: Scalar) -> SpectralFunction {
        let values = (0..self.grid.len())
            .map(|k| Complex::from_polar(1.0, t * self.symbol[k]) * h.values()[k])
            .collect();
        SpectralFunction::from_values(&self.grid, values)
    }

    /// |⟨𝐇 P_e f, g⟩ − ⟨Tf, Tg⟩_{L²_ℓ}| with the weight (⟨ξ⟩+ℓξ)⟨ξ⟩^{−1}.
    ///
    /// The pairing identity lives on the essential subspace; 𝐇 applied to the
    /// discrete part would contribute d₁²γ³‖K′‖², so f is projected first
    /// (the transform side discards the discrete part on its own).
    pub fn plancherel_defect(&self, f: &FieldPair, g: &FieldPair) -> Scalar {
        let ke = crate::kink::kernel_elements(&self.grid, KinkParams::new(self.ell, 0.0));
        let (_, pe_f) = crate::operators::riesz_projections_with(f, &ke);
        let lhs = crate::kink::pair_inner(&apply_h(&pe_f, self.ell), g);
        let rhs = self.weighted_pairing(&self.vector_transform(f), &self.vector_transform(g));
        (lhs - rhs).abs()
    }

    /// ⟨F, G⟩_{L²_ℓ} = Re ∫ F Ḡ (⟨ξ⟩+ℓξ)⟨ξ⟩^{−1} dξ on the lattice.
    pub fn weighted_pairing(&self, f: &SpectralFunction, g: &SpectralFunction) -> Scalar {
        let dxi = 2.0 * Scalar::PI() / self.grid.length();
        dxi * (0..self.grid.len())
            .map(|k| {
                (f.values()[k] * g.values()[k].conj()).re * self.symbol[k] / self.jap[k]
            })
            .sum::<Scalar>()
    }
}
