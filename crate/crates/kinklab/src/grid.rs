//! Periodic grid, field containers, and FFT-based differentiation.
//!
//! The grid covers [−L/2, L/2) with N (even, ≥ 16) uniformly spaced nodes; the
//! dual lattice carries the signed frequencies ξ_k = 2πk/L in standard DFT
//! ordering. Spectra of real data are manipulated as full complex vectors.

use crate::{Complex, Error, Result, Scalar};
use rustfft::FftPlanner;
use std::cell::RefCell;
use std::sync::Arc;

thread_local! {
    static PLANNER: RefCell<FftPlanner<Scalar>> = RefCell::new(FftPlanner::new());
}

/// Forward DFT in place: X_k = Σ_j x_j e^{-2πijk/N} (unnormalized).
pub fn fft_forward(buf: &mut [Complex]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(buf.len()).process(buf));
}

/// Inverse DFT in place, normalized by 1/N: x_j = (1/N) Σ_k X_k e^{+2πijk/N}.
pub fn fft_inverse(buf: &mut [Complex]) {
    let n = buf.len();
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(n).process(buf));
    let s = 1.0 / n as Scalar;
    for z in buf {
        *z *= s;
    }
}

#[derive(Debug)]
struct GridInner {
    length: Scalar,
    n: usize,
    spacing: Scalar,
    nodes: Vec<Scalar>,
    freqs: Vec<Scalar>,
}

/// Uniform periodic grid on [−L/2, L/2).
#[derive(Debug, Clone)]
pub struct Grid(Arc<GridInner>);

impl PartialEq for Grid {
    fn eq(&self, other: &Self) -> bool {
        self.0.n == other.0.n && self.0.length == other.0.length
    }
}

impl Grid {
    /// Panics if `n` is odd or below 16, or if `length` is not positive.
    pub fn new(length: Scalar, n: usize) -> Self {
        assert!(n >= 16 && n % 2 == 0, "grid size must be even and >= 16");
        assert!(length > 0.0, "grid length must be positive");
        let spacing = length / n as Scalar;
        let nodes = (0..n)
            .map(|j| -0.5 * length + j as Scalar * spacing)
            .collect();
        // standard DFT ordering: k = 0, 1, …, N/2−1, −N/2, …, −1
        let freqs = (0..n)
            .map(|k| {
                let ks = if k <= n / 2 - 1 {
                    k as isize
                } else {
                    k as isize - n as isize
                };
                2.0 * Scalar::PI() * ks as Scalar / length
            })
            .collect();
        Grid(Arc::new(GridInner {
            length,
            n,
            spacing,
            nodes,
            freqs,
        }))
    }

    pub fn length(&self) -> Scalar {
        self.0.length
    }
    pub fn len(&self) -> usize {
        self.0.n
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn spacing(&self) -> Scalar {
        self.0.spacing
    }
    /// Node coordinates x_j = −L/2 + j·h.
    pub fn nodes(&self) -> &[Scalar] {
        &self.0.nodes
    }
    /// Signed dual frequencies ξ_k = 2πk/L in DFT order.
    pub fn freqs(&self) -> &[Scalar] {
        &self.0.freqs
    }

    /// Sample a scalar function at the nodes.
    pub fn sample(&self, f: impl Fn(Scalar) -> Scalar) -> RealField {
        RealField {
            grid: self.clone(),
            values: self.nodes().iter().map(|&x| f(x)).collect(),
        }
    }

    /// Sample a complex-valued function at the nodes.
    pub fn sample_complex(&self, f: impl Fn(Scalar) -> Complex) -> ComplexField {
        ComplexField {
            grid: self.clone(),
            values: self.nodes().iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn zeros(&self) -> RealField {
        RealField {
            grid: self.clone(),
            values: vec![0.0; self.len()],
        }
    }
}

use num_traits::FloatConst;

/// Real samples on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct RealField {
    grid: Grid,
    values: Vec<Scalar>,
}

/// Complex samples on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField {
    grid: Grid,
    values: Vec<Complex>,
}

impl RealField {
    pub fn from_values(grid: &Grid, values: Vec<Scalar>) -> Self {
        assert_eq!(values.len(), grid.len());
        RealField {
            grid: grid.clone(),
            values,
        }
    }
    pub fn grid(&self) -> &Grid {
        &self.grid
    }
    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
    pub fn values_mut(&mut self) -> &mut [Scalar] {
        &mut self.values
    }
    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
    pub fn sup_norm(&self) -> Scalar {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
    pub fn l2_norm(&self) -> Scalar {
        (self.grid.spacing() * self.values.iter().map(|v| v * v).sum::<Scalar>()).sqrt()
    }
    /// Largest |f| over the two outermost 2% of nodes on each side.
    pub fn boundary_mass(&self) -> Scalar {
        let n = self.grid.len();
        let w = (n / 50).max(2);
        let mut m: Scalar = 0.0;
        for j in 0..w {
            m = m.max(self.values[j].abs());
            m = m.max(self.values[n - 1 - j].abs());
        }
        m
    }
    pub fn to_complex(&self) -> ComplexField {
        ComplexField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|&v| Complex::new(v, 0.0)).collect(),
        }
    }

    pub fn scaled(&self, c: Scalar) -> RealField {
        RealField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| c * v).collect(),
        }
    }

    pub fn add(&self, other: &RealField) -> RealField {
        assert_eq!(self.grid, other.grid);
        RealField {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RealField) -> RealField {
        assert_eq!(self.grid, other.grid);
        RealField {
            grid: self.grid.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl ComplexField {
    pub fn from_values(grid: &Grid, values: Vec<Complex>) -> Self {
        assert_eq!(values.len(), grid.len());
        ComplexField {
            grid: grid.clone(),
            values,
        }
    }
    pub fn grid(&self) -> &Grid {
        &self.grid
    }
    pub fn values(&self) -> &[Complex] {
        &self.values
    }
    pub fn values_mut(&mut self) -> &mut [Complex] {
        &mut self.values
    }
    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }
    pub fn sup_norm(&self) -> Scalar {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }
    pub fn re(&self) -> RealField {
        RealField {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v.re).collect(),
        }
    }
}

/// The state (φ₁, φ₂) of the first-order system on one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldPair {
    pub first: RealField,
    pub second: RealField,
}

impl FieldPair {
    pub fn new(first: RealField, second: RealField) -> Self {
        assert_eq!(first.grid(), second.grid(), "components on distinct grids");
        FieldPair { first, second }
    }
    pub fn zeros(grid: &Grid) -> Self {
        FieldPair {
            first: grid.zeros(),
            second: grid.zeros(),
        }
    }
    pub fn grid(&self) -> &Grid {
        self.first.grid()
    }
    pub fn sup_norm(&self) -> Scalar {
        self.first.sup_norm().max(self.second.sup_norm())
    }
    pub fn scaled(&self, c: Scalar) -> FieldPair {
        FieldPair {
            first: self.first.scaled(c),
            second: self.second.scaled(c),
        }
    }
    pub fn add(&self, other: &FieldPair) -> FieldPair {
        FieldPair {
            first: self.first.add(&other.first),
            second: self.second.add(&other.second),
        }
    }
    pub fn sub(&self, other: &FieldPair) -> FieldPair {
        FieldPair {
            first: self.first.sub(&other.first),
            second: self.second.sub(&other.second),
        }
    }
    /// ‖·‖_{H¹×L²}: (‖f₁‖² + ‖∂f₁‖² + ‖f₂‖²)^{1/2} with the spectral derivative.
    pub fn h1l2_norm(&self) -> Scalar {
        let d1 = spectral_derivative(&self.first, 1).expect("finite field");
        (self.first.l2_norm().powi(2) + d1.l2_norm().powi(2) + self.second.l2_norm().powi(2))
            .sqrt()
    }
    /// Symplectic pairing J applied pointwise: J(f₁, f₂) = (f₂, −f₁).
    pub fn apply_j(&self) -> FieldPair {
        FieldPair {
            first: self.second.clone(),
            second: self.first.scaled(-1.0),
        }
    }
}

/// Complex pair used for resonances and resolvent data.
#[derive(Debug, Clone)]
pub struct ComplexPair {
    pub first: ComplexField,
    pub second: ComplexField,
}

impl ComplexPair {
    pub fn grid(&self) -> &Grid {
        self.first.grid()
    }
    pub fn conj(&self) -> ComplexPair {
        ComplexPair {
            first: ComplexField {
                grid: self.first.grid.clone(),
                values: self.first.values.iter().map(|v| v.conj()).collect(),
            },
            second: ComplexField {
                grid: self.second.grid.clone(),
                values: self.second.values.iter().map(|v| v.conj()).collect(),
            },
        }
    }
}

/// Raw spectrum of a field (DFT ordering, unnormalized forward coefficients).
pub fn spectrum(f: &RealField) -> Vec<Complex> {
    let mut buf: Vec<Complex> = f.values.iter().map(|&v| Complex::new(v, 0.0)).collect();
    fft_forward(&mut buf);
    buf
}

fn derivative_multiplier(grid: &Grid, order: u32) -> Vec<Complex> {
    let n = grid.len();
    grid.freqs()
        .iter()
        .enumerate()
        .map(|(k, &xi)| {
            // Nyquist mode carries no usable sign information for odd derivatives.
            if k == n / 2 && order % 2 == 1 {
                Complex::new(0.0, 0.0)
            } else {
                Complex::new(0.0, xi).powu(order)
            }
        })
        .collect()
}

/// Discrete Fourier-multiplier derivative of a real field.
///
/// Exact for trigonometric polynomials below the Nyquist frequency; `order`
/// must lie in 1..=3.
pub fn spectral_derivative(f: &RealField, order: u32) -> Result<RealField> {
    assert!((1..=3).contains(&order), "derivative order must be 1..=3");
    if !f.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let mul = derivative_multiplier(f.grid(), order);
    let mut buf: Vec<Complex> = f.values.iter().map(|&v| Complex::new(v, 0.0)).collect();
    fft_forward(&mut buf);
    for (z, m) in buf.iter_mut().zip(&mul) {
        *z *= m;
    }
    fft_inverse(&mut buf);
    Ok(RealField {
        grid: f.grid.clone(),
        values: buf.iter().map(|z| z.re).collect(),
    })
}

/// Complex-field variant of [`spectral_derivative`].
pub fn spectral_derivative_complex(f: &ComplexField, order: u32) -> Result<ComplexField> {
    assert!((1..=3).contains(&order), "derivative order must be 1..=3");
    if !f.is_finite() {
        return Err(Error::NonFiniteInput);
    }
    let mul = derivative_multiplier(f.grid(), order);
    let mut buf = f.values.clone();
    fft_forward(&mut buf);
    for (z, m) in buf.iter_mut().zip(&mul) {
        *z *= m;
    }
    fft_inverse(&mut buf);
    Ok(ComplexField {
        grid: f.grid.clone(),
        values: buf,
    })
}

/// Zero every mode with |k| > N/3 (2/3-rule mask for quadratic products).
pub fn dealias(f: &RealField) -> RealField {
    let n = f.grid.len();
    let cutoff = n / 3;
    let mut buf: Vec<Complex> = f.values.iter().map(|&v| Complex::new(v, 0.0)).collect();
    fft_forward(&mut buf);
    for (k, z) in buf.iter_mut().enumerate() {
        let ks = if k <= n / 2 { k } else { n - k };
        if ks > cutoff {
            *z = Complex::new(0.0, 0.0);
        }
    }
    fft_inverse(&mut buf);
    RealField {
        grid: f.grid.clone(),
        values: buf.iter().map(|z| z.re).collect(),
    }
}

/// Translate a field by `shift` via the Fourier phase e^{−iξ·shift}.
///
/// Exact for grid-commensurate shifts; spectrally accurate interpolation
/// otherwise (the field must decay at the boundary for the wrap to be benign).
pub fn phase_shift(f: &RealField, shift: Scalar) -> RealField {
    let mut buf: Vec<Complex> = f.values.iter().map(|&v| Complex::new(v, 0.0)).collect();
    fft_forward(&mut buf);
    let n = f.grid.len();
    for (k, z) in buf.iter_mut().enumerate() {
        let xi = f.grid.freqs()[k];
        if k == n / 2 {
            // keep the Nyquist mode real under interpolation
            *z *= (xi * shift).cos();
        } else {
            *z *= Complex::from_polar(1.0, -xi * shift);
        }
    }
    fft_inverse(&mut buf);
    RealField {
        grid: f.grid.clone(),
        values: buf.iter().map(|z| z.re).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_sine_is_exact() {
        let grid = Grid::new(80.0, 256);
        let k = 2.0 * Scalar::PI() / 80.0;
        let f = grid.sample(|x| (k * x).sin());
        let d = spectral_derivative(&f, 1).unwrap();
        let exact = grid.sample(|x| k * (k * x).cos());
        let err = d.sub(&exact).sup_norm();
        assert!(err < 1e-13, "err = {err:.3e}");
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        let grid = Grid::new(40.0, 64);
        let f = grid.sample(|_| 3.25);
        let d = spectral_derivative(&f, 1).unwrap();
        assert!(d.sup_norm() < 1e-13);
    }

    #[test]
    fn second_derivative_of_sech_matches_finite_differences() {
        // 4th-order centered finite differences as the independent oracle.
        let grid = Grid::new(80.0, 1024);
        let sech = |x: Scalar| 1.0 / x.cosh();
        let f = grid.sample(sech);
        let d2 = spectral_derivative(&f, 2).unwrap();
        let h = 1e-2;
        let at = |x: Scalar| {
            (-sech(x - 2.0 * h) + 16.0 * sech(x - h) - 30.0 * sech(x) + 16.0 * sech(x + h)
                - sech(x + 2.0 * h))
                / (12.0 * h * h)
        };
        let j0 = grid.nodes().iter().position(|&x| x == 0.0).unwrap_or(512);
        let x0 = grid.nodes()[j0];
        let err = (d2.values()[j0] - at(x0)).abs();
        assert!(err < 1e-8, "err = {err:.3e}");
    }

    #[test]
    fn rejects_non_finite() {
        let grid = Grid::new(40.0, 64);
        let mut f = grid.zeros();
        f.values_mut()[3] = Scalar::NAN;
        assert!(matches!(
            spectral_derivative(&f, 1),
            Err(Error::NonFiniteInput)
        ));
    }

    #[test]
    fn phase_shift_matches_whole_step_rotation() {
        let grid = Grid::new(40.0, 128);
        let f = grid.sample(|x| (-x * x).exp());
        let h = grid.spacing();
        let shifted = phase_shift(&f, h);
        // translation by one grid step = cyclic rotation of samples
        let n = grid.len();
        let mut err: Scalar = 0.0;
        for j in 0..n {
            let rot = f.values()[(j + n - 1) % n];
            err = err.max((shifted.values()[j] - rot).abs());
        }
        assert!(err < 1e-12, "err = {err:.3e}");
    }

    #[test]
    fn dealias_removes_top_third() {
        let grid = Grid::new(10.0, 96);
        let k_hi = 2.0 * Scalar::PI() / 10.0 * 40.0; // mode 40 > 96/3
        let f = grid.sample(|x| (k_hi * x).cos());
        assert!(dealias(&f).sup_norm() < 1e-12);
    }
}
