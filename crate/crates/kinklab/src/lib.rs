//! Numerical laboratory for moving sine-Gordon kinks.
//!
//! The crate evolves the first-order sine-Gordon system around a Lorentz-boosted
//! kink and checks, at desk scale, the pieces of the long-time theory that admit
//! a numerical test: the generalized kernel and threshold resonances of the
//! linearized matrix operator, the distorted Fourier transform that diagonalizes
//! its propagator, the modulation equations for the kink parameters, the
//! quadratic/cubic spectral distributions with their null structures, and the
//! logarithmic phase correction carried by the effective profile of the
//! radiation.
//!
//! Layout:
//! - [`grid`], [`quad`]: periodic grid containers, FFT differentiation, and
//!   quadrature (including adaptive oscillatory quadrature used as the oracle
//!   for every closed-form identity).
//! - [`kink`]: closed-form kink family, kernel elements, resonances, conserved
//!   quantities.
//! - [`scattering`]: Jost functions and the transmission coefficient of the
//!   scalar problem.
//! - [`operators`]: the matrix operators, Riesz projections, and the explicit
//!   resolvent kernel.
//! - [`dft`]: the modified distorted Fourier basis, scalar and vectorial
//!   transforms, inversion, Plancherel, and the propagator multiplier.
//! - [`solver`]: RK4/Strang pseudospectral evolution in the lab frame, the
//!   co-evolved moving-frame radiation solver, and the linearized flow.
//! - [`modulation`]: Newton fit of the kink parameters and the modulation ODE
//!   right-hand sides.
//! - [`distributions`]: quadratic and cubic spectral distributions, null
//!   factorizations, and the hyperbolic Fourier identity oracles.
//! - [`asymptotics`]: effective profile extraction, decay/convergence fits, and
//!   the phase diagnostics.
//! - [`harness`]: config-driven experiment runner behind the `kinklab` binary.
//!
//! Closed-form profiles and frequency-side coefficient tables are generic over
//! the scalar type through [`real::Real`]; the discretized lab instantiates
//! them at [`Scalar`].

pub mod asymptotics;
pub mod dft;
pub mod distributions;
pub mod grid;
pub mod harness;
pub mod kink;
pub mod modulation;
pub mod operators;
pub mod quad;
pub mod real;
pub mod scattering;
pub mod solver;

/// Scalar type of the discretized laboratory.
pub type Scalar = f64;
/// Complex samples on the grid and on the frequency lattice.
pub type Complex = num_complex::Complex<Scalar>;

pub use grid::{ComplexField, FieldPair, Grid, RealField};
pub use kink::KinkParams;

use thiserror::Error;

/// Errors surfaced by fallible laboratory operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite sample in field input")]
    NonFiniteInput,
    #[error("quadrature tolerance {requested:.3e} not reached: estimated error {achieved:.3e} after {panels} panels")]
    QuadratureBudget {
        requested: f64,
        achieved: f64,
        panels: usize,
    },
    #[error("Newton iteration did not converge in {steps} steps; last residual {residual:.3e}")]
    NewtonStall { steps: usize, residual: f64 },
    #[error("modulation matrix singular (det {det:.3e}); perturbation too large")]
    SingularModulationMatrix { det: f64 },
    #[error("spectral parameter {lambda} within {distance:.3e} of the spectrum; need margin {margin:.3e}")]
    NearSpectrum {
        lambda: f64,
        distance: f64,
        margin: f64,
    },
    #[error("blow-up detected at t = {t}: sup-norm {sup:.3e}")]
    BlowUp { t: f64, sup: f64 },
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
