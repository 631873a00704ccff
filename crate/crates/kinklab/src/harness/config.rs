//! Experiment configuration: flat sectioned key-value files (TOML), validated
//! against the module preconditions before any run starts.

use crate::solver::Integrator;
use crate::{Error, Result, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: ExperimentSection,
    pub grid: GridSection,
    pub solver: SolverSection,
    pub physics: PhysicsSection,
    #[serde(default)]
    pub diagnostics: DiagnosticsSection,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExperimentSection {
    pub scenario: Scenario,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    /// Identity oracles only; no PDE run.
    VerifyIdentities,
    /// Lab-frame run, conservation-focused (ε may be zero).
    StationaryKink,
    /// Co-evolved moving-frame run with full diagnostics.
    BoostedKink,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GridSection {
    pub length: Scalar,
    pub points: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SolverSection {
    /// dt = dt_factor · h / (1 + |ℓ₀|)
    pub dt_factor: Scalar,
    pub t_final: Scalar,
    pub integrator: Integrator,
    #[serde(default = "default_true")]
    pub dealias: bool,
    #[serde(default)]
    pub sponge: bool,
    #[serde(default = "default_monitor")]
    pub monitor_interval: Scalar,
    #[serde(default = "default_snapshot")]
    pub snapshot_interval: Scalar,
}

fn default_true() -> bool {
    true
}
fn default_monitor() -> Scalar {
    0.5
}
fn default_snapshot() -> Scalar {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PhysicsSection {
    pub ell0: Scalar,
    #[serde(default)]
    pub x0: Scalar,
    #[serde(default)]
    pub perturbation: Perturbation,
    #[serde(default)]
    pub amplitude: Scalar,
    #[serde(default = "default_width")]
    pub width: Scalar,
    #[serde(default)]
    pub center: Scalar,
}

fn default_width() -> Scalar {
    1.0
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Perturbation {
    #[default]
    None,
    GaussianBump,
    OddBump,
    /// Physical-side inversion of a compactly supported frequency bump;
    /// guarantees P_d-free initial radiation.
    DftBand,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DiagnosticsSection {
    /// Window [t₀, t₁] for decay/convergence fits.
    #[serde(default = "default_window")]
    pub fit_window: [Scalar; 2],
    /// Mid-frequency band half-bounds for profile sup-norms.
    #[serde(default = "default_band")]
    pub band: [Scalar; 2],
}

impl Default for DiagnosticsSection {
    fn default() -> Self {
        DiagnosticsSection {
            fit_window: default_window(),
            band: default_band(),
        }
    }
}

fn default_window() -> [Scalar; 2] {
    [20.0, 200.0]
}
fn default_band() -> [Scalar; 2] {
    [0.3, 3.0]
}

impl ExperimentConfig {
    pub fn from_str(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config serializable")
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.grid;
        if g.points < 16 || g.points % 2 != 0 || !g.points.is_power_of_two() {
            return Err(Error::Config(format!(
                "grid.points must be an even power of two >= 16, got {}",
                g.points
            )));
        }
        if !(g.length > 0.0) {
            return Err(Error::Config("grid.length must be positive".into()));
        }
        let s = &self.solver;
        if !(s.dt_factor > 0.0 && s.dt_factor <= 1.0) {
            return Err(Error::Config(format!(
                "solver.dt_factor must lie in (0, 1], got {}",
                s.dt_factor
            )));
        }
        if !(s.t_final >= 0.0) {
            return Err(Error::Config("solver.t_final must be nonnegative".into()));
        }
        if !(s.monitor_interval > 0.0 && s.snapshot_interval > 0.0) {
            return Err(Error::Config("monitor/snapshot intervals must be positive".into()));
        }
        let p = &self.physics;
        if p.ell0.abs() >= 1.0 {
            return Err(Error::Config(format!(
                "physics.ell0 must satisfy |ell0| < 1, got {}",
                p.ell0
            )));
        }
        if p.amplitude < 0.0 {
            return Err(Error::Config("physics.amplitude must be nonnegative".into()));
        }
        if p.perturbation != Perturbation::None && !(p.width > 0.0) {
            return Err(Error::Config("physics.width must be positive".into()));
        }
        let d = &self.diagnostics;
        if d.fit_window[1] <= d.fit_window[0] {
            return Err(Error::Config("diagnostics.fit_window must be increasing".into()));
        }
        Ok(())
    }

    /// Time step implied by the grid and boost.
    pub fn dt(&self) -> Scalar {
        self.solver.dt_factor * (self.grid.length / self.grid.points as Scalar)
            / (1.0 + self.physics.ell0.abs())
    }
}

/// Parameter sweep description.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SweepConfig {
    pub sweep: SweepSection,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SweepSection {
    pub mode: SweepMode,
    /// Boost values (physics mode).
    #[serde(default)]
    pub ell0: Vec<Scalar>,
    /// Amplitudes (physics mode).
    #[serde(default)]
    pub amplitude: Vec<Scalar>,
    /// Number of dt-halving levels (convergence mode).
    #[serde(default = "default_levels")]
    pub levels: usize,
    /// Double grid points along with halving dt.
    #[serde(default)]
    pub refine_space: bool,
}

fn default_levels() -> usize {
    4
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    Physics,
    Convergence,
}

impl SweepConfig {
    pub fn from_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str(&text)
    }
}
