//! Experiment harness: configuration files, scenario orchestration,
//! deterministic artifact emission, and parameter sweeps.

mod config;
mod emit;
mod scenario;

pub use config::{
    DiagnosticsSection, ExperimentConfig, ExperimentSection, GridSection, Perturbation,
    PhysicsSection, Scenario, SolverSection, SweepConfig, SweepMode, SweepSection,
};
pub use emit::{fmt_float, spectral_csv, timeseries_csv, Emitter};
pub use scenario::{
    initial_radiation, run, run_from_files, sweep, sweep_from_files, verify_config, RunManifest,
    RunOutcome, SweepRow,
};
