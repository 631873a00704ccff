//! Scenario orchestration: initial data synthesis, solver runs, diagnostics,
//! and artifact emission.

use super::config::{ExperimentConfig, Perturbation, Scenario, SweepConfig, SweepMode};
use super::emit::{
    aggregate_csv, fmt_float, profile_diagnostics_csv, spectral_csv, timeseries_csv, Emitter,
};
use crate::asymptotics::{
    dyadic_drift, effective_profile, fit_decay, fit_modulation_convergence, mid_band,
    phase_diagnostics,
};
use crate::dft::{DistortedBasis, SpectralFunction};
use crate::distributions::{
    appendix_a_oracle, appendix_b_oracle, cubic_coeff, null_structure_transform,
    quad_dist, resonant_frequencies, CubicKind, QuadKind, QuadMethod, SignPattern,
};
use crate::grid::{FieldPair, Grid, RealField};
use crate::kink::{conserved_quantities, moving_kink, KinkParams};
use crate::modulation::{fit, FitOptions};
use crate::solver::{
    evolve, evolve_moving_frame, exact_moving_kink, FrameEvolution, FramePaths,
    SolverConfig, Sponge,
};
use crate::{Complex, Result, Scalar};
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Manifest written at the end of every run.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub scenario: String,
    pub version: String,
    pub seed: u64,
    pub wall_seconds: f64,
    pub checks: BTreeMap<String, bool>,
    pub files: Vec<String>,
    pub content_hash: String,
    pub config_echo: String,
}

/// Outcome surfaced to the CLI.
pub struct RunOutcome {
    pub manifest: RunManifest,
    pub summary: serde_json::Value,
    pub all_passed: bool,
}

/// Execute one configured scenario, emitting artifacts under `out_dir`.
pub fn run(cfg: &ExperimentConfig, out_dir: &Path) -> Result<RunOutcome> {
    let started = Instant::now();
    let mut emitter = Emitter::new(out_dir)?;
    let mut checks = BTreeMap::new();
    let summary = match cfg.experiment.scenario {
        Scenario::VerifyIdentities => run_verify(&mut emitter, &mut checks)?,
        Scenario::StationaryKink => run_lab(cfg, &mut emitter, &mut checks)?,
        Scenario::BoostedKink => run_boosted(cfg, &mut emitter, &mut checks)?,
    };
    emitter.write(
        "summary.json",
        &serde_json::to_string_pretty(&summary).expect("serializable"),
    )?;
    let content_hash = emitter.content_hash()?;
    let manifest = RunManifest {
        scenario: format!("{:?}", cfg.experiment.scenario),
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: cfg.experiment.seed,
        wall_seconds: started.elapsed().as_secs_f64(),
        checks: checks.clone(),
        files: emitter
            .files
            .iter()
            .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
            .collect(),
        content_hash,
        config_echo: cfg.to_toml(),
    };
    // atomic manifest write
    let tmp = out_dir.join("manifest.json.tmp");
    std::fs::write(&tmp, serde_json::to_string_pretty(&manifest).expect("serializable"))?;
    std::fs::rename(&tmp, out_dir.join("manifest.json"))?;
    let all_passed = checks.values().all(|&v| v);
    Ok(RunOutcome {
        manifest,
        summary,
        all_passed,
    })
}

/// Initial radiation in the moving frame for the configured family.
pub fn initial_radiation(grid: &Grid, cfg: &ExperimentConfig) -> FieldPair {
    let p = &cfg.physics;
    let eps = p.amplitude;
    let (c, w) = (p.center, p.width);
    match p.perturbation {
        Perturbation::None => FieldPair::zeros(grid),
        Perturbation::GaussianBump => FieldPair::new(
            grid.sample(move |y| eps * (-((y - c) / w).powi(2)).exp()),
            grid.zeros(),
        ),
        Perturbation::OddBump => FieldPair::new(
            grid.sample(move |y| eps * (y - c) / w * (-((y - c) / w).powi(2)).exp()),
            grid.zeros(),
        ),
        Perturbation::DftBand => {
            let basis = DistortedBasis::new(grid, p.ell0);
            let values: Vec<Complex> = grid
                .freqs()
                .iter()
                .map(|&xi| Complex::new(eps * (-((xi - c) / w).powi(2)).exp(), 0.0))
                .collect();
            basis.invert_physical(&SpectralFunction::from_values(grid, values))
        }
    }
}

fn solver_config(cfg: &ExperimentConfig) -> SolverConfig {
    let mut sc = SolverConfig::new(cfg.dt(), cfg.solver.t_final);
    sc.integrator = cfg.solver.integrator;
    sc.dealias = cfg.solver.dealias;
    sc.monitor_interval = cfg.solver.monitor_interval;
    sc.snapshot_interval = Some(cfg.solver.snapshot_interval);
    sc.sponge = cfg.solver.sponge.then(Sponge::default);
    sc
}

// ─── lab-frame scenario ──────────────────────────────────────────────────

fn run_lab(
    cfg: &ExperimentConfig,
    emitter: &mut Emitter,
    checks: &mut BTreeMap<String, bool>,
) -> Result<serde_json::Value> {
    let grid = Grid::new(cfg.grid.length, cfg.grid.points);
    let p = KinkParams::new(cfg.physics.ell0, cfg.physics.x0);
    let pert = initial_radiation(&grid, cfg);
    let pert_shifted = FieldPair::new(
        crate::grid::phase_shift(&pert.first, -cfg.physics.x0),
        crate::grid::phase_shift(&pert.second, -cfg.physics.x0),
    );
    let phi0 = moving_kink(&grid, p, 0.0).add(&pert_shifted);
    let sc = solver_config(cfg);
    let ev = evolve(&phi0, &sc)?;

    emitter.write("timeseries.csv", &timeseries_csv(&ev.record))?;

    let first = &ev.record.samples[0];
    let last = ev.record.samples.last().unwrap();
    let drift_e = ((last.energy - first.energy) / first.energy).abs();
    let drift_p = if first.momentum.abs() > 1e-12 {
        ((last.momentum - first.momentum) / first.momentum).abs()
    } else {
        (last.momentum - first.momentum).abs()
    };
    let drift_m = ((last.invariant - first.invariant) / first.invariant.max(1e-30)).abs();
    if cfg.solver.sponge {
        // an absorbing layer deliberately removes radiated energy; drift is
        // reported but not gated
        checks.insert("conservation_reported".into(), true);
    } else {
        checks.insert("conservation_drift_below_1e-8".into(), drift_e < 1e-8 && drift_p < 1e-8);
        checks.insert("invariant_mass_constant".into(), drift_m < 1e-8);
    }

    let mut exact_error = None;
    if cfg.physics.amplitude == 0.0 {
        let exact = exact_moving_kink(&grid, p.ell, p.q, sc.t_final);
        let err = ev.final_state.first.sub(&exact.first).sup_norm();
        checks.insert("exact_kink_propagation_below_1e-6".into(), err < 1e-6);
        exact_error = Some(err);
    }

    let cons = conserved_quantities(&ev.final_state);
    Ok(json!({
        "scenario": "stationary-kink",
        "grid": {"length": cfg.grid.length, "points": cfg.grid.points},
        "dt": cfg.dt(),
        "t_final": sc.t_final,
        "energy": cons.energy,
        "momentum": cons.momentum,
        "invariant": cons.invariant,
        "relative_drift": {"energy": drift_e, "momentum": drift_p, "invariant": drift_m},
        "exact_propagation_error": exact_error,
        "decay_fits": "skipped (conservation scenario)",
    }))
}

// ─── boosted-kink flagship scenario ──────────────────────────────────────

fn run_boosted(
    cfg: &ExperimentConfig,
    emitter: &mut Emitter,
    checks: &mut BTreeMap<String, bool>,
) -> Result<serde_json::Value> {
    let grid = Grid::new(cfg.grid.length, cfg.grid.points);
    let seed = KinkParams::new(cfg.physics.ell0, cfg.physics.x0);

    // assemble lab-frame data and split off the exactly-orthogonal radiation
    let pert = initial_radiation(&grid, cfg);
    let pert_shifted = FieldPair::new(
        crate::grid::phase_shift(&pert.first, -cfg.physics.x0),
        crate::grid::phase_shift(&pert.second, -cfg.physics.x0),
    );
    let phi0 = moving_kink(&grid, seed, 0.0).add(&pert_shifted);
    let d0 = fit(&phi0, seed, FitOptions::default())?;

    let sc = solver_config(cfg);
    let ev: FrameEvolution = evolve_moving_frame(
        &d0.radiation,
        FramePaths::CoEvolved {
            ell0: d0.params.ell,
            q0: d0.params.q,
        },
        &sc,
    )?;

    emitter.write("timeseries.csv", &timeseries_csv(&ev.record))?;

    // orthogonality throughout the run
    let max_defect = ev
        .record
        .samples
        .iter()
        .map(|s| s.defect_q.unwrap_or(0.0).abs().max(s.defect_ell.unwrap_or(0.0).abs()))
        .fold(0.0_f64, Scalar::max);
    checks.insert("orthogonality_defects_below_1e-7".into(), max_defect < 1e-7);

    // conservation in the co-moving reconstruction (gated only without sponge)
    let (drift_e, drift_p, drift_m) = frame_conservation_drift(&grid, &ev);
    if !cfg.solver.sponge {
        checks.insert(
            "conservation_drift_below_1e-8".into(),
            drift_e < 1e-8 && drift_p < 1e-8 && drift_m < 1e-8,
        );
    }

    // dispersive decay fit of sup|u₁|
    let window = (cfg.diagnostics.fit_window[0], cfg.diagnostics.fit_window[1].min(sc.t_final));
    let sup_series = ev.record.series(|s| s.sup_u1);
    let decay = fit_decay(&sup_series, window);
    checks.insert(
        "decay_exponent_within_tolerance".into(),
        (decay.exponent + 0.5).abs() <= 0.1,
    );

    // modulation convergence fits
    let (ell_fit, qdot_fit) = fit_modulation_convergence(&ev.record, window);
    checks.insert(
        "qdot_convergence_within_tolerance".into(),
        (qdot_fit.exponent + 1.0).abs() <= 0.3,
    );

    // effective profile relative to ℓ̄ = ℓ(T)
    let ell_bar = ev.final_params.ell;
    let snapshots: Vec<(Scalar, FieldPair)> = ev
        .snapshots
        .iter()
        .map(|(t, u, _, _)| (*t, u.clone()))
        .collect();
    let series = effective_profile(&grid, &snapshots, ell_bar);
    let q0 = ev.snapshots.first().map(|s| s.3).unwrap_or(0.0);
    let theta: Vec<Scalar> = ev
        .snapshots
        .iter()
        .map(|(t, _, _, q)| q - q0 - ell_bar * t)
        .collect();
    let diags = phase_diagnostics(&series, &theta);

    // profile flatness: sup over the band of ⟨ξ⟩^{3/2}|g^#| varies < 25%
    let band = mid_band(ell_bar);
    let in_window: Vec<usize> = series
        .times
        .iter()
        .enumerate()
        .filter(|(_, &t)| t >= window.0 && t <= window.1)
        .map(|(i, _)| i)
        .collect();
    let sups: Vec<Scalar> = in_window.iter().map(|&i| series.weighted_sup(i, band)).collect();
    let (smin, smax) = sups
        .iter()
        .fold((Scalar::INFINITY, 0.0_f64), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let variation = (smax - smin) / smax.max(1e-30);
    checks.insert("profile_variation_below_25pct".into(), variation < 0.25);

    // phase-corrected dyadic drift
    let drift = dyadic_drift(&series, &diags, window, band);
    checks.insert("phase_correction_improves_2x".into(), drift.improvement >= 2.0);

    // artifacts
    let diag_times: Vec<Scalar> = {
        let mut ts = Vec::new();
        let mut t = window.0.max(1.0);
        while t <= window.1 {
            ts.push(t);
            t *= 2.0f64.powf(0.25);
        }
        ts
    };
    emitter.write(
        "profile_diagnostics.csv",
        &profile_diagnostics_csv(&series, &diags, band, &diag_times),
    )?;
    if let Some(last) = series.profiles.last() {
        emitter.write("spectral_final.csv", &spectral_csv(last))?;
    }

    Ok(json!({
        "scenario": "boosted-kink",
        "grid": {"length": cfg.grid.length, "points": cfg.grid.points},
        "dt": cfg.dt(),
        "t_final": sc.t_final,
        "fitted_initial": {"ell": d0.params.ell, "q": d0.params.q},
        "final_params": {"ell": ev.final_params.ell, "q": ev.final_params.q},
        "max_orthogonality_defect": max_defect,
        "relative_drift": {"energy": drift_e, "momentum": drift_p, "invariant": drift_m},
        "decay_fit": {"exponent": decay.exponent, "stderr": decay.stderr, "points": decay.points},
        "ell_convergence_fit": ell_fit.map(|f| json!({"exponent": f.exponent, "stderr": f.stderr})),
        "qdot_convergence_fit": {"exponent": qdot_fit.exponent, "stderr": qdot_fit.stderr},
        "profile_sup_variation": variation,
        "drift_report": {
            "pairs": drift.pairs,
            "uncorrected": drift.uncorrected,
            "corrected": drift.corrected,
            "improvement": drift.improvement,
        },
        "reference_boost": ell_bar,
    }))
}

/// E, P, M relative drift of the co-moving reconstruction φ = K_{ℓ} + u.
fn frame_conservation_drift(grid: &Grid, ev: &FrameEvolution) -> (Scalar, Scalar, Scalar) {
    let mut first: Option<(Scalar, Scalar, Scalar)> = None;
    let mut worst = (0.0_f64, 0.0_f64, 0.0_f64);
    for (_, u, ell, _) in &ev.snapshots {
        let kp = KinkParams::new(*ell, 0.0);
        let phi = moving_kink(grid, kp, 0.0).add(u);
        let c = conserved_quantities(&phi);
        match first {
            None => first = Some((c.energy, c.momentum, c.invariant)),
            Some((e0, p0, m0)) => {
                worst.0 = worst.0.max(((c.energy - e0) / e0).abs());
                worst.1 = worst.1.max(if p0.abs() > 1e-12 {
                    ((c.momentum - p0) / p0).abs()
                } else {
                    (c.momentum - p0).abs()
                });
                worst.2 = worst.2.max(((c.invariant - m0) / m0).abs());
            }
        }
    }
    worst
}

// ─── identity verification scenario ──────────────────────────────────────

fn run_verify(
    emitter: &mut Emitter,
    checks: &mut BTreeMap<String, bool>,
) -> Result<serde_json::Value> {
    // Appendix A table
    let a_reports = appendix_a_oracle()?;
    let a_ok = a_reports.iter().all(|r| r.verdict.contains("verified"));
    checks.insert("fourier_identity_table_resolved".into(), a_ok);

    // Appendix B factorizations on a 5³ grid
    let b_reports = appendix_b_oracle(5)?;
    let b_ok = b_reports.iter().all(|r| r.max_rel_err < 1e-7)
        && b_reports
            .iter()
            .find(|r| r.pattern == "++")
            .map(|r| r.resonant_zero < 1e-10)
            .unwrap_or(false);
    checks.insert("deepnull_factorizations_verified".into(), b_ok);

    // null structure of the resonance coefficient
    let mut null_rows = Vec::new();
    let mut null_ok = true;
    for &ell in &[0.0, 0.4] {
        let (xp, xm) = resonant_frequencies(ell);
        for xi in [xp, xm] {
            let v = null_structure_transform(ell, xi)?.norm();
            null_ok &= v < 1e-10;
            null_rows.push(json!({"ell": ell, "xi": xi, "abs_transform": v}));
        }
    }
    checks.insert("resonant_null_structure_below_1e-10".into(), null_ok);

    // quadratic distributions: closed vs quadrature on a 9×9 grid
    let mut quad_worst: Scalar = 0.0;
    let ell = 0.3;
    for i in 0..9 {
        for j in 0..9 {
            let x1 = -2.0 + 0.5 * i as Scalar;
            let x2 = -2.0 + 0.5 * j as Scalar;
            let c = quad_dist(QuadKind::PlusMinus, ell, x1, x2, QuadMethod::Closed)?;
            let q = quad_dist(QuadKind::PlusMinus, ell, x1, x2, QuadMethod::Quadrature)?;
            let scale = q.norm().max(1e-8);
            quad_worst = quad_worst.max((c - q).norm() / scale);
        }
    }
    checks.insert("quadratic_closed_form_rtol_1e-8".into(), quad_worst < 1e-8);

    // cubic diagonal identities
    let mut cubic_ok = true;
    for &xi in &[0.0, 0.7, 1.3, -2.0, -4.0] {
        let d = cubic_coeff(SignPattern::Pmp, CubicKind::Delta0, ell, xi, [xi, xi, xi]);
        let pv = cubic_coeff(SignPattern::Pmp, CubicKind::PrincipalValue, ell, xi, [xi, xi, xi]);
        cubic_ok &= (d - Complex::new(1.0 / (2.0 * std::f64::consts::PI), 0.0)).norm() < 1e-12;
        cubic_ok &= pv.norm() < 1e-12;
    }
    checks.insert("cubic_diagonal_identities_1e-12".into(), cubic_ok);

    let report = json!({
        "scenario": "verify-identities",
        "fourier_identities": a_reports,
        "deepnull": b_reports,
        "resonant_null_structure": null_rows,
        "quadratic_max_rel_err": quad_worst,
        "cubic_diagonal_ok": cubic_ok,
    });
    emitter.write(
        "verify.json",
        &serde_json::to_string_pretty(&report).expect("serializable"),
    )?;
    Ok(report)
}

// ─── sweeps ──────────────────────────────────────────────────────────────

/// One sweep row outcome (failures recorded, sweep continues).
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub label: String,
    pub status: String,
    pub columns: Vec<(String, Scalar)>,
}

/// Run a parameter sweep; each run lands in its own subdirectory of
/// `out_dir`, with an aggregate table at the top.
pub fn sweep(
    base: &ExperimentConfig,
    sweep_cfg: &SweepConfig,
    out_dir: &Path,
    threads: usize,
) -> Result<Vec<SweepRow>> {
    std::fs::create_dir_all(out_dir)?;
    let rows = match sweep_cfg.sweep.mode {
        SweepMode::Physics => physics_sweep(base, sweep_cfg, out_dir, threads)?,
        SweepMode::Convergence => convergence_sweep(base, sweep_cfg)?,
    };
    let header: Vec<&str> = if rows.is_empty() {
        vec!["label", "status"]
    } else {
        let mut h = vec!["label", "status"];
        for (name, _) in &rows[0].columns {
            h.push(name.as_str());
        }
        h
    };
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![r.label.clone(), r.status.clone()];
            row.extend(r.columns.iter().map(|(_, v)| fmt_float(*v)));
            row
        })
        .collect();
    std::fs::write(out_dir.join("aggregate.csv"), aggregate_csv(&header, &table))?;
    Ok(rows)
}

fn physics_sweep(
    base: &ExperimentConfig,
    sweep_cfg: &SweepConfig,
    out_dir: &Path,
    threads: usize,
) -> Result<Vec<SweepRow>> {
    let mut tasks: Vec<(String, ExperimentConfig, PathBuf)> = Vec::new();
    let ells = if sweep_cfg.sweep.ell0.is_empty() {
        vec![base.physics.ell0]
    } else {
        sweep_cfg.sweep.ell0.clone()
    };
    let amps = if sweep_cfg.sweep.amplitude.is_empty() {
        vec![base.physics.amplitude]
    } else {
        sweep_cfg.sweep.amplitude.clone()
    };
    if sweep_cfg.sweep.ell0.is_empty() && sweep_cfg.sweep.amplitude.is_empty() {
        return Ok(Vec::new());
    }
    for &l in &ells {
        for &a in &amps {
            let mut cfg = base.clone();
            cfg.physics.ell0 = l;
            cfg.physics.amplitude = a;
            let label = format!("ell{l}_eps{a}");
            let dir = out_dir.join(&label);
            tasks.push((label, cfg, dir));
        }
    }
    let results: Vec<SweepRow> = run_parallel(tasks, threads);
    Ok(results)
}

fn run_parallel(tasks: Vec<(String, ExperimentConfig, PathBuf)>, threads: usize) -> Vec<SweepRow> {
    let threads = threads.max(1);
    let tasks = std::sync::Mutex::new(tasks.into_iter().collect::<Vec<_>>());
    let results = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let task = { tasks.lock().unwrap().pop() };
                let Some((label, cfg, dir)) = task else { break };
                let row = match run(&cfg, &dir) {
                    Ok(outcome) => {
                        let mut cols = vec![
                            ("ell0".to_string(), cfg.physics.ell0),
                            ("amplitude".to_string(), cfg.physics.amplitude),
                        ];
                        let gamma = KinkParams::new(cfg.physics.ell0, 0.0).gamma();
                        if let Some(e) = outcome.summary.get("energy").and_then(|v| v.as_f64()) {
                            cols.push(("energy".to_string(), e));
                            cols.push(("e_over_gamma".to_string(), e / gamma));
                        }
                        if let Some(d) = outcome
                            .summary
                            .get("relative_drift")
                            .and_then(|v| v.get("energy"))
                            .and_then(|v| v.as_f64())
                        {
                            cols.push(("energy_drift".to_string(), d));
                        }
                        SweepRow {
                            label,
                            status: if outcome.all_passed { "ok" } else { "check-failed" }
                                .to_string(),
                            columns: cols,
                        }
                    }
                    Err(e) => SweepRow {
                        label,
                        status: format!("error: {e}"),
                        columns: Vec::new(),
                    },
                };
                results.lock().unwrap().push(row);
            });
        }
    });
    let mut rows = results.into_inner().unwrap();
    rows.sort_by(|a, b| a.label.cmp(&b.label));
    rows
}

/// dt-halving (optionally N-doubling) study; the observed order column comes
/// from Richardson ratios of successive final states.
fn convergence_sweep(base: &ExperimentConfig, sweep_cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    let levels = sweep_cfg.sweep.levels.max(2);
    let mut finals: Vec<(Scalar, RealFinal)> = Vec::new();
    for k in 0..levels {
        let mut cfg = base.clone();
        cfg.solver.dt_factor = base.solver.dt_factor / 2.0_f64.powi(k as i32);
        if sweep_cfg.sweep.refine_space {
            cfg.grid.points = base.grid.points << k;
        }
        let grid = Grid::new(cfg.grid.length, cfg.grid.points);
        let p = KinkParams::new(cfg.physics.ell0, cfg.physics.x0);
        let pert = initial_radiation(&grid, &cfg);
        let phi0 = moving_kink(&grid, p, 0.0).add(&pert);
        let mut sc = solver_config(&cfg);
        sc.snapshot_interval = None;
        let ev = evolve(&phi0, &sc)?;
        finals.push((cfg.dt(), RealFinal(ev.final_state.first.clone())));
    }
    let mut rows = Vec::new();
    let mut errs: Vec<Scalar> = Vec::new();
    for k in 0..levels - 1 {
        let e = finals[k].1.sup_diff(&finals[k + 1].1);
        errs.push(e);
    }
    for k in 0..levels {
        let mut cols = vec![("dt".to_string(), finals[k].0)];
        if k < errs.len() {
            cols.push(("err_vs_next".to_string(), errs[k]));
        }
        if k >= 1 && k < errs.len() {
            cols.push(("observed_order".to_string(), (errs[k - 1] / errs[k]).log2()));
        }
        rows.push(SweepRow {
            label: format!("level{k}"),
            status: "ok".to_string(),
            columns: cols,
        });
    }
    Ok(rows)
}

/// Final first-component holder comparable across grids (fine grids are
/// restricted to the coarse nodes, which nest under point doubling).
struct RealFinal(RealField);

impl RealFinal {
    fn sup_diff(&self, finer: &RealFinal) -> Scalar {
        let na = self.0.grid().len();
        let nb = finer.0.grid().len();
        assert!(nb % na == 0, "grids must nest");
        let stride = nb / na;
        (0..na)
            .map(|j| (self.0.values()[j] - finer.0.values()[j * stride]).abs())
            .fold(0.0, Scalar::max)
    }
}

/// Convenience wrapper for error paths in the CLI.
pub fn run_from_files(config: &Path, out_dir: &Path) -> Result<RunOutcome> {
    let cfg = ExperimentConfig::load(config)?;
    run(&cfg, out_dir)
}

pub fn sweep_from_files(
    config: &Path,
    grid_file: &Path,
    out_dir: &Path,
    threads: usize,
) -> Result<Vec<SweepRow>> {
    let cfg = ExperimentConfig::load(config)?;
    let sw = SweepConfig::load(grid_file)?;
    sweep(&cfg, &sw, out_dir, threads)
}

/// Built-in config for the `verify` subcommand.
pub fn verify_config() -> ExperimentConfig {
    ExperimentConfig::from_str(
        r#"
[experiment]
scenario = "verify-identities"

[grid]
length = 80.0
points = 1024

[solver]
dt_factor = 0.5
t_final = 0.0
integrator = "Rk4"

[physics]
ell0 = 0.0
"#,
    )
    .expect("built-in config valid")
}

