//! Cross-validation between independent computational routes: lab-frame vs
//! moving-frame evolution, propagator diagonalization vs direct time
//! stepping, modulation ODE right-hand sides vs differentiated fits, the
//! dt-halving convergence order, and the Lorentz covariance smoke test.

use kinklab::asymptotics::effective_profile;
use kinklab::dft::{DistortedBasis, SpectralFunction};
use kinklab::grid::{phase_shift, FieldPair, Grid};
use kinklab::kink::{kernel_elements, moving_kink, KinkParams};
use kinklab::modulation::{fit, modulation_rhs, FitOptions};
use kinklab::operators::{random_smooth_pair, riesz_projections_with};
use kinklab::solver::{
    evolve, evolve_moving_frame, exact_moving_kink, FramePaths, SolverConfig,
};
use kinklab::{Complex, Scalar};
use rand::SeedableRng;

/// Lab-frame evolution of K + εu₀ against the co-evolved moving-frame
/// radiation, compared after re-centering.
#[test]
fn lab_and_moving_frame_agree() {
    let grid = Grid::new(80.0, 2048);
    let ell0 = 0.2;
    let eps = 0.01;
    let bump = FieldPair::new(
        grid.sample(move |y| eps * (-(y * y) / 4.0).exp()),
        grid.sample(move |y| -0.5 * eps * (-(y * y) / 4.0).exp()),
    );
    let phi0 = moving_kink(&grid, KinkParams::new(ell0, 0.0), 0.0).add(&bump);
    let d0 = fit(&phi0, KinkParams::new(ell0, 0.0), FitOptions::default()).unwrap();

    let t_final = 20.0;
    let mut cfg = SolverConfig::new(0.4 * grid.spacing() / (1.0 + ell0), t_final);
    cfg.monitor_interval = t_final;
    let lab = evolve(&phi0, &cfg).unwrap();
    let frame = evolve_moving_frame(
        &d0.radiation,
        FramePaths::CoEvolved {
            ell0: d0.params.ell,
            q0: d0.params.q,
        },
        &cfg,
    )
    .unwrap();

    // reconstruct the lab state from the moving-frame data:
    // φ(x) = K_{ℓ(T),q(T)}(x) + u(x − q(T)); the kink is resampled
    // analytically at the shifted center, the decaying radiation spectrally
    let p_final = frame.final_params;
    let shifted_kink = moving_kink(&grid, KinkParams::new(p_final.ell, p_final.q), 0.0);
    let recon = FieldPair::new(
        shifted_kink
            .first
            .add(&phase_shift(&frame.final_u.first, p_final.q)),
        shifted_kink
            .second
            .add(&phase_shift(&frame.final_u.second, p_final.q)),
    );
    let err = recon.sub(&lab.final_state).sup_norm();
    assert!(err < 1e-5, "frame reconstruction differs by {err:.3e}");
}

/// e^{t𝐋}P_e via the distorted transform multiplier against RK4 stepping.
#[test]
fn propagator_diagonalization_cross_oracle() {
    let grid = Grid::new(80.0, 2048);
    for &ell in &[0.0, 0.3] {
        let basis = DistortedBasis::new(&grid, ell);
        let ke = kernel_elements(&grid, KinkParams::new(ell, 0.0));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let f = random_smooth_pair(&grid, &mut rng);
        let (_, pe) = riesz_projections_with(&f, &ke);
        let t = 10.0;
        let dt = 0.4 * grid.spacing() / (1.0 + ell);
        let evolved = kinklab::solver::evolve_linearized(&pe, ell, t, dt).unwrap();
        let via_multiplier = basis.propagator_multiplier(&basis.vector_transform(&pe), t);
        let err = basis
            .vector_transform(&evolved)
            .sub(&via_multiplier)
            .sup_norm();
        assert!(err < 1e-4, "ell={ell}: {err:.3e}");
    }
}

/// On linear evolution the effective profile is time-independent.
#[test]
fn effective_profile_constant_under_linear_flow() {
    let grid = Grid::new(80.0, 2048);
    let ell = 0.2;
    let ke = kernel_elements(&grid, KinkParams::new(ell, 0.0));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
    let f = random_smooth_pair(&grid, &mut rng);
    let (_, pe) = riesz_projections_with(&f, &mut { ke });
    let dt = 0.4 * grid.spacing() / (1.0 + ell);
    let mut snapshots = vec![(0.0, pe.clone())];
    for k in 1..=10 {
        let t = k as Scalar;
        snapshots.push((t, kinklab::solver::evolve_linearized(&pe, ell, t, dt).unwrap()));
    }
    let series = effective_profile(&grid, &snapshots, ell);
    let base = &series.profiles[0];
    let mut worst: Scalar = 0.0;
    for p in &series.profiles[1..] {
        worst = worst.max(p.sub(base).sup_norm());
    }
    assert!(worst < 1e-4, "profile drift {worst:.3e}");
}

/// Modulation ODE right-hand sides against finite differences of fitted
/// parameters along a lab-frame trajectory.
#[test]
fn modulation_rhs_matches_fitted_trajectory() {
    let grid = Grid::new(80.0, 2048);
    let ell0 = 0.15;
    let eps = 0.04;
    let bump = FieldPair::new(
        grid.sample(move |y| eps * y * (-(y * y) / 2.0).exp()),
        grid.zeros(),
    );
    let phi0 = moving_kink(&grid, KinkParams::new(ell0, 0.0), 0.0).add(&bump);
    let dt_sample = 0.1;
    let mut cfg = SolverConfig::new(0.4 * grid.spacing() / (1.0 + ell0), 3.0);
    cfg.monitor_interval = 3.0;
    cfg.snapshot_interval = Some(dt_sample);
    let ev = evolve(&phi0, &cfg).unwrap();

    // fit every snapshot; difference the parameter paths at the midpoint
    let mut fits = Vec::new();
    let mut seed = KinkParams::new(ell0, 0.0);
    for (_, phi) in &ev.snapshots {
        let d = fit(phi, seed, FitOptions::default()).unwrap();
        seed = d.params;
        fits.push(d);
    }
    let mid = fits.len() / 2;
    // 4th-order five-point stencil; the spacing comes from the recorded
    // snapshot times (the solver rounds the cadence to whole steps)
    let spacing = ev.snapshots[mid + 1].0 - ev.snapshots[mid].0;
    let stencil = |k: i32| -> (f64, f64) {
        let f = &fits[(mid as i32 + k) as usize];
        (f.params.ell, f.params.q)
    };
    let ell_dot_fd = (-stencil(2).0 + 8.0 * stencil(1).0 - 8.0 * stencil(-1).0 + stencil(-2).0)
        / (12.0 * spacing);
    let q_dot_fd = (-stencil(2).1 + 8.0 * stencil(1).1 - 8.0 * stencil(-1).1 + stencil(-2).1)
        / (12.0 * spacing);
    let (ell_dot, q_rel) = modulation_rhs(&fits[mid]).unwrap();
    let q_dot = q_rel + fits[mid].params.ell;

    let scale = ell_dot_fd.abs().max(1e-6);
    assert!(
        (ell_dot - ell_dot_fd).abs() / scale < 0.05,
        "ℓ̇ {ell_dot:.3e} vs finite-difference {ell_dot_fd:.3e}"
    );
    let qscale = (q_dot_fd - fits[mid].params.ell).abs().max(1e-6);
    assert!(
        (q_dot - q_dot_fd).abs() / qscale < 0.05,
        "q̇ {q_dot:.6} vs finite-difference {q_dot_fd:.6}"
    );
}

/// Orthogonality defects stay small per unit time in a co-evolved run.
#[test]
fn coevolved_defect_drift_rate() {
    let grid = Grid::new(80.0, 2048);
    let ell0 = 0.2;
    let basis = DistortedBasis::new(&grid, ell0);
    let values: Vec<Complex> = grid
        .freqs()
        .iter()
        .map(|&xi| Complex::new(0.02 * (-((xi - 1.0) / 0.7).powi(2)).exp(), 0.0))
        .collect();
    let u0 = basis.invert_physical(&SpectralFunction::from_values(&grid, values));
    let phi0 = moving_kink(&grid, KinkParams::new(ell0, 0.0), 0.0).add(&u0);
    let d0 = fit(&phi0, KinkParams::new(ell0, 0.0), FitOptions::default()).unwrap();
    let mut cfg = SolverConfig::new(0.4 * grid.spacing() / (1.0 + ell0), 10.0);
    cfg.monitor_interval = 1.0;
    let ev = evolve_moving_frame(
        &d0.radiation,
        FramePaths::CoEvolved {
            ell0: d0.params.ell,
            q0: d0.params.q,
        },
        &cfg,
    )
    .unwrap();
    for pair in ev.record.samples.windows(2) {
        let d_t = pair[1].t - pair[0].t;
        let jump = (pair[1].defect_q.unwrap() - pair[0].defect_q.unwrap())
            .abs()
            .max((pair[1].defect_ell.unwrap() - pair[0].defect_ell.unwrap()).abs());
        assert!(
            jump / d_t < 1e-7,
            "defect drift {:.3e} per unit time at t={}",
            jump / d_t,
            pair[0].t
        );
    }
}

/// Richardson dt-halving study through the harness sweep: observed temporal
/// order 4 for RK4.
#[test]
fn rk4_convergence_order() {
    let base = kinklab::harness::ExperimentConfig::from_str(
        r#"
[experiment]
scenario = "stationary-kink"
seed = 1

[grid]
length = 80.0
points = 1024

[solver]
dt_factor = 0.5
t_final = 5.0
integrator = "Rk4"
monitor_interval = 5.0

[physics]
ell0 = 0.0
perturbation = "gaussian-bump"
amplitude = 0.05
width = 1.5
"#,
    )
    .unwrap();
    let sweep_cfg = kinklab::harness::SweepConfig::from_str(
        r#"
[sweep]
mode = "convergence"
levels = 4
"#,
    )
    .unwrap();
    let dir = std::env::temp_dir().join("kinklab_convergence");
    let _ = std::fs::remove_dir_all(&dir);
    let rows = kinklab::harness::sweep(&base, &sweep_cfg, &dir, 1).unwrap();
    let orders: Vec<Scalar> = rows
        .iter()
        .flat_map(|r| {
            r.columns
                .iter()
                .filter(|(n, _)| n == "observed_order")
                .map(|(_, v)| *v)
        })
        .collect();
    assert!(!orders.is_empty());
    for order in &orders {
        assert!((order - 4.0).abs() < 0.2, "observed orders {orders:?}");
    }
}

/// Lorentz covariance smoke test: a boosted run equals the boost of the
/// (trivially evolved) static run after the coordinate change.
#[test]
fn lorentz_covariance_smoke() {
    let grid = Grid::new(80.0, 2048);
    let ell = 0.3;
    let t_final = 8.0;
    let mut cfg = SolverConfig::new(0.4 * grid.spacing() / (1.0 + ell), t_final);
    cfg.monitor_interval = t_final;

    // static run: the kink sits still, so its trajectory is known exactly;
    // boosting that trajectory gives the moving kink, which must match the
    // boosted run within solver tolerance
    let static_run = evolve(&moving_kink(&grid, KinkParams::new(0.0, 0.0), 0.0), &cfg).unwrap();
    let static_drift = static_run
        .final_state
        .sub(&moving_kink(&grid, KinkParams::new(0.0, 0.0), 0.0))
        .sup_norm();
    assert!(static_drift < 1e-8, "static kink moved by {static_drift:.3e}");

    let boosted_run = evolve(&moving_kink(&grid, KinkParams::new(ell, 0.0), 0.0), &cfg).unwrap();
    let boosted_exact = exact_moving_kink(&grid, ell, 0.0, t_final);
    let err = boosted_run.final_state.sub(&boosted_exact).sup_norm();
    assert!(err < 1e-6, "boosted run off the boosted trajectory by {err:.3e}");
}
