//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Criteria 7, 8, 9 share the flagship run (ℓ₀ = 0.2, ε = 0.05) on a domain
//! wide enough that no radiation reaches the boundary by T = 200: the
//! dispersive sup-norm envelope lives on the wave fronts, so absorbing or
//! wrapping them corrupts the measured decay rate. Criterion 2 measures
//! conservation on a smaller periodic box (wrapping is harmless for the
//! conserved integrals).

use kinklab::asymptotics::{
    dyadic_drift, effective_profile, fit_decay, fit_modulation_convergence, mid_band,
    phase_diagnostics,
};
use kinklab::dft::{DistortedBasis, SpectralFunction};
use kinklab::distributions::{
    appendix_a_oracle, appendix_b_oracle, cubic_coeff, null_structure_transform, quad_dist,
    resonant_frequencies, CubicKind, QuadKind, QuadMethod, SignPattern,
};
use kinklab::grid::{FieldPair, Grid};
use kinklab::kink::{conserved_quantities, kernel_elements, moving_kink, KinkParams};
use kinklab::modulation::{fit, FitOptions};
use kinklab::operators::{apply_l, random_smooth_pair, riesz_projections_with};
use kinklab::solver::{
    evolve, evolve_linearized, evolve_moving_frame, exact_moving_kink, FrameEvolution,
    FramePaths, SolverConfig,
};
use kinklab::{Complex, Scalar};
use std::sync::OnceLock;
use std::time::Instant;

fn pass_line(criterion: &str, ok: bool, detail: &str) {
    println!(
        "{} criterion {criterion}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion}: {detail}");
}

// ─── shared flagship run ─────────────────────────────────────────────────

struct Flagship {
    grid: Grid,
    ev: FrameEvolution,
}

/// ε = 0.05 band perturbation of an ℓ₀ = 0.2 kink, T = 200, on a domain wide
/// enough (|y| ≤ 260 vs. max signal range ≈ 240) that every wave front stays
/// inside; no absorbing layer, so the sup-norm sees the true dispersive
/// envelope.
fn flagship() -> &'static Flagship {
    static CELL: OnceLock<Flagship> = OnceLock::new();
    CELL.get_or_init(|| {
        let grid = Grid::new(520.0, 16384);
        let ell0 = 0.2;
        let basis = DistortedBasis::new(&grid, ell0);
        let values: Vec<Complex> = grid
            .freqs()
            .iter()
            .map(|&xi| Complex::new(0.05 * (-((xi - 1.0) / 0.7).powi(2)).exp(), 0.0))
            .collect();
        let u0 = basis.invert_physical(&SpectralFunction::from_values(&grid, values));
        let phi0 = moving_kink(&grid, KinkParams::new(ell0, 0.0), 0.0).add(&u0);
        let d0 = fit(&phi0, KinkParams::new(ell0, 0.0), FitOptions::default()).unwrap();

        let mut cfg = SolverConfig::new(0.45 * grid.spacing() / (1.0 + ell0), 200.0);
        cfg.monitor_interval = 0.5;
        cfg.snapshot_interval = Some(1.0);
        let ev = evolve_moving_frame(
            &d0.radiation,
            FramePaths::CoEvolved {
                ell0: d0.params.ell,
                q0: d0.params.q,
            },
            &cfg,
        )
        .unwrap();
        Flagship { grid, ev }
    })
}

#[test]
fn criterion_1_exact_solution_propagation() {
    let started = Instant::now();
    let grid = Grid::new(80.0, 4096);
    let ell = 0.2;
    let mut cfg = SolverConfig::new(0.5 * grid.spacing(), 50.0);
    cfg.monitor_interval = 10.0;
    let ev = evolve(&moving_kink(&grid, KinkParams::new(ell, 0.0), 0.0), &cfg).unwrap();
    let exact = exact_moving_kink(&grid, ell, 0.0, 50.0);
    let err = ev
        .final_state
        .first
        .sub(&exact.first)
        .sup_norm()
        .max(ev.final_state.second.sub(&exact.second).sup_norm());
    let secs = started.elapsed().as_secs_f64();
    pass_line(
        "1 (exact propagation)",
        err < 1e-6 && secs <= 120.0,
        &format!("sup error {err:.3e} after T=50 in {secs:.1}s"),
    );
}

#[test]
fn criterion_2_conservation() {
    // flagship physics, sponge off, T = 100 (absorbing layers break the
    // conserved integrals by construction)
    let grid = Grid::new(160.0, 4096);
    let ell0 = 0.2;
    let basis = DistortedBasis::new(&grid, ell0);
    let values: Vec<Complex> = grid
        .freqs()
        .iter()
        .map(|&xi| Complex::new(0.05 * (-((xi - 1.0) / 0.7).powi(2)).exp(), 0.0))
        .collect();
    let u0 = basis.invert_physical(&SpectralFunction::from_values(&grid, values));
    let phi0 = moving_kink(&grid, KinkParams::new(ell0, 0.0), 0.0).add(&u0);
    let d0 = fit(&phi0, KinkParams::new(ell0, 0.0), FitOptions::default()).unwrap();
    let mut cfg = SolverConfig::new(0.25 * grid.spacing() / (1.0 + ell0), 100.0);
    cfg.monitor_interval = 5.0;
    cfg.snapshot_interval = Some(10.0);
    let ev = evolve_moving_frame(
        &d0.radiation,
        FramePaths::CoEvolved {
            ell0: d0.params.ell,
            q0: d0.params.q,
        },
        &cfg,
    )
    .unwrap();
    let mut e0 = None;
    let mut worst = (0.0f64, 0.0f64, 0.0f64);
    for (_, u, ell, _) in &ev.snapshots {
        let phi = moving_kink(&grid, KinkParams::new(*ell, 0.0), 0.0).add(u);
        let c = conserved_quantities(&phi);
        match e0 {
            None => e0 = Some((c.energy, c.momentum, c.invariant)),
            Some((e, p, m)) => {
                worst.0 = worst.0.max(((c.energy - e) / e).abs());
                worst.1 = worst.1.max(((c.momentum - p) / p).abs());
                worst.2 = worst.2.max(((c.invariant - m) / m).abs());
            }
        }
    }
    pass_line(
        "2 (conservation)",
        worst.0 < 1e-8 && worst.1 < 1e-8 && worst.2 < 1e-8,
        &format!(
            "relative drift E {:.2e}, P {:.2e}, M {:.2e} over T=100",
            worst.0, worst.1, worst.2
        ),
    );
}

#[test]
fn criterion_3_spectral_identities() {
    let grid = Grid::new(80.0, 4096);
    let mut ok = true;
    let mut notes = Vec::new();
    for &ell in &[0.0, 0.3] {
        let p = KinkParams::new(ell, 0.0);
        let ke = kernel_elements(&grid, p);
        let ly0 = apply_l(&ke.y0, ell);
        let r0 = (ly0.first.l2_norm().powi(2) + ly0.second.l2_norm().powi(2)).sqrt();
        let ly1 = apply_l(&ke.y1, ell).sub(&ke.y0);
        let r1 = (ly1.first.l2_norm().powi(2) + ly1.second.l2_norm().powi(2)).sqrt();
        ok &= r0 < 1e-8 && r1 < 1e-8;
        notes.push(format!("ℓ={ell}: |LY0|={r0:.1e}, |LY1−Y0|={r1:.1e}"));

        // interior resonance residual through a smooth window
        let res = kinklab::kink::threshold_resonances(&grid, p);
        let g = p.gamma();
        let l = grid.length();
        let chi = |x: Scalar| -> Scalar {
            let (a, b) = (0.35 * l, 0.45 * l);
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
        let windowed = kinklab::grid::ComplexPair {
            first: kinklab::grid::ComplexField::from_values(
                &grid,
                grid.nodes()
                    .iter()
                    .zip(res.plus.first.values())
                    .map(|(&x, &v)| v * chi(x))
                    .collect(),
            ),
            second: kinklab::grid::ComplexField::from_values(
                &grid,
                grid.nodes()
                    .iter()
                    .zip(res.plus.second.values())
                    .map(|(&x, &v)| v * chi(x))
                    .collect(),
            ),
        };
        let l_phi = kinklab::operators::apply_l_complex(&windowed, ell);
        let mut worst: Scalar = 0.0;
        for (j, &x) in grid.nodes().iter().enumerate() {
            if x.abs() > 0.3 * l {
                continue;
            }
            let e1 = Complex::new(0.0, 1.0 / g) * res.plus.first.values()[j];
            let e2 = Complex::new(0.0, 1.0 / g) * res.plus.second.values()[j];
            worst = worst
                .max((l_phi.first.values()[j] - e1).norm())
                .max((l_phi.second.values()[j] - e2).norm());
        }
        ok &= worst < 1e-6;
        notes.push(format!("ℓ={ell}: resonance interior {worst:.1e}"));

        // projections and transform kernel
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(1);
        let f = random_smooth_pair(&grid, &mut rng);
        let (_, pe) = riesz_projections_with(&f, &ke);
        let (c2, pe2) = riesz_projections_with(&pe, &ke);
        let idem = pe2.sub(&pe).sup_norm().max(c2.d0.abs()).max(c2.d1.abs());
        ok &= idem < 1e-10;
        let basis = DistortedBasis::new(&grid, ell);
        let t0 = basis.vector_transform(&ke.y0).sup_norm();
        let t1 = basis.vector_transform(&ke.y1).sup_norm();
        ok &= t0 < 1e-7 && t1 < 1e-7;
        notes.push(format!("ℓ={ell}: P_e idem {idem:.1e}, |TY0| {t0:.1e}, |TY1| {t1:.1e}"));
    }
    pass_line("3 (spectral identities)", ok, &notes.join("; "));
}

#[test]
fn criterion_4_distorted_fourier_suite() {
    let started = Instant::now();
    let grid = Grid::new(80.0, 2048);
    let mut ok = true;
    let mut notes = Vec::new();
    for &ell in &[0.0, 0.3] {
        let basis = DistortedBasis::new(&grid, ell);
        let ke = kernel_elements(&grid, KinkParams::new(ell, 0.0));
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(2);
        let f = random_smooth_pair(&grid, &mut rng);
        let (_, pe) = riesz_projections_with(&f, &ke);

        // Plancherel
        let lhs = kinklab::kink::pair_inner(&kinklab::operators::apply_h(&pe, ell), &pe);
        let defect = basis.plancherel_defect(&f, &f) / lhs.abs();
        ok &= defect < 1e-6;

        // physical round trip
        let back = basis.invert_physical(&basis.vector_transform(&pe));
        let diff = back.sub(&pe);
        let rel = (diff.first.l2_norm().powi(2) + diff.second.l2_norm().powi(2)).sqrt()
            / (pe.first.l2_norm().powi(2) + pe.second.l2_norm().powi(2)).sqrt();
        ok &= rel < 1e-6;

        // frequency round trip on band data clear of the |η| kink
        let h = SpectralFunction::from_values(
            &grid,
            grid.freqs()
                .iter()
                .map(|&xi| Complex::new((-((xi - 1.2) / 0.3).powi(2)).exp(), 0.0))
                .collect(),
        );
        let back_h = basis.invert_spectral(&h).sub(&h).sup_norm();
        ok &= back_h < 1e-6;

        // propagator diagonalization against the linearized solver
        let t = 10.0;
        let dt = 0.4 * grid.spacing() / (1.0 + ell);
        let evolved = evolve_linearized(&pe, ell, t, dt).unwrap();
        let lhs_spec = basis.vector_transform(&evolved);
        let rhs_spec = basis.propagator_multiplier(&basis.vector_transform(&pe), t);
        let prop = lhs_spec.sub(&rhs_spec).sup_norm();
        ok &= prop < 1e-4;
        notes.push(format!(
            "ℓ={ell}: planch {defect:.1e}, phys-rt {rel:.1e}, freq-rt {back_h:.1e}, prop {prop:.1e}"
        ));
    }
    let secs = started.elapsed().as_secs_f64();
    ok &= secs <= 60.0;
    pass_line(
        "4 (distorted Fourier suite)",
        ok,
        &format!("{} in {secs:.1}s", notes.join("; ")),
    );
}

#[test]
fn criterion_5_null_structures() {
    let mut ok = true;
    let mut notes = Vec::new();

    // resonant zeros of the normal-form coefficient
    let mut worst_zero: Scalar = 0.0;
    for &ell in &[0.0, 0.4] {
        let (xp, xm) = resonant_frequencies(ell);
        for xi in [xp, xm] {
            worst_zero = worst_zero.max(null_structure_transform(ell, xi).unwrap().norm());
        }
    }
    ok &= worst_zero < 1e-10;
    notes.push(format!("resonant zeros {worst_zero:.1e}"));

    // quadratic closed form vs quadrature on a 9×9 grid
    let ell = 0.3;
    let mut worst_rel: Scalar = 0.0;
    for i in 0..9 {
        for j in 0..9 {
            let x1 = -2.0 + 0.5 * i as Scalar;
            let x2 = -2.0 + 0.5 * j as Scalar;
            let c = quad_dist(QuadKind::PlusMinus, ell, x1, x2, QuadMethod::Closed).unwrap();
            let q = quad_dist(QuadKind::PlusMinus, ell, x1, x2, QuadMethod::Quadrature).unwrap();
            worst_rel = worst_rel.max((c - q).norm() / q.norm().max(1e-8));
        }
    }
    ok &= worst_rel < 1e-8;
    notes.push(format!("μ₊₋ closed-vs-quadrature {worst_rel:.1e}"));

    // cubic diagonal identities at five frequencies
    let mut worst_d: Scalar = 0.0;
    let mut worst_pv: Scalar = 0.0;
    let inv_2pi = 1.0 / (2.0 * std::f64::consts::PI);
    for &xi in &[0.0, 0.7, 1.3, -2.0, -4.0] {
        let d = cubic_coeff(SignPattern::Pmp, CubicKind::Delta0, ell, xi, [xi, xi, xi]);
        let pv = cubic_coeff(SignPattern::Pmp, CubicKind::PrincipalValue, ell, xi, [xi, xi, xi]);
        worst_d = worst_d.max((d - Complex::new(inv_2pi, 0.0)).norm());
        worst_pv = worst_pv.max(pv.norm());
    }
    ok &= worst_d < 1e-12 && worst_pv < 1e-12;
    notes.push(format!("m^δ₀ diag {worst_d:.1e}, m^pv diag {worst_pv:.1e}"));

    // Appendix B factorizations on a 5³ grid
    let reports = appendix_b_oracle(5).unwrap();
    let b_ok = reports.iter().all(|r| r.max_rel_err < 1e-7);
    ok &= b_ok;
    notes.push(format!(
        "deepnull max rel errs {:?}",
        reports.iter().map(|r| r.max_rel_err).collect::<Vec<_>>()
    ));

    pass_line("5 (null structures)", ok, &notes.join("; "));
}

#[test]
fn criterion_6_fourier_identity_oracle() {
    let reports = appendix_a_oracle().unwrap();
    let mut ok = true;
    let mut flagged = Vec::new();
    for r in &reports {
        let resolved_err = if r.verdict.contains("misprinted") {
            flagged.push(r.identity.clone());
            r.max_rel_err_corrected.unwrap_or(Scalar::INFINITY)
        } else {
            r.max_rel_err_printed
        };
        ok &= resolved_err < 1e-9;
    }
    // the sech case must be among the empirically resolved misprints
    ok &= flagged.iter().any(|n| n == "sech");
    pass_line(
        "6 (Fourier identity oracle)",
        ok,
        &format!("all resolved to 1e-9; misprinted entries recorded: {flagged:?}"),
    );
}

#[test]
fn criterion_7_dispersive_decay() {
    let started = Instant::now();
    let fs = flagship();
    let series = fs.ev.record.series(|s| s.sup_u1);
    let fit = fit_decay(&series, (20.0, 200.0));
    let secs = started.elapsed().as_secs_f64();
    pass_line(
        "7 (dispersive decay)",
        (fit.exponent + 0.5).abs() <= 0.1 && secs <= 600.0,
        &format!(
            "sup|u₁| exponent {:.3} ± {:.3} over [20,200] ({secs:.0}s incl. shared run)",
            fit.exponent, fit.stderr
        ),
    );
}

#[test]
fn criterion_8_modulation_convergence() {
    let fs = flagship();
    let (_, qdot_fit) = fit_modulation_convergence(&fs.ev.record, (20.0, 200.0));
    let max_defect = fs
        .ev
        .record
        .samples
        .iter()
        .map(|s| {
            s.defect_q
                .unwrap_or(0.0)
                .abs()
                .max(s.defect_ell.unwrap_or(0.0).abs())
        })
        .fold(0.0f64, Scalar::max);
    pass_line(
        "8 (modulation convergence)",
        (qdot_fit.exponent + 1.0).abs() <= 0.3 && max_defect < 1e-7,
        &format!(
            "|q̇−ℓ| exponent {:.3}, max orthogonality defect {max_defect:.2e}",
            qdot_fit.exponent
        ),
    );
}

#[test]
fn criterion_9_modified_scattering_signature() {
    let fs = flagship();
    let ell_bar = fs.ev.final_params.ell;
    let snapshots: Vec<(Scalar, FieldPair)> = fs
        .ev
        .snapshots
        .iter()
        .map(|(t, u, _, _)| (*t, u.clone()))
        .collect();
    let series = effective_profile(&fs.grid, &snapshots, ell_bar);
    let q0 = fs.ev.snapshots.first().map(|s| s.3).unwrap();
    let theta: Vec<Scalar> = fs
        .ev
        .snapshots
        .iter()
        .map(|(t, _, _, q)| q - q0 - ell_bar * t)
        .collect();
    let diags = phase_diagnostics(&series, &theta);
    let band = mid_band(ell_bar);

    let idx: Vec<usize> = series
        .times
        .iter()
        .enumerate()
        .filter(|(_, &t)| (20.0..=200.0).contains(&t))
        .map(|(i, _)| i)
        .collect();
    let sups: Vec<Scalar> = idx.iter().map(|&i| series.weighted_sup(i, band)).collect();
    let (lo, hi) = sups
        .iter()
        .fold((Scalar::INFINITY, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
    let variation = (hi - lo) / hi;

    // phase bookkeeping: measured secular rotation vs the (Λ, ξθ) prediction
    // at a few band frequencies
    let (i1, i2) = (idx[0], *idx.last().unwrap());
    for &probe in &[0.8, 1.2, 1.6] {
        let k = series.profiles[0]
            .freqs()
            .iter()
            .enumerate()
            .filter(|(_, &xi)| band(xi))
            .min_by(|a, b| (a.1 - probe).abs().partial_cmp(&(b.1 - probe).abs()).unwrap())
            .map(|(k, _)| k)
            .unwrap();
        let xi = series.profiles[0].freqs()[k];
        let g1 = series.profiles[i1].values()[k];
        let g2 = series.profiles[i2].values()[k];
        let measured = (g2 / g1).arg();
        let d_lambda = diags.lambda[i2][k] - diags.lambda[i1][k];
        let d_xtheta = xi * (diags.theta[i2] - diags.theta[i1]);
        println!(
            "phase probe ξ={xi:.3}: measured {measured:+.3e}, ΔΛ {d_lambda:+.3e}, ξΔθ {d_xtheta:+.3e}, |g| {:.3e}",
            g1.norm()
        );
    }

    let drift = dyadic_drift(&series, &diags, (20.0, 200.0), band);
    pass_line(
        "9 (modified scattering signature)",
        variation < 0.25 && drift.improvement >= 2.0,
        &format!(
            "band sup variation {:.1}%, phase-corrected drift improvement {:.2}x \
             (uncorrected {:.3e}, corrected {:.3e})",
            100.0 * variation,
            drift.improvement,
            drift.max_uncorrected,
            drift.max_corrected
        ),
    );
}

#[test]
fn criterion_10_determinism_hash() {
    // identical config + seed ⇒ bit-identical artifacts
    let cfg = kinklab::harness::ExperimentConfig::from_str(
        r#"
[experiment]
scenario = "boosted-kink"
seed = 7

[grid]
length = 80.0
points = 1024

[solver]
dt_factor = 0.45
t_final = 12.0
integrator = "Rk4"
sponge = true
monitor_interval = 0.5
snapshot_interval = 1.0

[physics]
ell0 = 0.2
perturbation = "dft-band"
amplitude = 0.02
width = 0.7
center = 1.0

[diagnostics]
fit_window = [2.0, 12.0]
"#,
    )
    .unwrap();
    let dir1 = std::env::temp_dir().join("kinklab_det_a");
    let dir2 = std::env::temp_dir().join("kinklab_det_b");
    let _ = std::fs::remove_dir_all(&dir1);
    let _ = std::fs::remove_dir_all(&dir2);
    let out1 = kinklab::harness::run(&cfg, &dir1).unwrap();
    let out2 = kinklab::harness::run(&cfg, &dir2).unwrap();
    pass_line(
        "10 (determinism hash)",
        out1.manifest.content_hash == out2.manifest.content_hash,
        &format!(
            "hashes {}… vs {}…",
            &out1.manifest.content_hash[..12],
            &out2.manifest.content_hash[..12]
        ),
    );
}
