//! Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
//!
//! Runs as a plain binary (`harness = false`) so that every line is printed
//! regardless of outcome; the process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use faer::c64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use liouspec::fock::FockSpace;
use liouspec::liouville::{applicable_rule, assemble, block_decompose, SectorRule};
use liouspec::models::{DissipationChannel, HamiltonianParams, ModelSpec};
use liouspec::qpt::{
    detect_first_order_jump, detect_gap_closing, detect_kissing_point, evaluate, fit_power_law,
    hamiltonian_order_parameter, locate_gap_maximum, model_at_size, order_parameter, sweep, Axis, Observable,
    SweepConfig, DEFAULT_JUMP_FACTOR, GAP_CLOSED_TOL,
};
use liouspec::quasispin::{
    enumerate_jm, oracle_harmonic, oracle_kerr, oracle_quadratic_dissipation, oracle_squeezed_harmonic, oracle_su2,
};
use liouspec::spectra::{
    clusters, conjugation_defect, dense_eigenvalues, eigendecompose, lambdas, match_into, match_spectra,
    max_multiplicity, sort_spectrum, spectrum, steady_state, transfer_labels, SpectrumPoint, Strategy,
};
use liouspec::Result;

// Tolerances and limits, as stated by the criteria.
const C1_MATCH_TOL: f64 = 1e-8;
const C1_MIRROR_TOL: f64 = 1e-9;
const C1_RUNTIME_S: f64 = 1.0;
const C2_MATCH_TOL: f64 = 1e-8;
const C2_RUNTIME_S: f64 = 5.0;
const C3_MATCH_TOL: f64 = 1e-8;
const C5_MATCH_TOL: f64 = 1e-4;
const C5_RUNTIME_S: f64 = 30.0;
const C6_HAM_TOL_ETA_M1: f64 = 0.05;
const C6_HAM_TOL_ETA_M2: f64 = 0.1;
const C6_LIOU_TOL: f64 = 0.1;
const C7_EXPONENT: f64 = -0.6365;
const C7_EXPONENT_TOL: f64 = 0.05;
const C7_AMPLITUDE: f64 = 0.2065;
const C7_AMPLITUDE_REL_TOL: f64 = 0.10;
const C7_RUNTIME_S: f64 = 60.0;
const C8_EXPONENT: f64 = -0.4699;
const C8_EXPONENT_TOL: f64 = 0.15;
const C8_WINDOW: (f64, f64) = (0.5, 0.8);
const C9_WINDOW: (f64, f64) = (0.15, 0.40);
const C9_GAP_AGREEMENT: f64 = 0.05;
const C10_TX_ZERO: f64 = 20.0;
const C10_TX_TOL: f64 = 1e-6;
const C11_MATCH_TOL: f64 = 1e-6;
const C11_RUNTIME_S: f64 = 10.0;
const C14_CASES: usize = 100;
const C14_MAX_RE: f64 = 1e-9;
const C14_ZERO_TOL: f64 = 1e-9;
const C14_CONJ_TOL: f64 = 1e-8;
const C14_BLOCK_TOL: f64 = 1e-10;
const C14_SEED: u64 = 20_240_601;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

fn model(h: HamiltonianParams, channels: Vec<DissipationChannel>) -> ModelSpec {
    ModelSpec::new(h, channels)
}

fn numeric(m: &ModelSpec, space: FockSpace, strategy: Strategy) -> Result<Vec<SpectrumPoint>> {
    let l = assemble(&m.hamiltonian, &m.channels, space)?;
    Ok(sort_spectrum(spectrum(&l, strategy)?))
}

fn c1() -> Result<Verdict> {
    let t = Instant::now();
    let space = FockSpace::with_dim(10)?;
    let m = model(HamiltonianParams::harmonic(-1.0), vec![DissipationChannel::linear(0.1)]);
    let num = lambdas(&numeric(&m, space, Strategy::Auto)?);
    let d = match_spectra(&num, &lambdas(&oracle_harmonic(-1.0, 0.1, 10)))?;
    let mirrored: Vec<c64> = num.iter().map(|l| c64::new(-0.1 * 9.0, 0.0) - l.conj()).collect();
    let mirror = match_spectra(&num, &mirrored)?;
    let secs = t.elapsed().as_secs_f64();
    Ok(verdict(
        d < C1_MATCH_TOL && mirror < C1_MIRROR_TOL && secs < C1_RUNTIME_S,
        format!("match {d:.2e} (< {C1_MATCH_TOL:e}), mirror {mirror:.2e} (< {C1_MIRROR_TOL:e}), {secs:.3} s (< {C1_RUNTIME_S} s)"),
    ))
}

fn c2() -> Result<Verdict> {
    let t = Instant::now();
    let space = FockSpace::with_dim(10)?;
    let mut worst: f64 = 0.0;
    for eta in [-1.0, 0.0, 1.0, 2.0, 3.0, 4.0] {
        let m = model(HamiltonianParams::kerr(eta), vec![DissipationChannel::linear(0.1)]);
        let num = lambdas(&numeric(&m, space, Strategy::Auto)?);
        worst = worst.max(match_spectra(&num, &lambdas(&oracle_kerr(eta + 1.0, 0.1, 10)))?);
    }
    let secs = t.elapsed().as_secs_f64();
    Ok(verdict(
        worst < C2_MATCH_TOL && secs < C2_RUNTIME_S,
        format!("worst match over eta in -1..4: {worst:.2e} (< {C2_MATCH_TOL:e}), {secs:.3} s (< {C2_RUNTIME_S} s)"),
    ))
}

fn c3() -> Result<Verdict> {
    let space = FockSpace::with_dim(10)?;
    let m = model(HamiltonianParams::kerr(3.0), vec![DissipationChannel::quadratic(0.1)]);
    let num = lambdas(&numeric(&m, space, Strategy::Auto)?);
    let d = match_spectra(&num, &lambdas(&oracle_quadratic_dissipation(4.0, 0.1, 10)))?;
    Ok(verdict(
        d < C3_MATCH_TOL,
        format!("eta'=4, kappa2=0.1: match {d:.2e} (< {C3_MATCH_TOL:e})"),
    ))
}

fn c4() -> Result<Verdict> {
    let kappa = 0.1;
    let mut labels_equal = true;
    let mut accumulation_ok = true;
    for two_j in 1..=5u32 {
        let mut a = oracle_su2(two_j, kappa);
        let mut b = enumerate_jm(two_j, kappa);
        a.sort_by_key(|p| p.dyad);
        b.sort_by_key(|p| p.dyad);
        // exact equality of values and labels (f64 `==`, so ±0 compare equal)
        labels_equal &= a.len() == b.len()
            && a.iter()
                .zip(&b)
                .all(|(x, y)| x.dyad == y.dyad && x.lambda == y.lambda && x.quasi_spin == y.quasi_spin && x.jm == y.jm);
        let j = two_j as f64 / 2.0;
        let at_point = oracle_su2(two_j, kappa)
            .iter()
            .filter(|p| p.lambda == c64::new(-kappa * j, 0.0))
            .count();
        accumulation_ok &= at_point == two_j as usize + 1;
    }
    let spinor_real = oracle_su2(1, kappa).iter().all(|p| p.im() == 0.0);
    // numeric Kerr spectra: accumulation cluster multiplicity 5 (eta=3) and 6 (eta=4)
    let mut numeric_mult = Vec::new();
    for eta in [3.0, 4.0] {
        let m = model(HamiltonianParams::kerr(eta), vec![DissipationChannel::linear(kappa)]);
        let num = lambdas(&numeric(&m, FockSpace::with_dim(10)?, Strategy::Auto)?);
        let target = c64::new(-kappa * (eta + 1.0) / 2.0, 0.0);
        let mult = clusters(&num)
            .into_iter()
            .min_by(|x, y| (x.center - target).norm().total_cmp(&(y.center - target).norm()))
            .map_or(0, |c| c.multiplicity());
        numeric_mult.push(mult);
    }
    Ok(verdict(
        labels_equal && accumulation_ok && spinor_real && numeric_mult == [5, 6],
        format!(
            "labelled multisets equal: {labels_equal}; accumulation at -kappa*j with multiplicity 2j+1: {accumulation_ok}; \
             j=1/2 all real: {spinor_real}; numeric multiplicity eta=3,4: {numeric_mult:?} (want [5, 6])"
        ),
    ))
}

fn c5() -> Result<Verdict> {
    let t = Instant::now();
    let space = FockSpace::with_dim(60)?;
    let m = model(
        HamiltonianParams::squeezed_harmonic(-1.0, 0.2),
        vec![DissipationChannel::linear(0.1)],
    );
    let sorted = numeric(&m, space, Strategy::Blocks(SectorRule::Z2Parity))?;
    let low = lambdas(&sorted[..20]);
    // oracle points up to n1 + n2 = 6 cover the 20 slowest with room for ties
    let pool = lambdas(&oracle_squeezed_harmonic(1.0, 0.2, 0.1, 28)?);
    let d = match_into(&low, &pool)?;
    let secs = t.elapsed().as_secs_f64();
    Ok(verdict(
        d < C5_MATCH_TOL && secs < C5_RUNTIME_S,
        format!("20 slowest vs oracle: {d:.2e} (< {C5_MATCH_TOL:e}), z2 blocks {secs:.1} s (< {C5_RUNTIME_S} s)"),
    ))
}

fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step).round() as usize;
    (0..=n).map(|k| start + step * k as f64).collect()
}

fn c6() -> Result<Verdict> {
    let space = FockSpace::new(100);
    let ham = |eta: f64, hi: f64| -> String {
        match detect_kissing_point(&HamiltonianParams::dimensionless(eta, 0.0), &grid(0.0, hi, 0.05), space) {
            Ok(k) => format!(
                "{:.4} (gap {:.2e}{})",
                k.xi,
                k.gap,
                if k.boundary { ", boundary" } else { "" }
            ),
            Err(e) => format!("error: {e}"),
        }
    };
    let ok = |eta: f64, hi: f64, want: f64, tol: f64| {
        detect_kissing_point(&HamiltonianParams::dimensionless(eta, 0.0), &grid(0.0, hi, 0.05), space)
            .map(|k| (k.xi - want).abs() <= tol)
            .unwrap_or(false)
    };
    let a = ok(-1.0, 4.0, 2.0, C6_HAM_TOL_ETA_M1);
    let b = ok(-2.0, 8.0, 4.0, C6_HAM_TOL_ETA_M2);
    let m = model(
        HamiltonianParams::dimensionless(-1.0, 0.0),
        vec![DissipationChannel::linear(0.1)],
    );
    let closing = detect_gap_closing(&m, &grid(1.0, 3.0, 0.1), FockSpace::with_dim(40)?, GAP_CLOSED_TOL)?;
    let c = (closing.xi - 2.0).abs() <= C6_LIOU_TOL;
    Ok(verdict(
        a && b && c,
        format!(
            "Hamiltonian N=100: eta=-1 -> {} (want 2 +- {C6_HAM_TOL_ETA_M1}) [{}]; eta=-2 -> {} (want 4 +- {C6_HAM_TOL_ETA_M2}) [{}]; \
             Liouvillian |Im l1| N_Fock=40: min at {:.4} (want 2 +- {C6_LIOU_TOL}, closed: {}) [{}]",
            ham(-1.0, 4.0),
            pass_word(a),
            ham(-2.0, 8.0),
            pass_word(b),
            closing.xi,
            closing.closed,
            pass_word(c)
        ),
    ))
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn hamiltonian_nu_fit(sizes: &[usize]) -> Result<liouspec::qpt::ScalingFit> {
    let pts: Vec<(f64, f64)> = sizes
        .iter()
        .map(|&n| {
            let nu = hamiltonian_order_parameter(&HamiltonianParams::scaled(-1.0, 0.5, n), FockSpace::new(n))?;
            Ok((n as f64, nu))
        })
        .collect::<Result<_>>()?;
    fit_power_law(&pts)
}

fn c7() -> Result<Verdict> {
    let t = Instant::now();
    let fit = hamiltonian_nu_fit(&[200, 500, 1000])?;
    let secs = t.elapsed().as_secs_f64();
    let exp_ok = (fit.exponent - C7_EXPONENT).abs() <= C7_EXPONENT_TOL;
    let rel = fit.amplitude / C7_AMPLITUDE - 1.0;
    let amp_ok = rel.abs() <= C7_AMPLITUDE_REL_TOL;
    Ok(verdict(
        exp_ok && amp_ok && secs < C7_RUNTIME_S,
        format!(
            "N in {{200,500,1000}}: nu = {:.4} N^{:.4}; exponent {} (want {C7_EXPONENT} +- {C7_EXPONENT_TOL}); \
             amplitude off by {:+.1}% {} (want +-{:.0}%); {secs:.2} s",
            fit.amplitude,
            fit.exponent,
            pass_word(exp_ok),
            100.0 * rel,
            pass_word(amp_ok),
            100.0 * C7_AMPLITUDE_REL_TOL
        ),
    ))
}

fn scaled_template(eta: f64) -> ModelSpec {
    model(
        HamiltonianParams::scaled(eta, 0.0, 1),
        vec![DissipationChannel::linear(0.1)],
    )
}

fn c8() -> Result<Verdict> {
    let template = scaled_template(-1.0);
    let sizes = [10usize, 20, 40];
    let mut nu_pts = Vec::new();
    let mut maxima = Vec::new();
    for &n in &sizes {
        let (m, space) = model_at_size(&template, n);
        let at_c = m.hamiltonian.with_chi(0.5);
        nu_pts.push((n as f64, order_parameter(&at_c, &m.channels, space)?));
        let g = locate_gap_maximum(&m, space, 0.3, C8_WINDOW.1, 11, C8_WINDOW.1)?;
        maxima.push(g.chi);
    }
    let fit = fit_power_law(&nu_pts)?;
    let exp_ok = (fit.exponent - C8_EXPONENT).abs() <= C8_EXPONENT_TOL;
    let in_window = maxima.iter().all(|&c| (C8_WINDOW.0..=C8_WINDOW.1).contains(&c));
    let decreasing = maxima.windows(2).all(|w| w[1] < w[0]);
    Ok(verdict(
        exp_ok && in_window && decreasing,
        format!(
            "nu(0.5) = {:.4} N^{:.4} (exponent want {C8_EXPONENT} +- {C8_EXPONENT_TOL}); chi_max N=10,20,40: \
             {:.4}, {:.4}, {:.4} (in [{}, {}]: {in_window}, decreasing: {decreasing})",
            fit.amplitude, fit.exponent, maxima[0], maxima[1], maxima[2], C8_WINDOW.0, C8_WINDOW.1
        ),
    ))
}

fn c9() -> Result<Verdict> {
    let template = scaled_template(1.0);
    let result = sweep(&SweepConfig {
        model: template.clone(),
        axis: Axis::Chi,
        grid: grid(0.0, 0.5, 0.01),
        n_list: vec![20, 40],
        observables: vec![Observable::Nu],
    })?;
    let j20 = detect_first_order_jump(&result.series(20, Observable::Nu), DEFAULT_JUMP_FACTOR)?;
    let j40 = detect_first_order_jump(&result.series(40, Observable::Nu), DEFAULT_JUMP_FACTOR)?;
    let inside = |c: f64| c > C9_WINDOW.0 && c < C9_WINDOW.1;
    let jumps_ok = inside(j20.chi_c) && inside(j40.chi_c) && j40.chi_c > j20.chi_c;
    let gaps = sweep(&SweepConfig {
        model: template,
        axis: Axis::Chi,
        grid: grid(0.0, 0.08, 0.02),
        n_list: vec![20, 40],
        observables: vec![Observable::Gap, Observable::Gap2],
    })?;
    let mut worst: f64 = 0.0;
    for row in &gaps.rows {
        let (d1, d2) = (row.values[0].unwrap_or(f64::NAN), row.values[1].unwrap_or(f64::NAN));
        worst = worst.max(((d1 - d2) / d1).abs());
    }
    let gaps_ok = worst <= C9_GAP_AGREEMENT;
    Ok(verdict(
        jumps_ok && gaps_ok,
        format!(
            "jump chi_c N=20: {:.3} (size {:+.3}), N=40: {:.3} (size {:+.3}), want both in ({}, {}) and increasing [{}]; \
             max |D1-D2|/D1 for chi <= 0.08: {worst:.2e} (<= {C9_GAP_AGREEMENT}) [{}]",
            j20.chi_c,
            j20.size,
            j40.chi_c,
            j40.size,
            C9_WINDOW.0,
            C9_WINDOW.1,
            pass_word(jumps_ok),
            pass_word(gaps_ok)
        ),
    ))
}

fn relaxation(eta: f64, xi: f64, channel: DissipationChannel) -> Result<f64> {
    let m = model(HamiltonianParams::dimensionless(eta, xi), vec![channel]);
    evaluate(&m, FockSpace::with_dim(40)?, &[Observable::TX], Strategy::Auto)
        .pop()
        .expect("one observable")
}

fn c10() -> Result<Verdict> {
    let ch = DissipationChannel::linear(0.1);
    let t3 = relaxation(3.0, 4.0, ch)?;
    let t4 = relaxation(4.0, 4.0, ch)?;
    let t5 = relaxation(5.0, 4.0, ch)?;
    let mut worst: f64 = 0.0;
    for eta in 0..=4 {
        worst = worst.max((relaxation(eta as f64, 0.0, ch)? - C10_TX_ZERO).abs());
    }
    let peak = t4 > t3 && t4 > t5;
    Ok(verdict(
        peak && worst <= C10_TX_TOL,
        format!(
            "xi=4: T_X(eta=3,4,5) = {t3:.4e}, {t4:.4e}, {t5:.4e} (even peak: {peak}); \
             max |T_X(xi=0) - 20| over eta 0..4: {worst:.2e} (<= {C10_TX_TOL:e})"
        ),
    ))
}

fn c11() -> Result<Verdict> {
    let t = Instant::now();
    let space = FockSpace::with_dim(120)?;
    let mut oracle = oracle_harmonic(-1.0, 0.1, 120);
    oracle.sort_by(|a, b| a.re().abs().total_cmp(&b.re().abs()));
    let pool = lambdas(&oracle[..28]);
    let mut worst: f64 = 0.0;
    for n_th in [0.1, 0.2, 0.5] {
        let m = model(
            HamiltonianParams::harmonic(-1.0),
            vec![DissipationChannel::thermal(0.1, n_th)],
        );
        let sorted = numeric(&m, space, Strategy::Blocks(SectorRule::U1Coherence))?;
        worst = worst.max(match_into(&lambdas(&sorted[..20]), &pool)?);
    }
    let secs = t.elapsed().as_secs_f64();
    Ok(verdict(
        worst < C11_MATCH_TOL && secs < C11_RUNTIME_S,
        format!("20 slowest at n_th in {{0.1,0.2,0.5}} vs n_th=0 oracle: {worst:.2e} (< {C11_MATCH_TOL:e}), {secs:.2} s (< {C11_RUNTIME_S} s)"),
    ))
}

/// Continues dyad labels from the zero-temperature oracle to `n_th` in small
/// steps, matching only within each coherence block.
fn continued_labels(eta: f64, n_th: f64, steps: usize, space: FockSpace) -> Result<Vec<SpectrumPoint>> {
    let mut current = oracle_kerr(eta + 1.0, 0.1, space.dim());
    for k in 1..=steps {
        let nt = n_th * k as f64 / steps as f64;
        let m = model(HamiltonianParams::kerr(eta), vec![DissipationChannel::thermal(0.1, nt)]);
        let l = assemble(&m.hamiltonian, &m.channels, space)?;
        let blocks = block_decompose(&l, SectorRule::U1Coherence)?;
        let mut next = Vec::with_capacity(current.len());
        for b in &blocks.blocks {
            let values = dense_eigenvalues(&b.matrix)?;
            let reference: Vec<SpectrumPoint> = current
                .iter()
                .filter(|p| p.dyad.is_some_and(|d| d.coherence() == b.label))
                .cloned()
                .collect();
            next.extend(transfer_labels(&reference, &values)?);
        }
        current = next;
    }
    Ok(current)
}

fn c12() -> Result<Verdict> {
    let space = FockSpace::with_dim(10)?;
    let labelled = continued_labels(3.0, 0.2, 4, space)?;
    let accumulation: Vec<c64> = labelled
        .iter()
        .filter(|p| p.dyad.is_some_and(|d| d.n + d.m == 4))
        .map(|p| p.lambda)
        .collect();
    let mult = max_multiplicity(&accumulation);
    let spread = accumulation
        .iter()
        .flat_map(|a| accumulation.iter().map(move |b| (a - b).norm()))
        .fold(0.0, f64::max);
    Ok(verdict(
        accumulation.len() == 5 && mult < 5,
        format!(
            "eta=3, n_th=0.2: {} accumulation dyads, max cluster multiplicity {mult} (< 5), spread {spread:.2e}",
            accumulation.len()
        ),
    ))
}

fn c13() -> Result<Verdict> {
    let temps = [0.0, 0.1, 0.2, 0.5];
    let mut all_monotone = true;
    let mut parts = Vec::new();
    for eta in [-1.0, 0.0] {
        let tx: Vec<f64> = temps
            .iter()
            .map(|&n| relaxation(eta, 2.0, DissipationChannel::thermal(0.1, n)))
            .collect::<Result<_>>()?;
        let monotone = tx.windows(2).all(|w| w[1] < w[0]);
        let halved = tx[1] < tx[0] / 2.0;
        all_monotone &= monotone;
        parts.push(format!(
            "eta={eta}: T_X = {:.4e}, {:.4e}, {:.4e}, {:.4e} (strictly decreasing: {monotone}; T_X(0.1) < T_X(0)/2: {halved})",
            tx[0], tx[1], tx[2], tx[3]
        ));
    }
    // the factor-2 bound is advisory; the criterion reduces to strict monotonicity when it is violated
    Ok(verdict(all_monotone, parts.join("; ")))
}

fn random_model(rng: &mut ChaCha8Rng) -> (ModelSpec, FockSpace) {
    let h = match rng.random_range(0..4) {
        0 => HamiltonianParams::harmonic(rng.random_range(-2.0..2.0)),
        1 => HamiltonianParams::dimensionless(rng.random_range(-2.0..5.0), 0.0),
        2 => HamiltonianParams::dimensionless(rng.random_range(-2.0..5.0), rng.random_range(0.0..3.0)),
        _ => HamiltonianParams::squeezed_harmonic(rng.random_range(-2.0..-0.5), rng.random_range(0.0..0.2)),
    };
    let mut channels = vec![DissipationChannel::thermal(
        rng.random_range(0.05..1.0),
        if rng.random_bool(0.5) {
            0.0
        } else {
            rng.random_range(0.0..0.5)
        },
    )];
    if rng.random_bool(0.3) {
        channels.push(DissipationChannel::quadratic(rng.random_range(0.01..0.3)));
    }
    (
        model(h, channels),
        FockSpace::with_dim(rng.random_range(2..=12)).expect("positive"),
    )
}

fn c14() -> Result<Verdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(C14_SEED);
    let (mut max_re, mut max_zero, mut max_conj, mut max_block) = (f64::NEG_INFINITY, 0.0f64, 0.0f64, 0.0f64);
    let mut state_failures = 0;
    let mut blocked = 0;
    for _ in 0..C14_CASES {
        let (m, space) = random_model(&mut rng);
        let l = assemble(&m.hamiltonian, &m.channels, space)?;
        let full = lambdas(&eigendecompose(&l)?);
        max_re = max_re.max(full.iter().map(|v| v.re).fold(f64::NEG_INFINITY, f64::max));
        max_zero = max_zero.max(full.iter().map(|v| v.norm()).fold(f64::INFINITY, f64::min));
        max_conj = max_conj.max(conjugation_defect(&full)?);
        match steady_state(&l) {
            Ok(rho) if rho.validate().is_ok() => {}
            _ => state_failures += 1,
        }
        if let Some(rule) = applicable_rule(&l) {
            blocked += 1;
            let b = lambdas(&spectrum(&l, Strategy::Blocks(rule))?);
            max_block = max_block.max(match_spectra(&b, &full)?);
        }
    }
    let ok = max_re < C14_MAX_RE
        && max_zero < C14_ZERO_TOL
        && max_conj < C14_CONJ_TOL
        && state_failures == 0
        && max_block < C14_BLOCK_TOL;
    Ok(verdict(
        ok,
        format!(
            "{C14_CASES} models (seed {C14_SEED}): max Re {max_re:.2e} (< {C14_MAX_RE:e}); worst |l0| {max_zero:.2e} \
             (< {C14_ZERO_TOL:e}); conjugation {max_conj:.2e} (< {C14_CONJ_TOL:e}); invalid steady states {state_failures}; \
             block vs full {max_block:.2e} (< {C14_BLOCK_TOL:e}) over {blocked} blocked models"
        ),
    ))
}

/// Large-N companion of C7 (informational, not a criterion).
fn c7_large_n() -> Result<String> {
    let fit = hamiltonian_nu_fit(&[500, 1000, 2000, 5000, 10000, 20000])?;
    Ok(format!(
        "N in 500..20000: nu = {:.4} N^{:.4} (log residual {:.1e})",
        fit.amplitude, fit.exponent, fit.residual
    ))
}

fn main() -> ExitCode {
    faer::set_global_parallelism(faer::Par::Seq);
    let criteria: [(&str, &str, fn() -> Result<Verdict>); 14] = [
        ("C1", "harmonic oracle", c1),
        ("C2", "Kerr oracle", c2),
        ("C3", "two-photon loss oracle", c3),
        ("C4", "quasi-spin structure", c4),
        ("C5", "squeezed harmonic, stable regime", c5),
        ("C6", "kissing points", c6),
        ("C7", "Hamiltonian second-order scaling", c7),
        ("C8", "Liouvillian second-order scaling", c8),
        ("C9", "first-order transition", c9),
        ("C10", "relaxation time even/odd structure", c10),
        ("C11", "thermal harmonic invariance", c11),
        ("C12", "thermal lifting of the accumulation point", c12),
        ("C13", "thermal decay of the relaxation time", c13),
        ("C14", "universal property suite", c14),
    ];
    let mut failed = Vec::new();
    for (id, title, f) in criteria {
        let t = Instant::now();
        let v = f().unwrap_or_else(|e| verdict(false, format!("error: {e}")));
        let word = if v.passed { "PASS" } else { "FAIL" };
        println!(
            "{word} {id:<4} {title}: {} [{:.1} s]",
            v.detail,
            t.elapsed().as_secs_f64()
        );
        if !v.passed {
            failed.push(id);
        }
    }
    match c7_large_n() {
        Ok(s) => println!("INFO C7+  {s}"),
        Err(e) => println!("INFO C7+  error: {e}"),
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed: {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
