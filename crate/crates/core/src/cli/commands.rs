//! The six subcommands. Each resolves its configuration, computes, and
//! returns tables plus a JSON summary; writing is left to the caller.

use serde_json::{json, Value};

use crate::cli::config::RunConfig;
use crate::cli::output::{Cell, Table};
use crate::error::{Error, Result};
use crate::fock::FockSpace;
use crate::liouville::{assemble, SectorRule};
use crate::models::{closed_spectrum, ModelSpec, Phase};
use crate::qpt::{
    convergence_n, detect_critical_point_2nd, detect_first_order_jump, finite_diff_derivative, fit_power_law,
    locate_gap_maximum, model_at_size, order_parameter, relaxation_surface, sweep, Axis, ConvergenceReport, Observable,
    SweepConfig, SweepResult, DEFAULT_GAP_WINDOW, DEFAULT_JUMP_FACTOR,
};
use crate::quasispin::{
    attach_labels, enumerate_jm, half, oracle_harmonic, oracle_kerr, oracle_quadratic_dissipation,
    oracle_squeezed_harmonic, oracle_su2, Branch,
};
use crate::spectra::{
    annotate_multiplicities, assign, gaps, lambdas, relaxation_time, sort_spectrum, spectrum, steady_mean_number,
    SpectrumPoint, Strategy,
};

/// Result of one subcommand.
#[derive(Debug)]
pub struct Outcome {
    /// Values filled in by defaults or automatic choices.
    pub resolved: Value,
    pub tables: Vec<Table>,
    pub summary: Value,
    /// Every evaluation point failed.
    pub all_failed: bool,
}

const DEFAULT_AUTO_K: usize = 10;
const DEFAULT_AUTO_TOL: f64 = 1e-6;
const DEFAULT_AUTO_START: usize = 8;
const DEFAULT_AUTO_BUDGET: usize = 256;
const DEFAULT_COARSE: usize = 17;
const DEFAULT_N_LIST: [usize; 3] = [10, 20, 40];

/// Fock space from the config, running the convergence search when `auto`.
fn resolve_space(cfg: &RunConfig) -> Result<(FockSpace, Option<ConvergenceReport>)> {
    if let Some(space) = cfg.explicit_space()? {
        return Ok((space, None));
    }
    let s = &cfg.space;
    let start = s.start.unwrap_or(DEFAULT_AUTO_START);
    let model = cfg.model(start)?;
    let report = convergence_n(
        &model,
        s.k.unwrap_or(DEFAULT_AUTO_K),
        s.tol.unwrap_or(DEFAULT_AUTO_TOL),
        start,
        s.budget.unwrap_or(DEFAULT_AUTO_BUDGET),
    )?;
    Ok((FockSpace::new(report.n_conv), Some(report)))
}

fn parse_strategy(name: Option<&str>) -> Result<Strategy> {
    match name.unwrap_or("auto") {
        "auto" => Ok(Strategy::Auto),
        "full" => Ok(Strategy::Full),
        other => other
            .parse::<SectorRule>()
            .map(Strategy::Blocks)
            .map_err(|_| Error::config("task.strategy", format!("unknown strategy `{other}`"))),
    }
}

fn strategy_name(s: Strategy) -> String {
    match s {
        Strategy::Auto => "auto".into(),
        Strategy::Full => "full".into(),
        Strategy::Blocks(rule) => rule.name().into(),
    }
}

/// Closed-form reference spectrum for the models that have one.
fn oracle_for(model: &ModelSpec, space: FockSpace) -> Option<(&'static str, Vec<SpectrumPoint>)> {
    let [ch] = model.channels.as_slice() else {
        return None;
    };
    let h = &model.hamiltonian;
    let dim = space.dim();
    let plain = !h.is_squeezed() && h.scale_n.is_none();
    match (ch.order, ch.n_th == 0.0) {
        (1, true) if plain && h.kerr == 0.0 => Some(("harmonic", oracle_harmonic(h.linear, ch.kappa, dim))),
        (1, true) if plain => Some(("kerr", oracle_kerr(h.eta_prime()?, ch.kappa, dim))),
        (1, true) if h.kerr == 0.0 && h.squeeze.len() == 1 && h.squeeze[0].order == 2 => {
            oracle_squeezed_harmonic(h.linear.abs(), h.squeeze[0].amplitude, ch.kappa, dim * dim)
                .ok()
                .map(|o| ("squeezed_harmonic", o))
        }
        (2, true) if plain && h.kerr != 0.0 => Some((
            "quadratic_dissipation",
            oracle_quadratic_dissipation(h.eta_prime()?, ch.kappa, dim),
        )),
        _ => None,
    }
}

/// Integer quasi-spin `2j = η'` of an unsqueezed Kerr model, if any.
fn quasi_spin_two_j(model: &ModelSpec) -> Option<u32> {
    let h = &model.hamiltonian;
    if h.is_squeezed() || h.scale_n.is_some() {
        return None;
    }
    let ep = h.eta_prime()?;
    (ep >= 0.0 && (ep - ep.round()).abs() < 1e-12).then(|| ep.round() as u32)
}

fn jm_cells(p: &SpectrumPoint) -> [Cell; 5] {
    let q = p.quasi_spin;
    let jm = p.jm;
    [
        q.map_or(Cell::Empty, |q| Cell::text(half(q.two_mj))),
        q.map_or(Cell::Empty, |q| Cell::text(half(q.two_mj_prime))),
        jm.map_or(Cell::Empty, |l| {
            Cell::text(match l.branch {
                Branch::Right => "right",
                Branch::Left => "left",
            })
        }),
        jm.map_or(Cell::Empty, |l| Cell::text(half(l.two_rep as i32))),
        jm.map_or(Cell::Empty, |l| Cell::text(half(l.two_m))),
    ]
}

fn phase_text(p: Phase) -> &'static str {
    match p {
        Phase::I => "I",
        Phase::II => "II",
    }
}

pub fn spectrum_cmd(cfg: &RunConfig) -> Result<Outcome> {
    let (space, report) = resolve_space(cfg)?;
    let model = cfg.model(space.n_max())?;
    let strategy = parse_strategy(cfg.task.strategy.as_deref())?;
    let l = assemble(&model.hamiltonian, &model.channels, space)?;
    let mut pts = sort_spectrum(spectrum(&l, strategy)?);
    annotate_multiplicities(&mut pts);

    let mut oracle_partner: Vec<Option<SpectrumPoint>> = vec![None; pts.len()];
    let oracle = oracle_for(&model, space);
    let mut oracle_max = None;
    if let Some((_, reference)) = &oracle {
        let partner = assign(&lambdas(&pts), &lambdas(reference))?;
        let mut worst: f64 = 0.0;
        for (i, k) in partner.into_iter().enumerate() {
            let r = &reference[k];
            worst = worst.max((pts[i].lambda - r.lambda).norm());
            pts[i].dyad = r.dyad;
            oracle_partner[i] = Some(r.clone());
        }
        oracle_max = Some(worst);
    }
    if let Some(two_j) = quasi_spin_two_j(&model) {
        attach_labels(&mut pts, two_j);
    }

    let levels = closed_spectrum(&model.hamiltonian, space)?;
    let fock_phase = |n: usize| levels.iter().find(|l| l.fock == Some(n)).and_then(|l| l.phase);

    let mut table = Table::new(
        "spectrum",
        vec![
            "index",
            "re",
            "im",
            "multiplicity",
            "sector",
            "n",
            "m",
            "m_j",
            "m_j_prime",
            "branch",
            "J",
            "M",
            "phase",
            "oracle_re",
            "oracle_im",
        ],
    );
    for (i, p) in pts.iter().enumerate() {
        let phase = p.dyad.and_then(|d| {
            let (a, b) = (fock_phase(d.n)?, fock_phase(d.m)?);
            Some(if a == Phase::II && b == Phase::II {
                Phase::II
            } else {
                Phase::I
            })
        });
        let [mj, mjp, branch, big_j, big_m] = jm_cells(p);
        table.push(vec![
            Cell::from(i),
            Cell::Num(p.re()),
            Cell::Num(p.im()),
            Cell::from(p.multiplicity),
            p.sector.map_or(Cell::Empty, Cell::Int),
            p.dyad.map_or(Cell::Empty, |d| Cell::from(d.n)),
            p.dyad.map_or(Cell::Empty, |d| Cell::from(d.m)),
            mj,
            mjp,
            branch,
            big_j,
            big_m,
            phase.map_or(Cell::Empty, |ph| Cell::text(phase_text(ph))),
            Cell::opt(oracle_partner[i].as_ref().map(|o| o.re())),
            Cell::opt(oracle_partner[i].as_ref().map(|o| o.im())),
        ]);
    }

    let mut level_table = Table::new(
        "levels",
        vec!["index", "energy", "parity", "phase", "fock", "mean_number"],
    );
    for l in &levels {
        level_table.push(vec![
            Cell::from(l.index),
            Cell::Num(l.energy),
            l.parity.map_or(Cell::Empty, |p| Cell::from(p.sign() as i64)),
            l.phase.map_or(Cell::Empty, |ph| Cell::text(phase_text(ph))),
            l.fock.map_or(Cell::Empty, Cell::from),
            Cell::Num(l.mean_number),
        ]);
    }

    let g = gaps(&pts).ok();
    let summary = json!({
        "points": pts.len(),
        "gap": g.map(|g| g.liouvillian),
        "hamiltonian_gap": g.map(|g| g.hamiltonian),
        "relaxation_time": relaxation_time(&pts).ok(),
        "steady_mean_number": steady_mean_number(&l).ok(),
        "oracle": oracle.as_ref().map(|o| o.0),
        "oracle_max_distance": oracle_max,
    });
    Ok(Outcome {
        resolved: json!({
            "n_fock": space.dim(),
            "strategy": strategy_name(strategy),
            "model": model,
            "convergence": report,
        }),
        tables: vec![table, level_table],
        summary,
        all_failed: false,
    })
}

/// One table per observable: `axis, n, value, error`.
fn sweep_tables(prefix: &str, result: &SweepResult) -> Vec<Table> {
    let mut out = Vec::new();
    for (k, obs) in result.observables.iter().enumerate() {
        let mut t = Table::new(
            format!("{prefix}_{}", obs.name()),
            vec![result.axis.name(), "n", obs.name(), "error"],
        );
        for r in &result.rows {
            t.push(vec![
                Cell::Num(r.axis_value),
                Cell::from(r.n),
                Cell::opt(r.values[k]),
                r.error.clone().map_or(Cell::Empty, Cell::Text),
            ]);
        }
        out.push(t);
    }
    out
}

/// `dν/d(axis)` per size where at least three points succeeded.
fn derivative_table(name: &str, result: &SweepResult, n_list: &[usize]) -> Option<Table> {
    if !result.observables.contains(&Observable::Nu) {
        return None;
    }
    let mut t = Table::new(name, vec![result.axis.name(), "n", "dnu"]);
    for &n in n_list {
        if let Ok(d) = finite_diff_derivative(&result.series(n, Observable::Nu)) {
            for (x, dy) in d {
                t.push(vec![Cell::Num(x), Cell::from(n), Cell::Num(dy)]);
            }
        }
    }
    Some(t)
}

fn n_list(cfg: &RunConfig, default: Vec<usize>) -> Result<Vec<usize>> {
    let mut list = cfg.task.n_list.clone().unwrap_or(default);
    if list.is_empty() || list.contains(&0) {
        return Err(Error::config("task.n_list", "sizes must be positive and non-empty"));
    }
    list.sort_unstable();
    list.dedup();
    Ok(list)
}

fn grid(cfg: &RunConfig) -> Result<Vec<f64>> {
    let g = cfg
        .task
        .grid
        .as_ref()
        .ok_or_else(|| Error::config("task.grid", "missing"))?
        .values();
    if g.is_empty() || g.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::config(
            "task.grid",
            "grid must be non-empty and strictly increasing",
        ));
    }
    Ok(g)
}

fn config_err(field: &'static str) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::InvalidParameter { reason, .. } => Error::config(field, reason),
        other => other,
    }
}

pub fn sweep_cmd(cfg: &RunConfig) -> Result<Outcome> {
    // every size in `n_list` is its own truncation; `space` only supplies the default list
    let (space, report) = match &cfg.task.n_list {
        Some(list) if cfg.space.n_fock.is_none() && !cfg.space.auto => {
            (FockSpace::new(list.iter().copied().max().unwrap_or(0)), None)
        }
        _ => resolve_space(cfg)?,
    };
    let sizes = n_list(cfg, vec![space.n_max()])?;
    let template = cfg.model(space.n_max())?;
    let axis = cfg.task.axis.ok_or_else(|| Error::config("task.axis", "missing"))?;
    let observables = cfg
        .task
        .observables
        .clone()
        .unwrap_or_else(|| vec![Observable::Nu, Observable::Gap]);
    let config = SweepConfig {
        model: template,
        axis,
        grid: grid(cfg)?,
        n_list: sizes.clone(),
        observables,
    };
    // reject axis/model mismatches up front rather than failing every row
    axis.apply(&config.model, config.grid[0])
        .map_err(config_err("task.axis"))?;
    let result = sweep(&config).map_err(config_err("task"))?;
    let mut tables = sweep_tables("sweep", &result);
    tables.extend(derivative_table("sweep_dnu", &result, &sizes));
    let failed = result.rows.iter().filter(|r| r.error.is_some()).count();
    Ok(Outcome {
        resolved: json!({ "n_fock": space.dim(), "sweep": config, "convergence": report }),
        tables,
        summary: json!({ "rows": result.rows.len(), "rows_with_errors": failed }),
        all_failed: result.all_failed(),
    })
}

fn scaled_template(cfg: &RunConfig) -> Result<ModelSpec> {
    if !cfg.model.scaled {
        return Err(Error::config(
            "model.scaled",
            "qpt requires the scaled Hamiltonian (scaled = true)",
        ));
    }
    cfg.model(1)
}

fn fit_row(name: &str, points: &[(f64, f64)]) -> (Vec<Cell>, Value) {
    match fit_power_law(points) {
        Ok(f) => (
            vec![
                Cell::text(name),
                Cell::Num(f.amplitude),
                Cell::Num(f.exponent),
                Cell::Num(f.residual),
                Cell::Empty,
            ],
            json!(f),
        ),
        Err(e) => (
            vec![
                Cell::text(name),
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Text(e.to_string()),
            ],
            Value::Null,
        ),
    }
}

pub fn qpt_cmd(cfg: &RunConfig) -> Result<Outcome> {
    let template = scaled_template(cfg)?;
    let sizes = n_list(cfg, DEFAULT_N_LIST.to_vec())?;
    match cfg.task.kind.as_deref().unwrap_or("second_order") {
        "second_order" => qpt_second_order(cfg, &template, &sizes),
        "first_order" => qpt_first_order(cfg, &template, &sizes),
        other => Err(Error::config("task.kind", format!("unknown kind `{other}`"))),
    }
}

fn qpt_second_order(cfg: &RunConfig, template: &ModelSpec, sizes: &[usize]) -> Result<Outcome> {
    let window = cfg.task.window.unwrap_or(DEFAULT_GAP_WINDOW);
    let lo = cfg.task.window_lo.unwrap_or(0.0);
    let coarse = cfg.task.coarse.unwrap_or(DEFAULT_COARSE);
    let mut maxima = Vec::new();
    let mut gap_rows = Vec::new();
    for &n in sizes {
        let (m, space) = model_at_size(template, n);
        match locate_gap_maximum(&m, space, lo, window, coarse, window) {
            Ok(g) => {
                maxima.push((n, g.chi));
                gap_rows.push((n, Some(g), None));
            }
            Err(e) => gap_rows.push((n, None, Some(e.to_string()))),
        }
    }
    let critical = detect_critical_point_2nd(&maxima, cfg.task.chi_c).ok();
    let chi_c = critical.as_ref().map(|c| c.chi_c);

    let mut gap_table = Table::new("qpt_gap_max", vec!["n", "chi_max", "gap_max", "delta_chi", "error"]);
    for (n, g, err) in &gap_rows {
        gap_table.push(vec![
            Cell::from(*n),
            Cell::opt(g.map(|g| g.chi)),
            Cell::opt(g.map(|g| g.gap)),
            Cell::opt(g.zip(chi_c).map(|(g, c)| g.chi - c)),
            err.clone().map_or(Cell::Empty, Cell::Text),
        ]);
    }

    let mut nu_table = Table::new("qpt_nu", vec!["n", "chi_c", "nu", "error"]);
    let mut nu_points = Vec::new();
    if let Some(c) = chi_c {
        for &n in sizes {
            let (m, space) = model_at_size(template, n);
            let m = ModelSpec {
                hamiltonian: m.hamiltonian.with_chi(c),
                ..m
            };
            match order_parameter(&m.hamiltonian, &m.channels, space) {
                Ok(nu) => {
                    nu_points.push((n as f64, nu));
                    nu_table.push(vec![Cell::from(n), Cell::Num(c), Cell::Num(nu), Cell::Empty]);
                }
                Err(e) => nu_table.push(vec![
                    Cell::from(n),
                    Cell::Num(c),
                    Cell::Empty,
                    Cell::Text(e.to_string()),
                ]),
            }
        }
    }

    let delta_points: Vec<(f64, f64)> = maxima
        .iter()
        .filter_map(|&(n, chi)| chi_c.map(|c| (n as f64, chi - c)))
        .collect();
    let mut fits = Table::new(
        "qpt_fits",
        vec!["quantity", "amplitude", "exponent", "residual", "error"],
    );
    let (row, nu_fit) = fit_row("nu", &nu_points);
    fits.push(row);
    let (row, delta_fit) = fit_row("delta_chi", &delta_points);
    fits.push(row);

    let mut tables = vec![gap_table, nu_table, fits];
    if cfg.task.grid.is_some() {
        let result = sweep(&SweepConfig {
            model: template.clone(),
            axis: Axis::Chi,
            grid: grid(cfg)?,
            n_list: sizes.to_vec(),
            observables: vec![Observable::Nu, Observable::Gap],
        })?;
        tables.extend(sweep_tables("qpt_curve", &result));
        tables.extend(derivative_table("qpt_dnu", &result, sizes));
    }
    Ok(Outcome {
        resolved: json!({
            "kind": "second_order",
            "model": template,
            "n_list": sizes,
            "window": [lo, window],
            "coarse": coarse,
        }),
        tables,
        summary: json!({
            "critical_point": critical,
            "nu_fit": nu_fit,
            "delta_chi_fit": delta_fit,
        }),
        all_failed: maxima.is_empty() && nu_points.is_empty(),
    })
}

fn qpt_first_order(cfg: &RunConfig, template: &ModelSpec, sizes: &[usize]) -> Result<Outcome> {
    let factor = cfg.task.jump_factor.unwrap_or(DEFAULT_JUMP_FACTOR);
    let result = sweep(&SweepConfig {
        model: template.clone(),
        axis: Axis::Chi,
        grid: grid(cfg)?,
        n_list: sizes.to_vec(),
        observables: vec![Observable::Nu],
    })?;
    let mut jump_table = Table::new("qpt_jump", vec!["n", "chi_c", "size", "error"]);
    let mut jumps = Vec::new();
    for &n in sizes {
        match detect_first_order_jump(&result.series(n, Observable::Nu), factor) {
            Ok(j) => {
                jumps.push(json!({ "n": n, "chi_c": j.chi_c, "size": j.size }));
                jump_table.push(vec![Cell::from(n), Cell::Num(j.chi_c), Cell::Num(j.size), Cell::Empty]);
            }
            Err(e) => jump_table.push(vec![Cell::from(n), Cell::Empty, Cell::Empty, Cell::Text(e.to_string())]),
        }
    }
    let mut tables = sweep_tables("qpt_curve", &result);
    tables.extend(derivative_table("qpt_dnu", &result, sizes));
    tables.push(jump_table);
    Ok(Outcome {
        resolved: json!({
            "kind": "first_order",
            "model": template,
            "n_list": sizes,
            "jump_factor": factor,
        }),
        tables,
        summary: json!({ "jumps": jumps }),
        all_failed: result.all_failed(),
    })
}

pub fn relaxation_cmd(cfg: &RunConfig) -> Result<Outcome> {
    let space = cfg
        .explicit_space()?
        .ok_or_else(|| Error::config("space.n_fock", "relaxation requires an explicit n_fock"))?;
    let eta = cfg
        .task
        .eta_grid
        .as_ref()
        .ok_or_else(|| Error::config("task.eta_grid", "missing"))?
        .values();
    let xi = cfg
        .task
        .xi_grid
        .as_ref()
        .ok_or_else(|| Error::config("task.xi_grid", "missing"))?
        .values();
    if eta.is_empty() || xi.is_empty() {
        return Err(Error::config("task", "eta_grid and xi_grid must be non-empty"));
    }
    let (kappa, n_th) = (cfg.kappa(), cfg.n_th());
    if !(kappa > 0.0) {
        return Err(Error::config(
            "channels",
            "relaxation requires a linear channel with kappa > 0",
        ));
    }
    let result = relaxation_surface(&eta, &xi, kappa, n_th, space).map_err(config_err("channels"))?;
    let mut t = Table::new("relaxation", vec!["eta", "xi", "t_x", "error"]);
    for r in &result.rows {
        t.push(vec![
            Cell::Num(r.axis_value),
            Cell::opt(r.secondary),
            Cell::opt(r.values[0]),
            r.error.clone().map_or(Cell::Empty, Cell::Text),
        ]);
    }
    Ok(Outcome {
        resolved: json!({ "n_fock": space.dim(), "kappa": kappa, "n_th": n_th, "eta_grid": eta, "xi_grid": xi }),
        tables: vec![t],
        summary: json!({ "rows": result.rows.len() }),
        all_failed: result.all_failed(),
    })
}

pub fn classify_cmd(cfg: &RunConfig) -> Result<Outcome> {
    let j = cfg.task.j.ok_or_else(|| Error::config("task.j", "missing"))?;
    let two_j = (2.0 * j).round();
    if !(j >= 0.0) || (2.0 * j - two_j).abs() > 1e-12 {
        return Err(Error::config(
            "task.j",
            format!("j must be a non-negative half-integer (got {j})"),
        ));
    }
    let two_j = two_j as u32;
    let kappa = if cfg.channels.is_empty() { 1.0 } else { cfg.kappa() };
    let mut labels = enumerate_jm(two_j, kappa);
    labels.sort_by_key(|p| p.dyad);
    let su2 = oracle_su2(two_j, kappa);
    let mut t = Table::new(
        "classify",
        vec![
            "n",
            "m",
            "m_j",
            "m_j_prime",
            "branch",
            "J",
            "M",
            "re",
            "im",
            "accumulation",
        ],
    );
    let mut accumulation = 0;
    let mut max_dev: f64 = 0.0;
    for p in &labels {
        let d = p.dyad.expect("enumerated labels carry dyads");
        let q = p.quasi_spin.expect("enumerated labels lie in range");
        if let Some(s) = su2.iter().find(|s| s.dyad == p.dyad) {
            max_dev = max_dev.max((s.lambda - p.lambda).norm());
        }
        accumulation += usize::from(q.is_accumulation());
        let [mj, mjp, branch, big_j, big_m] = jm_cells(p);
        t.push(vec![
            Cell::from(d.n),
            Cell::from(d.m),
            mj,
            mjp,
            branch,
            big_j,
            big_m,
            Cell::Num(p.re()),
            Cell::Num(p.im()),
            Cell::from(q.is_accumulation()),
        ]);
    }
    Ok(Outcome {
        resolved: json!({ "two_j": two_j, "kappa": kappa }),
        summary: json!({
            "rows": labels.len(),
            "accumulation": accumulation,
            "max_deviation_from_quasi_spin_oracle": max_dev,
        }),
        tables: vec![t],
        all_failed: false,
    })
}

pub fn converge_cmd(cfg: &RunConfig) -> Result<Outcome> {
    let t = &cfg.task;
    let k = t.k.unwrap_or(DEFAULT_AUTO_K);
    let tol = t.tol.unwrap_or(DEFAULT_AUTO_TOL);
    let start = t.start.unwrap_or(DEFAULT_AUTO_START);
    let budget = t.budget.unwrap_or(DEFAULT_AUTO_BUDGET);
    let model = cfg.model(start)?;
    let report = convergence_n(&model, k, tol, start, budget).map_err(config_err("task"))?;
    let mut table = Table::new("converge", vec!["n_max", "shift"]);
    for &(n, shift) in &report.history {
        table.push(vec![Cell::from(n), Cell::Num(shift)]);
    }
    Ok(Outcome {
        resolved: json!({ "k": k, "tol": tol, "start": start, "budget": budget, "model": model }),
        summary: json!({ "n_conv": report.n_conv, "n_fock": report.n_conv + 1 }),
        tables: vec![table],
        all_failed: false,
    })
}
