//! Parameter sweeps over a model template.
//!
//! Grid points are independent tasks evaluated in parallel; rows are sorted
//! by `(axis value, N)` afterwards so the output does not depend on the
//! degree of parallelism.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockSpace;
use crate::models::{DissipationChannel, HamiltonianParams, ModelSpec};
use crate::qpt::observables::{evaluate, Observable};
use crate::spectra::Strategy;

/// Swept parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    Xi,
    Chi,
    Eta,
    NTh,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Xi => "xi",
            Axis::Chi => "chi",
            Axis::Eta => "eta",
            Axis::NTh => "n_th",
        }
    }

    /// Applies `value` of this axis to `model`.
    pub fn apply(self, model: &ModelSpec, value: f64) -> Result<ModelSpec> {
        let mut out = model.clone();
        match self {
            Axis::Xi => out.hamiltonian = model.hamiltonian.with_xi(value),
            Axis::Chi => {
                if model.hamiltonian.scale_n.is_none() {
                    return Err(Error::invalid("axis", "chi axis requires the scaled Hamiltonian"));
                }
                out.hamiltonian = model.hamiltonian.with_chi(value);
            }
            Axis::Eta => {
                if model.hamiltonian.kerr == 0.0 {
                    return Err(Error::invalid("axis", "eta axis requires a Kerr term"));
                }
                out.hamiltonian = model.hamiltonian.with_eta(value);
            }
            Axis::NTh => {
                if !model.channels.iter().any(|c| c.order == 1) {
                    return Err(Error::invalid("axis", "n_th axis requires a linear channel"));
                }
                out = model.with_n_th(value);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xi" => Ok(Axis::Xi),
            "chi" => Ok(Axis::Chi),
            "eta" => Ok(Axis::Eta),
            "n_th" => Ok(Axis::NTh),
            other => Err(Error::invalid("axis", format!("unknown axis `{other}`"))),
        }
    }
}

/// Model and Fock space for size `n`.
///
/// For the scaled Hamiltonian `n` is its `N` (and `N_Fock = N + 1`); otherwise
/// `n` is the truncation `n_max`.
pub fn model_at_size(template: &ModelSpec, n: usize) -> (ModelSpec, FockSpace) {
    let mut model = template.clone();
    if model.hamiltonian.scale_n.is_some() {
        model.hamiltonian.scale_n = Some(n.max(1));
    }
    (model, FockSpace::new(n))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub model: ModelSpec,
    pub axis: Axis,
    pub grid: Vec<f64>,
    pub n_list: Vec<usize>,
    pub observables: Vec<Observable>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        if self.grid.is_empty() {
            return Err(Error::invalid("grid", "grid must not be empty"));
        }
        if self.grid.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::invalid("grid", "grid must be strictly increasing"));
        }
        if self.n_list.is_empty() {
            return Err(Error::invalid("n_list", "at least one size is required"));
        }
        if self.observables.is_empty() {
            return Err(Error::invalid("observables", "at least one observable is required"));
        }
        Ok(())
    }
}

/// One evaluated grid point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub axis_value: f64,
    /// Second coordinate for two-dimensional scans.
    pub secondary: Option<f64>,
    pub n: usize,
    /// One entry per observable; `None` where evaluation failed.
    pub values: Vec<Option<f64>>,
    /// Failure messages, `observable: message`.
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub axis: Axis,
    pub secondary_axis: Option<Axis>,
    pub observables: Vec<Observable>,
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// `(axis value, observable)` series for one size, skipping failures.
    pub fn series(&self, n: usize, observable: Observable) -> Vec<(f64, f64)> {
        let Some(k) = self.observables.iter().position(|&o| o == observable) else {
            return Vec::new();
        };
        self.rows
            .iter()
            .filter(|r| r.n == n)
            .filter_map(|r| r.values[k].map(|v| (r.axis_value, v)))
            .collect()
    }

    /// Value at an exact grid point.
    pub fn value(&self, axis_value: f64, secondary: Option<f64>, n: usize, observable: Observable) -> Option<f64> {
        let k = self.observables.iter().position(|&o| o == observable)?;
        self.rows
            .iter()
            .find(|r| r.axis_value == axis_value && r.secondary == secondary && r.n == n)
            .and_then(|r| r.values[k])
    }

    /// True if every row failed.
    pub fn all_failed(&self) -> bool {
        self.rows.iter().all(|r| r.values.iter().all(Option::is_none))
    }
}

fn evaluate_row(
    model: Result<ModelSpec>,
    space: FockSpace,
    observables: &[Observable],
    axis_value: f64,
    secondary: Option<f64>,
    n: usize,
) -> SweepRow {
    let results = match model {
        Ok(model) => evaluate(&model, space, observables, Strategy::Auto),
        Err(e) => observables
            .iter()
            .map(|_| Err(Error::Numerical(e.to_string())))
            .collect(),
    };
    let errors: Vec<String> = observables
        .iter()
        .zip(&results)
        .filter_map(|(o, r)| r.as_ref().err().map(|e| format!("{o}: {e}")))
        .collect();
    SweepRow {
        axis_value,
        secondary,
        n,
        values: results.into_iter().map(Result::ok).collect(),
        error: (!errors.is_empty()).then(|| errors.join("; ")),
    }
}

fn sort_rows(rows: &mut [SweepRow]) {
    rows.sort_by(|a, b| {
        a.axis_value
            .total_cmp(&b.axis_value)
            .then(a.secondary.unwrap_or(0.0).total_cmp(&b.secondary.unwrap_or(0.0)))
            .then(a.n.cmp(&b.n))
    });
}

/// Tabulates the requested observables over `grid × n_list`.
///
/// Per-point failures are recorded in the row and do not stop the sweep.
pub fn sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let tasks: Vec<(f64, usize)> = config
        .grid
        .iter()
        .flat_map(|&v| config.n_list.iter().map(move |&n| (v, n)))
        .collect();
    let mut rows: Vec<SweepRow> = tasks
        .par_iter()
        .map(|&(value, n)| {
            let (sized, space) = model_at_size(&config.model, n);
            evaluate_row(
                config.axis.apply(&sized, value),
                space,
                &config.observables,
                value,
                None,
                n,
            )
        })
        .collect();
    sort_rows(&mut rows);
    Ok(SweepResult {
        axis: config.axis,
        secondary_axis: None,
        observables: config.observables.clone(),
        rows,
    })
}

/// Relaxation time `T_X` over an `(η, ξ)` grid of the squeezed Kerr oscillator.
pub fn relaxation_surface(
    eta_grid: &[f64],
    xi_grid: &[f64],
    kappa: f64,
    n_th: f64,
    space: FockSpace,
) -> Result<SweepResult> {
    let channel = DissipationChannel::thermal(kappa, n_th);
    channel.validate()?;
    let tasks: Vec<(f64, f64)> = eta_grid
        .iter()
        .flat_map(|&eta| xi_grid.iter().map(move |&xi| (eta, xi)))
        .collect();
    let mut rows: Vec<SweepRow> = tasks
        .par_iter()
        .map(|&(eta, xi)| {
            let model = ModelSpec::new(HamiltonianParams::dimensionless(eta, xi), vec![channel]);
            evaluate_row(Ok(model), space, &[Observable::TX], eta, Some(xi), space.n_max())
        })
        .collect();
    sort_rows(&mut rows);
    Ok(SweepResult {
        axis: Axis::Eta,
        secondary_axis: Some(Axis::Xi),
        observables: vec![Observable::TX],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> SweepConfig {
        SweepConfig {
            model: ModelSpec::new(
                HamiltonianParams::scaled(-1.0, 0.0, 6),
                vec![DissipationChannel::linear(0.1)],
            ),
            axis: Axis::Chi,
            grid: vec![0.0, 0.3, 0.6],
            n_list: vec![4, 6],
            observables: vec![Observable::Nu, Observable::Gap, Observable::TX],
        }
    }

    #[test]
    fn rows_are_complete_and_ordered() {
        let r = sweep(&config()).unwrap();
        assert_eq!(r.rows.len(), 6);
        let keys: Vec<(f64, usize)> = r.rows.iter().map(|r| (r.axis_value, r.n)).collect();
        assert_eq!(keys, vec![(0.0, 4), (0.0, 6), (0.3, 4), (0.3, 6), (0.6, 4), (0.6, 6)]);
        for row in &r.rows {
            let nu = row.values[0].unwrap();
            assert!((-1e-12..=1.0 + 1e-6).contains(&nu));
        }
        let t0 = r.value(0.0, None, 6, Observable::TX).unwrap();
        assert!((t0 - 20.0).abs() < 1e-9);
    }

    #[test]
    fn invalid_configs() {
        let mut c = config();
        c.grid = vec![0.1, 0.1];
        assert!(sweep(&c).is_err());
        let mut c = config();
        c.n_list.clear();
        assert!(sweep(&c).is_err());
    }

    #[test]
    fn per_row_failures_are_recorded() {
        let mut c = config();
        c.model.channels.clear();
        c.observables = vec![Observable::Nu];
        let r = sweep(&c).unwrap();
        assert!(r.all_failed());
        assert!(r
            .rows
            .iter()
            .all(|row| row.error.as_deref().unwrap().starts_with("nu:")));
    }
}
