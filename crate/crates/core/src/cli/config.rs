//! Run configuration read from TOML.
//!
//! ```toml
//! [model]
//! eta = 3.0          # or omega / kerr / eps2
//! xi = 0.0
//!
//! [[channels]]
//! kappa = 0.1
//! order = 1
//! n_th = 0.0
//!
//! [space]
//! n_fock = 10
//!
//! [task]
//! # subcommand specific
//!
//! [output]
//! format = "dsv"
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockSpace;
use crate::models::{DissipationChannel, HamiltonianParams, ModelSpec};
use crate::qpt::{Axis, Observable};

/// Model section: either `(omega, kerr, eps2)` or `(eta, xi)` with `K = 1`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    pub omega: Option<f64>,
    pub kerr: Option<f64>,
    pub eps2: Option<f64>,
    pub eta: Option<f64>,
    pub xi: Option<f64>,
    /// Use the scaled Hamiltonian `−ηn̂ + n̂(n̂−1)/N − χP̂₂`.
    #[serde(default)]
    pub scaled: bool,
    /// `χ` of the scaled Hamiltonian (alternative to `xi`).
    pub chi: Option<f64>,
    /// `N` of the scaled Hamiltonian; defaults to `n_fock − 1`.
    pub scale_n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSection {
    pub kappa: f64,
    #[serde(default = "one")]
    pub order: u32,
    #[serde(default)]
    pub n_th: f64,
}

fn one() -> u32 {
    1
}

/// Space section: explicit `n_fock` or automatic convergence.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSection {
    pub n_fock: Option<usize>,
    #[serde(default)]
    pub auto: bool,
    pub tol: Option<f64>,
    pub k: Option<usize>,
    pub start: Option<usize>,
    pub budget: Option<usize>,
}

/// Grid given explicitly or as an inclusive linear range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridSpec {
    Values(Vec<f64>),
    Range { start: f64, stop: f64, steps: usize },
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        match *self {
            GridSpec::Values(ref v) => v.clone(),
            GridSpec::Range { start, stop, steps } => match steps {
                0 => Vec::new(),
                1 => vec![start],
                _ => (0..steps)
                    .map(|k| start + (stop - start) * k as f64 / (steps - 1) as f64)
                    .collect(),
            },
        }
    }
}

/// Task section; only the keys relevant to the subcommand are read.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSection {
    /// spectrum: `auto`, `full`, `u1_coherence` or `z2_parity`.
    pub strategy: Option<String>,
    /// sweep: swept axis.
    pub axis: Option<Axis>,
    /// sweep / qpt: grid of axis values.
    pub grid: Option<GridSpec>,
    /// sweep / qpt: sizes `N`.
    pub n_list: Option<Vec<usize>>,
    /// sweep: observables to tabulate.
    pub observables: Option<Vec<Observable>>,
    /// qpt: `second_order` or `first_order`.
    pub kind: Option<String>,
    /// qpt: known critical point.
    pub chi_c: Option<f64>,
    /// qpt: upper end of the gap-maximum window.
    pub window: Option<f64>,
    /// qpt: lower end of the gap-maximum window.
    pub window_lo: Option<f64>,
    /// qpt: coarse points in the gap-maximum scan.
    pub coarse: Option<usize>,
    /// qpt: jump threshold in units of the median increment.
    pub jump_factor: Option<f64>,
    /// relaxation: η grid.
    pub eta_grid: Option<GridSpec>,
    /// relaxation: ξ grid.
    pub xi_grid: Option<GridSpec>,
    /// classify: quasi-spin `j`.
    pub j: Option<f64>,
    /// converge: number of tracked eigenvalues.
    pub k: Option<usize>,
    /// converge: tolerance on the eigenvalue shift.
    pub tol: Option<f64>,
    /// converge: starting `n_max`.
    pub start: Option<usize>,
    /// converge: largest `n_max` allowed.
    pub budget: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Dsv,
    Structured,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub path: Option<String>,
    pub format: Option<Format>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(default)]
    pub model: ModelSection,
    #[serde(default)]
    pub channels: Vec<ChannelSection>,
    #[serde(default)]
    pub space: SpaceSection,
    #[serde(default)]
    pub task: TaskSection,
    #[serde(default)]
    pub output: OutputSection,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::config("config", e.message().to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config("--config", format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// Channels as library types.
    pub fn channels(&self) -> Result<Vec<DissipationChannel>> {
        self.channels
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let ch = DissipationChannel {
                    order: c.order,
                    kappa: c.kappa,
                    n_th: c.n_th,
                };
                ch.validate()
                    .map_err(|e| Error::config(format!("channels[{i}]"), e.to_string()))?;
                Ok(ch)
            })
            .collect()
    }

    /// Explicit Fock dimension, if given.
    pub fn explicit_space(&self) -> Result<Option<FockSpace>> {
        match (self.space.n_fock, self.space.auto) {
            (Some(_), true) => Err(Error::config("space", "give either n_fock or auto, not both")),
            (Some(n), false) => {
                if n < 2 {
                    return Err(Error::config(
                        "space.n_fock",
                        format!("n_fock must be at least 2 (got {n})"),
                    ));
                }
                Ok(Some(FockSpace::with_dim(n)?))
            }
            (None, true) => Ok(None),
            (None, false) => Err(Error::config("space.n_fock", "missing (or set auto = true)")),
        }
    }

    /// Hamiltonian for truncation `n_max` (used for the default scale `N`).
    pub fn hamiltonian(&self, n_max: usize) -> Result<HamiltonianParams> {
        let m = &self.model;
        let physical = m.omega.is_some() || m.kerr.is_some() || m.eps2.is_some();
        let dimensionless = m.eta.is_some() || m.xi.is_some() || m.chi.is_some();
        let params = match (physical, dimensionless) {
            (true, true) => {
                return Err(Error::config(
                    "model",
                    "give either (omega, kerr, eps2) or (eta, xi), not both",
                ))
            }
            (false, false) => return Err(Error::config("model", "no model parameters given")),
            (true, false) => {
                if m.scaled {
                    return Err(Error::config(
                        "model.scaled",
                        "the scaled Hamiltonian is parametrized by eta and chi",
                    ));
                }
                let omega = m.omega.ok_or_else(|| Error::config("model.omega", "missing"))?;
                let kerr = m.kerr.unwrap_or(0.0);
                let eps2 = m.eps2.unwrap_or(0.0);
                match (kerr == 0.0, eps2 == 0.0) {
                    (true, true) => HamiltonianParams::harmonic(omega),
                    (true, false) => HamiltonianParams::squeezed_harmonic(omega, eps2),
                    _ => HamiltonianParams::squeezed_kerr(omega, kerr, eps2),
                }
            }
            (false, true) => {
                let eta = m.eta.ok_or_else(|| Error::config("model.eta", "missing"))?;
                if m.scaled {
                    let n = m.scale_n.unwrap_or(n_max);
                    if n == 0 {
                        return Err(Error::config("model.scale_n", "must be at least 1"));
                    }
                    let chi = match (m.chi, m.xi) {
                        (Some(_), Some(_)) => return Err(Error::config("model.chi", "give chi or xi, not both")),
                        (Some(c), None) => c,
                        (None, Some(x)) => x / n as f64,
                        (None, None) => 0.0,
                    };
                    HamiltonianParams::scaled(eta, chi, n)
                } else {
                    if m.chi.is_some() {
                        return Err(Error::config("model.chi", "chi requires scaled = true"));
                    }
                    HamiltonianParams::dimensionless(eta, m.xi.unwrap_or(0.0))
                }
            }
        };
        params.validate().map_err(|e| Error::config("model", e.to_string()))?;
        Ok(params)
    }

    /// Model for truncation `n_max`.
    pub fn model(&self, n_max: usize) -> Result<ModelSpec> {
        Ok(ModelSpec::new(self.hamiltonian(n_max)?, self.channels()?))
    }

    /// First channel rate, used where a single `κ` is needed.
    pub fn kappa(&self) -> f64 {
        self.channels.first().map_or(0.0, |c| c.kappa)
    }

    pub fn n_th(&self) -> f64 {
        self.channels.iter().find(|c| c.order == 1).map_or(0.0, |c| c.n_th)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dimensionless_model() {
        let c = RunConfig::from_toml("[model]\neta = 3.0\n[[channels]]\nkappa = 0.1\n[space]\nn_fock = 10\n").unwrap();
        let h = c.hamiltonian(9).unwrap();
        assert_eq!(h, HamiltonianParams::kerr(3.0));
        assert_eq!(c.channels().unwrap(), vec![DissipationChannel::linear(0.1)]);
        assert_eq!(c.explicit_space().unwrap(), Some(FockSpace::new(9)));
    }

    #[test]
    fn rejects_mixed_parametrizations() {
        let c = RunConfig::from_toml("[model]\neta = 1.0\nomega = 1.0\n").unwrap();
        assert!(matches!(c.hamiltonian(4), Err(Error::Config { .. })));
    }

    #[test]
    fn rejects_tiny_space() {
        let c = RunConfig::from_toml("[model]\neta = 1.0\nxi = 0.5\n[space]\nn_fock = 1\n").unwrap();
        match c.explicit_space() {
            Err(Error::Config { field, .. }) => assert_eq!(field, "space.n_fock"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn scaled_model_defaults_to_truncation() {
        let c = RunConfig::from_toml("[model]\neta = -1.0\nscaled = true\nchi = 0.5\n").unwrap();
        assert_eq!(c.hamiltonian(20).unwrap(), HamiltonianParams::scaled(-1.0, 0.5, 20));
    }

    #[test]
    fn grid_ranges() {
        let g = GridSpec::Range {
            start: 0.0,
            stop: 1.0,
            steps: 5,
        };
        assert_eq!(g.values(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn unknown_keys_are_errors() {
        assert!(RunConfig::from_toml("[model]\netta = 1.0\n").is_err());
    }
}
