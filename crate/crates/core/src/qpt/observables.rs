//! Per-point observables: order parameter, gaps and relaxation time.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::FockSpace;
use crate::liouville::assemble;
use crate::models::{ground_state, DissipationChannel, HamiltonianParams, ModelSpec};
use crate::spectra::{gaps, relaxation_time, second_gap, sort_spectrum, spectrum, steady_state, Strategy};

/// Quantity tabulated by a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    /// Order parameter `ν = Tr[ρ_ss n̂]/N`.
    Nu,
    /// Liouvillian gap `Δ = −Re λ₁`.
    Gap,
    /// Hamiltonian gap `|Im λ₁|`.
    HamiltonianGap,
    /// Second gap `Δ₂ = −Re λ₂`.
    Gap2,
    /// Relaxation time `T_X = −1/Re λ₁`.
    #[serde(rename = "t_x")]
    TX,
}

impl Observable {
    pub const ALL: [Observable; 5] = [
        Observable::Nu,
        Observable::Gap,
        Observable::HamiltonianGap,
        Observable::Gap2,
        Observable::TX,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::Nu => "nu",
            Observable::Gap => "gap",
            Observable::HamiltonianGap => "hamiltonian_gap",
            Observable::Gap2 => "gap2",
            Observable::TX => "t_x",
        }
    }

    fn spectral(self) -> bool {
        !matches!(self, Observable::Nu)
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Observable::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::invalid("observable", format!("unknown observable `{s}`")))
    }
}

/// Normalization `N` of the order parameter: the scale of the scaled
/// Hamiltonian, else the truncation `N_Fock − 1`.
pub fn normalization(params: &HamiltonianParams, space: FockSpace) -> f64 {
    params.scale_n.unwrap_or(space.n_max()).max(1) as f64
}

/// `ν = Tr[ρ_ss n̂]/N` of the steady state.
pub fn order_parameter(params: &HamiltonianParams, channels: &[DissipationChannel], space: FockSpace) -> Result<f64> {
    let l = assemble(params, channels, space)?;
    let rho = steady_state(&l)?;
    Ok(rho.mean_number() / normalization(params, space))
}

/// `⟨n̂⟩/N` in the ground state of the closed Hamiltonian.
pub fn hamiltonian_order_parameter(params: &HamiltonianParams, space: FockSpace) -> Result<f64> {
    let (_, mean) = ground_state(params, space)?;
    Ok(mean / normalization(params, space))
}

/// Spectral observables of one Liouvillian.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralSummary {
    pub gap: f64,
    pub hamiltonian_gap: f64,
    pub gap2: Option<f64>,
    pub lambda1: faer::c64,
}

/// Gaps of the Liouvillian of `model`.
pub fn spectral_summary(model: &ModelSpec, space: FockSpace, strategy: Strategy) -> Result<SpectralSummary> {
    let l = assemble(&model.hamiltonian, &model.channels, space)?;
    let sorted = sort_spectrum(spectrum(&l, strategy)?);
    let g = gaps(&sorted)?;
    Ok(SpectralSummary {
        gap: g.liouvillian,
        hamiltonian_gap: g.hamiltonian,
        gap2: second_gap(&sorted).ok(),
        lambda1: sorted[1].lambda,
    })
}

/// Evaluates `observables` for one model; each entry fails independently.
pub fn evaluate(
    model: &ModelSpec,
    space: FockSpace,
    observables: &[Observable],
    strategy: Strategy,
) -> Vec<Result<f64>> {
    let sorted = observables.iter().any(|o| o.spectral()).then(|| {
        assemble(&model.hamiltonian, &model.channels, space)
            .and_then(|l| spectrum(&l, strategy))
            .map(sort_spectrum)
    });
    observables
        .iter()
        .map(|&o| {
            let spec = || match &sorted {
                Some(Ok(s)) => Ok(s),
                Some(Err(e)) => Err(Error::Numerical(e.to_string())),
                None => unreachable!("spectrum computed for spectral observables"),
            };
            match o {
                Observable::Nu => order_parameter(&model.hamiltonian, &model.channels, space),
                Observable::Gap => spec().and_then(|s| gaps(s)).map(|g| g.liouvillian),
                Observable::HamiltonianGap => spec().and_then(|s| gaps(s)).map(|g| g.hamiltonian),
                Observable::Gap2 => spec().and_then(|s| second_gap(s)),
                Observable::TX => spec().and_then(|s| relaxation_time(s)),
            }
        })
        .collect()
}
