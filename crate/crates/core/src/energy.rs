//! Ground-state binding energy of a chain and the leading-order laws it
//! obeys at weak coupling, used both as physical output and as a
//! convergence check on the numerics.

use crate::error::Error;
use crate::model::{build_coupling_matrix, ChainSpec, Direction};
use crate::spectrum::{numeric_modes, ModeSpectrum};
use crate::units::{coupling_constant, Frequency, FREQUENCY_SCALE, REDUCED_PLANCK};
use crate::Result;

/// Exact binding energy and its weak-coupling estimate for one chain.
/// The asymptotic fields are NaN for mixed sequences, where no single
/// trapping frequency defines the expansion.
#[derive(Clone, Copy, Debug)]
pub struct BindingEnergyResult {
    pub n_sites: usize,
    /// (hbar/2) (sum of mode frequencies - sum of trap frequencies), J.
    pub exact_j: f64,
    /// -n hbar Omega s^2 / 8, J.
    pub asymptotic_j: f64,
    /// Dimensionless coupling strength s = |c_d| K_eff / Omega^2.
    pub s_witness: f64,
    /// |exact - asymptotic| / |exact|.
    pub relative_gap: f64,
}

/// Binding energy in joules: half of hbar times the difference between the
/// coupled mode frequencies and the bare trap frequencies. Negative for any
/// stable coupled chain.
pub fn binding_energy(spectrum: &ModeSpectrum, traps: &[Frequency]) -> Result<f64> {
    if spectrum.len() != traps.len() {
        return Err(Error::LengthMismatch(format!(
            "{} modes vs {} trap frequencies",
            spectrum.len(),
            traps.len()
        )));
    }
    let modes: f64 = spectrum.frequencies.iter().map(|f| f.scaled()).sum();
    let bare: f64 = traps.iter().map(|f| f.scaled()).sum();
    Ok(0.5 * REDUCED_PLANCK * (modes - bare) * FREQUENCY_SCALE)
}

/// Leading-order value of the pair criterion that certifies entanglement
/// in a weakly coupled uniform chain: -|c_d| K_eff / Omega^2. Along x/y
/// this is the asymptote of S1, along z of S2.
pub fn asymptotic_witness(omega0: Frequency, k_eff: f64, direction: Direction) -> f64 {
    -coupling_strength(omega0, k_eff, direction)
}

/// Weak-coupling binding energy -n hbar Omega s^2 / 8 in joules, with
/// s the dimensionless coupling strength along the chosen direction.
pub fn asymptotic_binding_energy(n_sites: usize, omega0: Frequency, s: f64) -> f64 {
    -(n_sites as f64) * REDUCED_PLANCK * omega0.rad_per_s() * s * s / 8.0
}

/// s = |c_d| K_eff / Omega^2.
fn coupling_strength(omega0: Frequency, k_eff: f64, direction: Direction) -> f64 {
    direction.coupling_sign().abs() * k_eff / omega0.squared_scaled()
}

/// Exact binding energy of a chain together with its weak-coupling
/// estimate. Uniform sequences get the asymptotic comparison; mixed ones
/// report NaN for the asymptotic fields.
pub fn binding_report(spec: &ChainSpec) -> Result<BindingEnergyResult> {
    let v = build_coupling_matrix(spec)?;
    let spectrum = numeric_modes(&v)?;
    let traps = spec.trap_frequencies()?;
    let exact_j = binding_energy(&spectrum, &traps)?;
    let n_sites = spec.len();

    let uniform = spec.sequence.iter().all(|b| *b == spec.sequence[0]);
    if !uniform {
        return Ok(BindingEnergyResult {
            n_sites,
            exact_j,
            asymptotic_j: f64::NAN,
            s_witness: f64::NAN,
            relative_gap: f64::NAN,
        });
    }
    let omega0 = traps[0];
    let k_eff = coupling_constant(spec.spacing_m, spec.epsilon, spec.n_electrons)?;
    let s_witness = coupling_strength(omega0, k_eff, spec.direction);
    let asymptotic_j = asymptotic_binding_energy(n_sites, omega0, s_witness);
    Ok(BindingEnergyResult {
        n_sites,
        exact_j,
        asymptotic_j,
        s_witness,
        relative_gap: (exact_j - asymptotic_j).abs() / exact_j.abs(),
    })
}
