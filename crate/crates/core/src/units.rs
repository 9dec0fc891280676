//! Physical constants, the frequency newtype, and the elementary frequency
//! formulas every other module consumes.
//!
//! Frequencies are stored in units of 10^15 rad/s and squared frequencies in
//! units of 10^30 rad^2/s^2, keeping all intermediate values near unity; SI
//! values appear only at input/output boundaries.

use crate::error::Error;
use crate::Result;

/// Elementary charge (C).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Electron mass (kg).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// Vacuum permittivity (F/m).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
/// Reduced Planck constant (J*s).
pub const REDUCED_PLANCK: f64 = 1.054_571_817e-34;
/// Boltzmann constant (J/K).
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// One atomic unit of polarizability (F*m^2), at the two-significant-digit
/// value the bundled per-base polarizability table is calibrated against.
pub const ATOMIC_POLARIZABILITY_UNIT: f64 = 1.6e-41;
/// Internal frequency scale: one stored frequency unit in rad/s.
pub const FREQUENCY_SCALE: f64 = 1e15;

/// Angular frequency in units of 10^15 rad/s; non-negative by construction.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Frequency(f64);

impl Frequency {
    /// Builds from a value already in 10^15 rad/s.
    pub fn from_scaled(value: f64) -> Result<Self> {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "frequency must be finite and non-negative, got {value}"
            )));
        }
        Ok(Self(value))
    }

    /// Builds from a squared frequency in 10^30 rad^2/s^2; a negative square
    /// is an instability, never a silent NaN.
    pub fn from_squared_scaled(squared: f64) -> Result<Self> {
        if !squared.is_finite() || squared < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "squared frequency must be finite and non-negative, got {squared}"
            )));
        }
        Ok(Self(squared.sqrt()))
    }

    /// Builds from an SI angular frequency in rad/s.
    pub fn from_rad_per_s(value: f64) -> Result<Self> {
        Self::from_scaled(value / FREQUENCY_SCALE)
    }

    /// Value in 10^15 rad/s (the canonical display unit).
    pub fn scaled(self) -> f64 {
        self.0
    }

    /// Value in rad/s.
    pub fn rad_per_s(self) -> f64 {
        self.0 * FREQUENCY_SCALE
    }

    /// Square in 10^30 rad^2/s^2.
    pub fn squared_scaled(self) -> f64 {
        self.0 * self.0
    }
}

/// Squared trapping frequency Omega^2 = n e^2 / (m_e alpha) in 10^30
/// rad^2/s^2, with alpha given in atomic units.
///
/// Computed as the n=1 value times n, so scaling in the electron count is
/// exact in floating point.
pub fn trapping_frequency_squared(alpha_au: f64, n_electrons: u32) -> Result<f64> {
    if !alpha_au.is_finite() || alpha_au <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "polarizability must be positive, got {alpha_au} au"
        )));
    }
    if n_electrons == 0 {
        return Err(Error::InvalidParameter(
            "electron count must be at least 1".into(),
        ));
    }
    let alpha_si = alpha_au * ATOMIC_POLARIZABILITY_UNIT;
    let base = ELEMENTARY_CHARGE * ELEMENTARY_CHARGE
        / (ELECTRON_MASS * alpha_si)
        / (FREQUENCY_SCALE * FREQUENCY_SCALE);
    Ok(f64::from(n_electrons) * base)
}

/// Trapping frequency Omega = sqrt(n e^2 / (m_e alpha)) for a cloud of
/// n_electrons bound with polarizability alpha (atomic units).
pub fn trapping_frequency(alpha_au: f64, n_electrons: u32) -> Result<Frequency> {
    Frequency::from_squared_scaled(trapping_frequency_squared(alpha_au, n_electrons)?)
}

/// Inverse of [`trapping_frequency`]: polarizability in atomic units.
pub fn polarizability_from_trapping(omega: Frequency, n_electrons: u32) -> Result<f64> {
    if omega.scaled() <= 0.0 {
        return Err(Error::InvalidParameter(
            "trapping frequency must be positive".into(),
        ));
    }
    if n_electrons == 0 {
        return Err(Error::InvalidParameter(
            "electron count must be at least 1".into(),
        ));
    }
    let omega_sq_si = omega.rad_per_s() * omega.rad_per_s();
    Ok(
        f64::from(n_electrons) * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE
            / (ELECTRON_MASS * omega_sq_si)
            / ATOMIC_POLARIZABILITY_UNIT,
    )
}

/// Nearest-neighbour coupling constant K_eff = sqrt(epsilon) n e^2 /
/// (4 pi eps0 m_e r^3) in 10^30 rad^2/s^2.
///
/// The environment scaling epsilon enters under a square root. As with the
/// trapping frequency, the electron count scales the n=1 value exactly.
pub fn coupling_constant(r_m: f64, epsilon: f64, n_electrons: u32) -> Result<f64> {
    if !r_m.is_finite() || r_m <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "spacing must be positive, got {r_m} m"
        )));
    }
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    if n_electrons == 0 {
        return Err(Error::InvalidParameter(
            "electron count must be at least 1".into(),
        ));
    }
    let base = epsilon.sqrt() * ELEMENTARY_CHARGE * ELEMENTARY_CHARGE
        / (4.0 * std::f64::consts::PI * VACUUM_PERMITTIVITY * ELECTRON_MASS * (r_m * r_m * r_m))
        / (FREQUENCY_SCALE * FREQUENCY_SCALE);
    Ok(f64::from(n_electrons) * base)
}

/// Thermal ratio 2 k_B T / (hbar omega); below 1 the mode is effectively in
/// its ground state. Exactly linear in T and inversely linear in omega.
pub fn thermal_ratio(temperature_k: f64, omega: Frequency) -> Result<f64> {
    if !temperature_k.is_finite() || temperature_k < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "temperature must be non-negative, got {temperature_k} K"
        )));
    }
    if omega.scaled() <= 0.0 {
        return Err(Error::InvalidParameter(
            "thermal ratio needs a positive frequency".into(),
        ));
    }
    Ok(2.0 * BOLTZMANN * temperature_k / (REDUCED_PLANCK * omega.rad_per_s()))
}
