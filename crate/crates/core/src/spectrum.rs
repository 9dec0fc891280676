//! Phonon frequencies and mode vectors: analytic for uniform periodic
//! chains, numeric (dense symmetric eigendecomposition) for everything else.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::Error;
use crate::model::{build_coupling_matrix, ChainSpec, CouplingMatrix, Direction};
use crate::units::{Frequency, FREQUENCY_SCALE};
use crate::Result;

/// Full eigenstructure of a coupling matrix: frequencies ascending, mode
/// vectors as the matching columns of an orthogonal matrix.
#[derive(Clone, Debug)]
pub struct ModeSpectrum {
    pub frequencies: Vec<Frequency>,
    pub modes: DMatrix<f64>,
}

impl ModeSpectrum {
    /// Number of modes.
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    /// True when the spectrum is empty (never for a valid chain).
    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }

    /// Smallest mode frequency.
    pub fn min_frequency(&self) -> Frequency {
        self.frequencies[0]
    }
}

/// Mode frequency of a uniform periodic chain, mode index l in 1..=n.
///
/// Transverse: omega^2 = Omega^2 + 2(2cos^2(pi l / n) - 1) K_eff.
/// Longitudinal: omega^2 = Omega^2 + 4(2sin^2(pi l / n) - 1) K_eff.
pub fn analytic_dispersion(
    omega0: Frequency,
    k_eff: f64,
    n: usize,
    direction: Direction,
    l: usize,
) -> Result<Frequency> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "periodic dispersion needs at least 3 sites, got {n}"
        )));
    }
    if l < 1 || l > n {
        return Err(Error::InvalidParameter(format!(
            "mode index {l} outside 1..={n}"
        )));
    }
    let theta = std::f64::consts::PI * l as f64 / n as f64;
    let omega_sq = match direction {
        Direction::X | Direction::Y => {
            omega0.squared_scaled() + 2.0 * (2.0 * theta.cos().powi(2) - 1.0) * k_eff
        }
        Direction::Z => omega0.squared_scaled() + 4.0 * (2.0 * theta.sin().powi(2) - 1.0) * k_eff,
    };
    if omega_sq <= 0.0 {
        return Err(Error::Unstable {
            index: l,
            omega_sq: omega_sq * FREQUENCY_SCALE * FREQUENCY_SCALE,
        });
    }
    Frequency::from_squared_scaled(omega_sq)
}

/// Dense symmetric eigendecomposition of a coupling matrix.
///
/// Frequencies come out ascending; each mode vector's sign is fixed so its
/// largest-magnitude component (lowest index on ties) is positive, making
/// the output deterministic for identical input.
pub fn numeric_modes(v: &CouplingMatrix) -> Result<ModeSpectrum> {
    let n = v.n_sites();
    let eigen = SymmetricEigen::new(v.matrix.clone());

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigen.eigenvalues[a].total_cmp(&eigen.eigenvalues[b]));

    let mut frequencies = Vec::with_capacity(n);
    let mut modes = DMatrix::zeros(n, n);
    for (rank, &src) in order.iter().enumerate() {
        let omega_sq = eigen.eigenvalues[src];
        if omega_sq <= 0.0 {
            return Err(Error::Unstable {
                index: rank + 1,
                omega_sq: omega_sq * FREQUENCY_SCALE * FREQUENCY_SCALE,
            });
        }
        frequencies.push(Frequency::from_squared_scaled(omega_sq)?);
        let column = eigen.eigenvectors.column(src);
        let mut dominant = 0;
        for i in 1..n {
            if column[i].abs() > column[dominant].abs() {
                dominant = i;
            }
        }
        let sign = if column[dominant] < 0.0 { -1.0 } else { 1.0 };
        for i in 0..n {
            modes[(i, rank)] = sign * column[i];
        }
    }
    Ok(ModeSpectrum { frequencies, modes })
}

/// Convenience: coupling matrix plus eigendecomposition for a chain spec.
pub fn chain_modes(spec: &ChainSpec) -> Result<ModeSpectrum> {
    numeric_modes(&build_coupling_matrix(spec)?)
}

/// Smallest phonon frequency of a chain; errors propagate from the solve.
pub fn min_frequency(spec: &ChainSpec) -> Result<Frequency> {
    Ok(chain_modes(spec)?.min_frequency())
}
