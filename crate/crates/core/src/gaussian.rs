//! Thermal second moments of the coupled chain and the entanglement
//! quantities read off them: S1/S2 separability criteria, negativity,
//! single-site symplectic eigenvalue and von Neumann entropy.
//!
//! Moments are dimensionless: positions carry omega_ref/omega weights and
//! momenta the inverse, so a decoupled ground-state site has
//! Xmat_jj * Pmat_jj = 1 and every reported observable is independent of
//! the reference frequency.

use nalgebra::DMatrix;

use crate::energy::binding_energy;
use crate::error::Error;
use crate::model::{build_coupling_matrix, Boundary, ChainSpec};
use crate::spectrum::{numeric_modes, ModeSpectrum};
use crate::units::{Frequency, BOLTZMANN, REDUCED_PLANCK};
use crate::Result;

/// Symplectic eigenvalues this far below 1 are treated as roundoff and
/// clamped; larger deficits are reported as inconsistent moments.
const SYMPLECTIC_SLACK: f64 = 1e-9;

/// Dimensionless position/momentum covariances of the thermal Gaussian
/// state, with the reference frequency they were scaled by.
#[derive(Clone, Debug)]
pub struct SecondMoments {
    pub xmat: DMatrix<f64>,
    pub pmat: DMatrix<f64>,
    pub omega_ref: Frequency,
}

/// Per-pair and per-site entanglement quantities of one chain.
#[derive(Clone, Debug)]
pub struct EntanglementReport {
    pub pairs: Vec<PairReport>,
    pub sites: Vec<SiteReport>,
    /// Ground-state binding energy of the chain (J).
    pub binding_energy_j: f64,
}

/// Separability criteria and negativity of one adjacent pair.
#[derive(Clone, Copy, Debug)]
pub struct PairReport {
    pub j: usize,
    pub k: usize,
    pub s1: f64,
    pub s2: f64,
    pub negativity: f64,
}

/// Reduced-state invariants of one site.
#[derive(Clone, Copy, Debug)]
pub struct SiteReport {
    pub j: usize,
    pub symplectic: f64,
    pub vne: f64,
}

/// coth(hbar omega / 2 k_B T); exactly 1 at T = 0 and for arguments large
/// enough that the correction is below resolution.
fn thermal_coth(omega: Frequency, temperature_k: f64) -> f64 {
    if temperature_k == 0.0 {
        return 1.0;
    }
    let arg = REDUCED_PLANCK * omega.rad_per_s() / (2.0 * BOLTZMANN * temperature_k);
    if arg > 20.0 {
        1.0
    } else {
        let e = (-2.0 * arg).exp();
        (1.0 + e) / (1.0 - e)
    }
}

/// Thermal second moments with the default reference frequency (10^15 rad/s).
pub fn thermal_moments(spectrum: &ModeSpectrum, temperature_k: f64) -> Result<SecondMoments> {
    thermal_moments_with_ref(spectrum, temperature_k, Frequency::from_scaled(1.0)?)
}

/// Thermal second moments scaled by an explicit reference frequency.
///
/// Xmat_jk = sum_l (omega_ref/omega_l) coth(hbar omega_l / 2 k_B T) U_jl U_kl,
/// Pmat_jk = sum_l (omega_l/omega_ref) coth(hbar omega_l / 2 k_B T) U_jl U_kl.
pub fn thermal_moments_with_ref(
    spectrum: &ModeSpectrum,
    temperature_k: f64,
    omega_ref: Frequency,
) -> Result<SecondMoments> {
    if !temperature_k.is_finite() || temperature_k < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "temperature must be non-negative, got {temperature_k} K"
        )));
    }
    if omega_ref.scaled() <= 0.0 {
        return Err(Error::InvalidParameter(
            "reference frequency must be positive".into(),
        ));
    }
    let n = spectrum.len();
    let mut x_cols = spectrum.modes.clone();
    let mut p_cols = spectrum.modes.clone();
    for (l, omega) in spectrum.frequencies.iter().enumerate() {
        let occupation = thermal_coth(*omega, temperature_k);
        let x_weight = occupation * omega_ref.scaled() / omega.scaled();
        let p_weight = occupation * omega.scaled() / omega_ref.scaled();
        for i in 0..n {
            x_cols[(i, l)] *= x_weight;
            p_cols[(i, l)] *= p_weight;
        }
    }
    let ut = spectrum.modes.transpose();
    Ok(SecondMoments {
        xmat: &x_cols * &ut,
        pmat: &p_cols * &ut,
        omega_ref,
    })
}

/// Separability criteria of the site pair (j, k):
/// S1 = (Xjj + 2Xjk + Xkk)(Pjj - 2Pjk + Pkk)/4 - 1,
/// S2 = (Xjj - 2Xjk + Xkk)(Pjj + 2Pjk + Pkk)/4 - 1.
/// A negative value certifies entanglement of the pair.
pub fn pair_criteria(moments: &SecondMoments, j: usize, k: usize) -> Result<(f64, f64)> {
    let n = moments.xmat.nrows();
    if j >= n || k >= n || j == k {
        return Err(Error::InvalidParameter(format!(
            "pair indices ({j}, {k}) invalid for {n} sites"
        )));
    }
    let x = &moments.xmat;
    let p = &moments.pmat;
    let s1 = 0.25 * (x[(j, j)] + 2.0 * x[(j, k)] + x[(k, k)])
        * (p[(j, j)] - 2.0 * p[(j, k)] + p[(k, k)])
        - 1.0;
    let s2 = 0.25 * (x[(j, j)] - 2.0 * x[(j, k)] + x[(k, k)])
        * (p[(j, j)] + 2.0 * p[(j, k)] + p[(k, k)])
        - 1.0;
    Ok((s1, s2))
}

/// Negativity from the two criteria: sum_k max(0, -ln sqrt(S_k + 1)).
pub fn negativity(s1: f64, s2: f64) -> Result<f64> {
    let mut total = 0.0;
    for (index, s) in [(1, s1), (2, s2)] {
        if s <= -1.0 {
            return Err(Error::UnphysicalCriterion { index, value: s });
        }
        total += f64::max(0.0, -0.5 * (s + 1.0).ln());
    }
    Ok(total)
}

/// Symplectic eigenvalue r_j = sqrt(Xmat_jj * Pmat_jj) of a site's reduced
/// state and its von Neumann entropy in nats:
/// vNE = ((r+1)/2) ln((r+1)/2) - ((r-1)/2) ln((r-1)/2); a pure site (r = 1)
/// yields exactly 0.
pub fn single_site_entropy(moments: &SecondMoments, j: usize) -> Result<(f64, f64)> {
    let n = moments.xmat.nrows();
    if j >= n {
        return Err(Error::InvalidParameter(format!(
            "site index {j} outside 0..{n}"
        )));
    }
    let r = (moments.xmat[(j, j)] * moments.pmat[(j, j)]).sqrt();
    if r < 1.0 - SYMPLECTIC_SLACK {
        return Err(Error::SymplecticBelowOne { site: j, r });
    }
    if r <= 1.0 {
        return Ok((1.0, 0.0));
    }
    let up = (r + 1.0) / 2.0;
    let down = (r - 1.0) / 2.0;
    Ok((r, up * up.ln() - down * down.ln()))
}

/// Mean single-site von Neumann entropy over the whole chain.
pub fn mean_site_vne(moments: &SecondMoments) -> Result<f64> {
    let n = moments.xmat.nrows();
    let mut total = 0.0;
    for j in 0..n {
        total += single_site_entropy(moments, j)?.1;
    }
    Ok(total / n as f64)
}

/// Full per-pair and per-site report for a chain, including its binding
/// energy. Adjacent pairs include the wrap-around bond when periodic.
pub fn entanglement_report(spec: &ChainSpec) -> Result<EntanglementReport> {
    let v = build_coupling_matrix(spec)?;
    let spectrum = numeric_modes(&v)?;
    let moments = thermal_moments(&spectrum, spec.temperature_k)?;
    let n = spec.len();

    let mut pairs = Vec::new();
    for j in 0..n - 1 {
        let (s1, s2) = pair_criteria(&moments, j, j + 1)?;
        pairs.push(PairReport {
            j,
            k: j + 1,
            s1,
            s2,
            negativity: negativity(s1, s2)?,
        });
    }
    if spec.boundary == Boundary::Periodic {
        let (s1, s2) = pair_criteria(&moments, n - 1, 0)?;
        pairs.push(PairReport {
            j: n - 1,
            k: 0,
            s1,
            s2,
            negativity: negativity(s1, s2)?,
        });
    }

    let mut sites = Vec::with_capacity(n);
    for j in 0..n {
        let (symplectic, vne) = single_site_entropy(&moments, j)?;
        sites.push(SiteReport { j, symplectic, vne });
    }

    let traps = spec.trap_frequencies()?;
    let binding_energy_j = binding_energy(&spectrum, &traps)?;
    Ok(EntanglementReport {
        pairs,
        sites,
        binding_energy_j,
    })
}
