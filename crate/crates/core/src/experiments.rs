//! Prebuilt numerical experiments: negativity versus spacing for a family
//! of uniform rings, entropy statistics over a random-sequence ensemble,
//! and the nearest-neighbor entropy grid on a fixed probe chain.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::gaussian::{mean_site_vne, pair_criteria, single_site_entropy, thermal_moments};
use crate::model::{BaseKind, Boundary, ChainSpec, CouplingMatrix, Direction};
use crate::spectrum::{chain_modes, numeric_modes};
use crate::units::{coupling_constant, Frequency};
use crate::Result;

/// Sites in the neighbor-probe chain.
const PROBE_SITES: usize = 17;
/// Index of the measured site, flanked by the two substituted neighbors.
const PROBE_CENTER: usize = 8;
/// Probe spacing in meters.
const PROBE_SPACING_M: f64 = 4.5e-10;

/// One uniform-ring configuration of the spacing scan.
#[derive(Clone, Copy, Debug)]
pub struct ScanConfig {
    pub epsilon: f64,
    pub direction: Direction,
    pub omega0: Frequency,
}

impl ScanConfig {
    /// Compact tag for output rows, e.g. "z6_eps1" or "x4_eps0.01".
    pub fn label(&self) -> String {
        format!(
            "{}{}_eps{}",
            self.direction.symbol(),
            self.omega0.scaled(),
            self.epsilon
        )
    }
}

/// Negativity of the middle adjacent pair at one spacing.
#[derive(Clone, Copy, Debug)]
pub struct ScanPoint {
    pub r_angstrom: f64,
    pub s1: f64,
    pub s2: f64,
    pub negativity: f64,
}

/// Scan results of a single configuration. A configuration that turns
/// unstable stops at the offending spacing and reports it here; other
/// configurations are unaffected.
#[derive(Clone, Debug)]
pub struct ConfigScan {
    pub config: ScanConfig,
    pub points: Vec<ScanPoint>,
    pub failure: Option<ScanFailure>,
}

/// Spacing at which a configuration aborted, with the reported cause.
#[derive(Clone, Debug)]
pub struct ScanFailure {
    pub r_angstrom: f64,
    pub message: String,
}

/// The five ring configurations scanned by default: soft and stiff traps
/// at full coupling, plus strongly screened variants.
pub fn default_scan_configs() -> Vec<ScanConfig> {
    [
        (1.0, Direction::Z, 6.0),
        (1.0, Direction::X, 4.0),
        (1.0, Direction::X, 3.0),
        (0.01, Direction::Z, 6.0),
        (0.01, Direction::X, 4.0),
    ]
    .into_iter()
    .map(|(epsilon, direction, omega)| ScanConfig {
        epsilon,
        direction,
        omega0: Frequency::from_scaled(omega).expect("static scan table"),
    })
    .collect()
}

/// Sweeps the base spacing and records the middle-pair separability
/// criteria and negativity of an `n_sites` uniform ring per configuration.
pub fn negativity_scan(
    r_min_angstrom: f64,
    r_max_angstrom: f64,
    steps: usize,
    n_sites: usize,
    temperature_k: f64,
    configs: &[ScanConfig],
) -> Result<Vec<ConfigScan>> {
    if !(r_min_angstrom > 0.0 && r_max_angstrom > r_min_angstrom) {
        return Err(Error::InvalidParameter(format!(
            "spacing range must satisfy 0 < min < max, got [{r_min_angstrom}, {r_max_angstrom}]"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidParameter(format!(
            "scan needs at least 2 steps, got {steps}"
        )));
    }
    if n_sites < 3 {
        return Err(Error::InvalidParameter(format!(
            "ring scan needs at least 3 sites, got {n_sites}"
        )));
    }
    if configs.is_empty() {
        return Err(Error::InvalidParameter(
            "scan needs at least one configuration".into(),
        ));
    }
    let dr = (r_max_angstrom - r_min_angstrom) / (steps - 1) as f64;
    let (j, k) = (n_sites / 2 - 1, n_sites / 2);

    let mut scans = Vec::with_capacity(configs.len());
    for config in configs {
        let mut points = Vec::with_capacity(steps);
        let mut failure = None;
        for step in 0..steps {
            let r_angstrom = r_min_angstrom + dr * step as f64;
            let point = (|| -> Result<ScanPoint> {
                let k_eff = coupling_constant(r_angstrom * 1e-10, config.epsilon, 1)?;
                let v = CouplingMatrix::uniform(
                    n_sites,
                    config.omega0,
                    k_eff,
                    config.direction,
                    Boundary::Periodic,
                )?;
                let moments = thermal_moments(&numeric_modes(&v)?, temperature_k)?;
                let (s1, s2) = pair_criteria(&moments, j, k)?;
                Ok(ScanPoint {
                    r_angstrom,
                    s1,
                    s2,
                    negativity: crate::gaussian::negativity(s1, s2)?,
                })
            })();
            match point {
                Ok(p) => points.push(p),
                Err(e) => {
                    failure = Some(ScanFailure {
                        r_angstrom,
                        message: e.to_string(),
                    });
                    break;
                }
            }
        }
        scans.push(ConfigScan {
            config: *config,
            points,
            failure,
        });
    }
    Ok(scans)
}

/// One random chain of the entropy ensemble. Spectral fields are NaN when
/// the drawn chain is unstable at the requested parameters.
#[derive(Clone, Debug)]
pub struct EnsembleRecord {
    pub index: usize,
    /// First word of the record's derived stream, as a stable identifier.
    pub seed: u64,
    pub sequence: String,
    pub shannon_nats: f64,
    pub shannon_bits: f64,
    pub mean_vne: f64,
    /// Lowest mode frequency (10^15 rad/s).
    pub min_omega_scaled: f64,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the 32-byte stream seed of one record from the master seed.
/// Records own disjoint streams, so any record can be regenerated alone.
pub fn substream_seed(master: u64, index: u64) -> [u8; 32] {
    let mut state = master.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    seed
}

/// Draws a uniform i.i.d. base sequence from the record's stream.
fn random_sequence(rng: &mut ChaCha8Rng, length: usize) -> Vec<BaseKind> {
    (0..length)
        .map(|_| BaseKind::ALL[(rng.next_u32() >> 30) as usize])
        .collect()
}

/// Shannon entropy of a sequence's empirical base distribution, in
/// (nats, bits). Absent bases contribute zero.
pub fn shannon_entropy(sequence: &[BaseKind]) -> (f64, f64) {
    let mut counts = [0usize; 4];
    for base in sequence {
        counts[*base as usize] += 1;
    }
    let total = sequence.len() as f64;
    let nats = counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.ln()
        })
        .sum::<f64>();
    (nats, nats / std::f64::consts::LN_2)
}

/// Generates `n_strings` open chains of i.i.d. random bases and records
/// each one's composition entropy, mean single-site von Neumann entropy,
/// and lowest mode frequency.
pub fn ensemble_entropy(
    n_strings: usize,
    length: usize,
    spacing_m: f64,
    epsilon: f64,
    direction: Direction,
    temperature_k: f64,
    master_seed: u64,
) -> Result<Vec<EnsembleRecord>> {
    if n_strings == 0 {
        return Err(Error::InvalidParameter("ensemble needs at least 1 string".into()));
    }
    if length < 2 {
        return Err(Error::InvalidParameter(format!(
            "ensemble strings need at least 2 bases, got {length}"
        )));
    }
    let mut records = Vec::with_capacity(n_strings);
    for index in 0..n_strings {
        let seed_bytes = substream_seed(master_seed, index as u64);
        let seed = u64::from_le_bytes(seed_bytes[..8].try_into().expect("8-byte prefix"));
        let mut rng = ChaCha8Rng::from_seed(seed_bytes);
        let sequence = random_sequence(&mut rng, length);
        let (shannon_nats, shannon_bits) = shannon_entropy(&sequence);
        let spec = ChainSpec::new(
            sequence.clone(),
            spacing_m,
            epsilon,
            direction,
            Boundary::Open,
            temperature_k,
        )?;
        // An unstable draw is a data point, not a failure of the ensemble.
        let (mean_vne, min_omega_scaled) = match chain_modes(&spec) {
            Ok(spectrum) => {
                let moments = thermal_moments(&spectrum, temperature_k)?;
                (mean_site_vne(&moments)?, spectrum.min_frequency().scaled())
            }
            Err(Error::Unstable { .. }) => (f64::NAN, f64::NAN),
            Err(e) => return Err(e),
        };
        records.push(EnsembleRecord {
            index,
            seed,
            sequence: crate::model::sequence_string(&sequence),
            shannon_nats,
            shannon_bits,
            mean_vne,
            min_omega_scaled,
        });
    }
    Ok(records)
}

/// Ground-state entropy of a probe site flanked by the two given bases.
///
/// The probe is a 17-site open chain of adenine with the two neighbors of
/// the center site substituted, displacements along x at 4.5 angstrom full
/// coupling. The neighbor order cannot matter physically, so arguments are
/// canonicalized to make the grid exactly symmetric.
pub fn neighbor_table(left: BaseKind, right: BaseKind) -> Result<f64> {
    let (left, right) = if right < left { (right, left) } else { (left, right) };
    let mut sequence = vec![BaseKind::Adenine; PROBE_SITES];
    sequence[PROBE_CENTER - 1] = left;
    sequence[PROBE_CENTER + 1] = right;
    let spec = ChainSpec::new(
        sequence,
        PROBE_SPACING_M,
        1.0,
        Direction::X,
        Boundary::Open,
        0.0,
    )?;
    let moments = thermal_moments(&chain_modes(&spec)?, 0.0)?;
    Ok(single_site_entropy(&moments, PROBE_CENTER)?.1)
}

/// Full 4x4 neighbor-entropy grid in `BaseKind` order.
pub fn neighbor_grid() -> Result<[[f64; 4]; 4]> {
    let mut grid = [[0.0; 4]; 4];
    for (i, left) in BaseKind::ALL.into_iter().enumerate() {
        for (j, right) in BaseKind::ALL.into_iter().enumerate() {
            grid[i][j] = neighbor_table(left, right)?;
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn substreams_are_deterministic_and_disjoint() {
        assert_eq!(substream_seed(42, 7), substream_seed(42, 7));
        assert_ne!(substream_seed(42, 7), substream_seed(42, 8));
        assert_ne!(substream_seed(42, 7), substream_seed(43, 7));
    }

    #[test]
    fn random_sequences_cover_all_bases() {
        let mut rng = ChaCha8Rng::from_seed(substream_seed(1, 0));
        let seq = random_sequence(&mut rng, 1000);
        for base in BaseKind::ALL {
            assert!(seq.contains(&base), "missing {base:?}");
        }
        let mut again = ChaCha8Rng::from_seed(substream_seed(1, 0));
        assert_eq!(seq, random_sequence(&mut again, 1000));
    }

    #[test]
    fn shannon_entropy_examples() {
        use BaseKind::*;
        let (nats, bits) = shannon_entropy(&[Adenine, Adenine, Cytosine, Guanine]);
        assert_relative_eq!(nats, 1.039_720_770_839_918, max_relative = 1e-14);
        assert_relative_eq!(bits, 1.5, max_relative = 1e-14);
        assert_eq!(shannon_entropy(&[Thymine; 8]), (0.0, 0.0));
        let (nats, bits) = shannon_entropy(&[Adenine, Cytosine, Guanine, Thymine]);
        assert_relative_eq!(nats, 4.0f64.ln(), max_relative = 1e-14);
        assert_relative_eq!(bits, 2.0, max_relative = 1e-14);
    }

    #[test]
    fn ensemble_is_reproducible_and_tagged() {
        let records =
            ensemble_entropy(4, 20, 4.5e-10, 1.0, Direction::X, 0.0, 42).unwrap();
        let again = ensemble_entropy(4, 20, 4.5e-10, 1.0, Direction::X, 0.0, 42).unwrap();
        assert_eq!(records.len(), 4);
        for (a, b) in records.iter().zip(&again) {
            assert_eq!(a.sequence, b.sequence);
            assert_eq!(a.seed, b.seed);
            assert_eq!(a.mean_vne.to_bits(), b.mean_vne.to_bits());
        }
        for r in &records {
            assert_eq!(r.sequence.len(), 20);
            assert!(r.mean_vne > 0.0);
            assert!(r.min_omega_scaled > 0.0);
            assert!(r.shannon_bits <= 2.0 + 1e-12);
        }
        // Distinct substreams give distinct draws.
        assert_ne!(records[0].sequence, records[1].sequence);
    }

    #[test]
    fn ensemble_flags_unstable_draws_with_nan() {
        // 1.5 angstrom makes every chain unstable along z.
        let records =
            ensemble_entropy(2, 10, 1.5e-10, 1.0, Direction::Z, 0.0, 7).unwrap();
        for r in &records {
            assert!(r.mean_vne.is_nan());
            assert!(r.min_omega_scaled.is_nan());
            assert!(r.shannon_nats >= 0.0);
        }
    }

    #[test]
    fn neighbor_table_is_exactly_symmetric() {
        use BaseKind::*;
        let cg = neighbor_table(Cytosine, Guanine).unwrap();
        let gc = neighbor_table(Guanine, Cytosine).unwrap();
        assert_eq!(cg.to_bits(), gc.to_bits());
        assert_relative_eq!(cg, 2.138_824_359_651_519e-2, max_relative = 1e-10);
        assert_relative_eq!(
            neighbor_table(Adenine, Adenine).unwrap(),
            2.320_810_613_254_202e-2,
            max_relative = 1e-10
        );
    }

    #[test]
    fn neighbor_grid_matches_pairwise_calls() {
        let grid = neighbor_grid().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(grid[i][j].to_bits(), grid[j][i].to_bits());
                assert!(grid[i][j] > 0.0);
            }
        }
        let tt = neighbor_table(BaseKind::Thymine, BaseKind::Thymine).unwrap();
        assert_eq!(grid[3][3].to_bits(), tt.to_bits());
    }

    #[test]
    fn scan_points_decay_with_spacing() {
        let configs = default_scan_configs();
        assert_eq!(configs.len(), 5);
        assert_eq!(configs[0].label(), "z6_eps1");
        assert_eq!(configs[4].label(), "x4_eps0.01");
        let scans = negativity_scan(4.0, 8.0, 3, 50, 0.0, &configs).unwrap();
        for scan in &scans {
            assert!(scan.failure.is_none(), "{:?}", scan.failure);
            assert_eq!(scan.points.len(), 3);
            for pair in scan.points.windows(2) {
                assert!(pair[0].negativity > pair[1].negativity);
            }
            for p in &scan.points {
                assert!(p.negativity >= 0.0);
                assert!(!(p.s1 < 0.0 && p.s2 < 0.0));
            }
        }
    }

    #[test]
    fn unstable_config_aborts_alone() {
        let configs = [
            ScanConfig {
                epsilon: 1.0,
                direction: Direction::Z,
                omega0: Frequency::from_scaled(6.0).unwrap(),
            },
            ScanConfig {
                epsilon: 0.01,
                direction: Direction::X,
                omega0: Frequency::from_scaled(4.0).unwrap(),
            },
        ];
        let scans = negativity_scan(2.8, 3.0, 3, 50, 0.0, &configs).unwrap();
        let failed = &scans[0];
        assert!(failed.points.is_empty());
        let failure = failed.failure.as_ref().unwrap();
        assert_eq!(failure.r_angstrom, 2.8);
        assert!(failure.message.contains("unstable"), "{}", failure.message);
        let fine = &scans[1];
        assert!(fine.failure.is_none());
        assert_eq!(fine.points.len(), 3);
    }

    #[test]
    fn scan_rejects_bad_ranges() {
        let configs = default_scan_configs();
        assert!(negativity_scan(8.0, 4.0, 3, 50, 0.0, &configs).is_err());
        assert!(negativity_scan(0.0, 4.0, 3, 50, 0.0, &configs).is_err());
        assert!(negativity_scan(4.0, 8.0, 1, 50, 0.0, &configs).is_err());
        assert!(negativity_scan(4.0, 8.0, 3, 2, 0.0, &configs).is_err());
        assert!(negativity_scan(4.0, 8.0, 3, 50, 0.0, &[]).is_err());
    }
}
