//! Chain description (sequence, geometry, environment) and the symmetric
//! coupling matrix whose eigenstructure defines the phonon modes.

use nalgebra::DMatrix;

use crate::error::Error;
use crate::units::{coupling_constant, trapping_frequency_squared, Frequency};
use crate::Result;

/// The four nucleic-acid bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseKind {
    Adenine,
    Cytosine,
    Guanine,
    Thymine,
}

/// Per-base polarizabilities (atomic units) along x, y, z, in `BaseKind`
/// declaration order.
const POLARIZABILITY_AU: [[f64; 3]; 4] = [
    [102.5, 114.0, 49.6], // adenine
    [78.8, 107.1, 44.2],  // cytosine
    [108.7, 124.8, 51.2], // guanine
    [80.7, 101.7, 45.9],  // thymine
];

impl BaseKind {
    /// All bases in canonical A, C, G, T order.
    pub const ALL: [BaseKind; 4] = [
        BaseKind::Adenine,
        BaseKind::Cytosine,
        BaseKind::Guanine,
        BaseKind::Thymine,
    ];

    /// Case-insensitive letter lookup.
    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(BaseKind::Adenine),
            'C' => Some(BaseKind::Cytosine),
            'G' => Some(BaseKind::Guanine),
            'T' => Some(BaseKind::Thymine),
            _ => None,
        }
    }

    /// Single-letter code.
    pub fn symbol(self) -> char {
        match self {
            BaseKind::Adenine => 'A',
            BaseKind::Cytosine => 'C',
            BaseKind::Guanine => 'G',
            BaseKind::Thymine => 'T',
        }
    }

    /// Polarizability along the given direction, in atomic units.
    pub fn polarizability_au(self, direction: Direction) -> f64 {
        POLARIZABILITY_AU[self as usize][direction as usize]
    }
}

/// Displacement direction of the electron clouds relative to the chain axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    X,
    Y,
    Z,
}

impl Direction {
    /// Orientation factor of the dipole-dipole term: transverse displacements
    /// couple with +1, longitudinal (z) with -2.
    pub fn coupling_sign(self) -> f64 {
        match self {
            Direction::X | Direction::Y => 1.0,
            Direction::Z => -2.0,
        }
    }

    /// Lowercase letter code.
    pub fn symbol(self) -> char {
        match self {
            Direction::X => 'x',
            Direction::Y => 'y',
            Direction::Z => 'z',
        }
    }
}

/// Chain boundary condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    Open,
    Periodic,
}

/// Full description of a chain experiment.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    pub sequence: Vec<BaseKind>,
    /// Base spacing in meters.
    pub spacing_m: f64,
    /// Environment scaling of the dipole coupling; enters as sqrt(epsilon).
    pub epsilon: f64,
    pub direction: Direction,
    pub boundary: Boundary,
    pub temperature_k: f64,
    /// Interacting electrons per base; observables are invariant in it.
    pub n_electrons: u32,
}

impl ChainSpec {
    /// Validating constructor with one interacting electron per base.
    pub fn new(
        sequence: Vec<BaseKind>,
        spacing_m: f64,
        epsilon: f64,
        direction: Direction,
        boundary: Boundary,
        temperature_k: f64,
    ) -> Result<Self> {
        let spec = Self {
            sequence,
            spacing_m,
            epsilon,
            direction,
            boundary,
            temperature_k,
            n_electrons: 1,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Same chain with a different electron count.
    pub fn with_electrons(mut self, n_electrons: u32) -> Result<Self> {
        self.n_electrons = n_electrons;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        if self.sequence.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "chain needs at least 2 sites, got {}",
                self.sequence.len()
            )));
        }
        if self.boundary == Boundary::Periodic && self.sequence.len() < 3 {
            // A periodic two-site ring would double-count its single bond.
            return Err(Error::InvalidParameter(
                "periodic boundary needs at least 3 sites".into(),
            ));
        }
        if !self.spacing_m.is_finite() || self.spacing_m <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "spacing must be positive, got {} m",
                self.spacing_m
            )));
        }
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if !self.temperature_k.is_finite() || self.temperature_k < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "temperature must be non-negative, got {} K",
                self.temperature_k
            )));
        }
        if self.n_electrons == 0 {
            return Err(Error::InvalidParameter(
                "electron count must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Number of sites.
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    /// True when the sequence is empty (never for a validated spec).
    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Per-site trapping frequencies along the chain's direction.
    pub fn trap_frequencies(&self) -> Result<Vec<Frequency>> {
        self.sequence
            .iter()
            .map(|b| {
                Frequency::from_squared_scaled(trapping_frequency_squared(
                    b.polarizability_au(self.direction),
                    self.n_electrons,
                )?)
            })
            .collect()
    }
}

/// Symmetric matrix of squared frequencies (10^30 rad^2/s^2): per-site
/// trapping on the diagonal, signed coupling on the first off-diagonals,
/// plus corner elements when periodic.
#[derive(Clone, Debug)]
pub struct CouplingMatrix {
    pub matrix: DMatrix<f64>,
}

impl CouplingMatrix {
    /// Matrix for a uniform chain with an explicitly given trapping
    /// frequency, bypassing the base table.
    pub fn uniform(
        n_sites: usize,
        omega0: Frequency,
        k_eff: f64,
        direction: Direction,
        boundary: Boundary,
    ) -> Result<Self> {
        if n_sites < 2 || (boundary == Boundary::Periodic && n_sites < 3) {
            return Err(Error::InvalidParameter(format!(
                "uniform chain needs at least {} sites, got {n_sites}",
                if boundary == Boundary::Periodic { 3 } else { 2 }
            )));
        }
        if !k_eff.is_finite() || k_eff < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "coupling constant must be non-negative, got {k_eff}"
            )));
        }
        let diag = omega0.squared_scaled();
        let off = direction.coupling_sign() * k_eff;
        Ok(Self {
            matrix: assemble(&vec![diag; n_sites], off, boundary),
        })
    }

    /// Number of sites.
    pub fn n_sites(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Builds the coupling matrix of a chain: diagonal Omega_j^2 from each
/// base's polarizability, off-diagonal c_d * K_eff shared by every bond.
pub fn build_coupling_matrix(spec: &ChainSpec) -> Result<CouplingMatrix> {
    spec.validate()?;
    let k_eff = coupling_constant(spec.spacing_m, spec.epsilon, spec.n_electrons)?;
    let off = spec.direction.coupling_sign() * k_eff;
    let diag = spec
        .sequence
        .iter()
        .map(|b| {
            trapping_frequency_squared(b.polarizability_au(spec.direction), spec.n_electrons)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CouplingMatrix {
        matrix: assemble(&diag, off, spec.boundary),
    })
}

fn assemble(diag: &[f64], off: f64, boundary: Boundary) -> DMatrix<f64> {
    let n = diag.len();
    let mut m = DMatrix::zeros(n, n);
    for (j, &d) in diag.iter().enumerate() {
        m[(j, j)] = d;
    }
    for j in 0..n - 1 {
        m[(j, j + 1)] = off;
        m[(j + 1, j)] = off;
    }
    if boundary == Boundary::Periodic {
        m[(0, n - 1)] = off;
        m[(n - 1, 0)] = off;
    }
    m
}

/// Parses a plain base string or single-record FASTA content.
///
/// Whitespace is skipped; a header line (leading '>') is allowed only before
/// any base characters; positions in errors are 1-based over the whole text.
pub fn parse_sequence(text: &str) -> Result<Vec<BaseKind>> {
    let mut out = Vec::new();
    let mut in_header = false;
    let mut seen_header = false;
    let mut at_line_start = true;
    for (i, c) in text.chars().enumerate() {
        let position = i + 1;
        if in_header {
            if c == '\n' {
                in_header = false;
                at_line_start = true;
            }
            continue;
        }
        if c == '>' && at_line_start {
            if seen_header || !out.is_empty() {
                return Err(Error::FastaMultiRecord);
            }
            seen_header = true;
            in_header = true;
            continue;
        }
        at_line_start = c == '\n';
        if c.is_whitespace() {
            continue;
        }
        match BaseKind::from_char(c) {
            Some(base) => out.push(base),
            None => return Err(Error::SequenceParse { position, found: c }),
        }
    }
    Ok(out)
}

/// Renders a sequence back to its single-letter string.
pub fn sequence_string(sequence: &[BaseKind]) -> String {
    sequence.iter().map(|b| b.symbol()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::coupling_constant;

    fn uniform_spec(base: BaseKind, n: usize, direction: Direction) -> ChainSpec {
        ChainSpec::new(vec![base; n], 4.5e-10, 1.0, direction, Boundary::Open, 300.0).unwrap()
    }

    #[test]
    fn open_x_chain_has_positive_off_diagonal() {
        let spec = uniform_spec(BaseKind::Adenine, 3, Direction::X);
        let v = build_coupling_matrix(&spec).unwrap().matrix;
        let k = coupling_constant(4.5e-10, 1.0, 1).unwrap();
        let omega_sq = trapping_frequency_squared(102.5, 1).unwrap();
        assert_eq!(v[(0, 0)], omega_sq);
        assert_eq!(v[(1, 1)], omega_sq);
        assert_eq!(v[(0, 1)], k);
        assert_eq!(v[(1, 0)], k);
        assert_eq!(v[(0, 2)], 0.0);
    }

    #[test]
    fn z_chain_flips_and_doubles_the_coupling() {
        let spec = uniform_spec(BaseKind::Adenine, 3, Direction::Z);
        let v = build_coupling_matrix(&spec).unwrap().matrix;
        let k = coupling_constant(4.5e-10, 1.0, 1).unwrap();
        assert_eq!(v[(0, 1)], -2.0 * k);
    }

    #[test]
    fn periodic_boundary_adds_corners() {
        let mut spec = uniform_spec(BaseKind::Guanine, 5, Direction::Y);
        spec.boundary = Boundary::Periodic;
        let v = build_coupling_matrix(&spec).unwrap().matrix;
        assert_eq!(v[(0, 4)], v[(0, 1)]);
        assert_eq!(v[(4, 0)], v[(0, 1)]);
    }

    #[test]
    fn matrix_is_exactly_symmetric() {
        let spec = ChainSpec::new(
            parse_sequence("ACGTTGCA").unwrap(),
            4.0e-10,
            0.5,
            Direction::Z,
            Boundary::Periodic,
            300.0,
        )
        .unwrap();
        let v = build_coupling_matrix(&spec).unwrap().matrix;
        for i in 0..v.nrows() {
            for j in 0..v.ncols() {
                assert_eq!(v[(i, j)].to_bits(), v[(j, i)].to_bits());
            }
        }
    }

    #[test]
    fn sequence_reversal_conjugates_by_the_flip_permutation() {
        let seq = parse_sequence("ACGGTA").unwrap();
        let spec = ChainSpec::new(seq.clone(), 4.5e-10, 1.0, Direction::X, Boundary::Open, 0.0)
            .unwrap();
        let v = build_coupling_matrix(&spec).unwrap().matrix;
        let mut rev = seq;
        rev.reverse();
        let spec_rev =
            ChainSpec::new(rev, 4.5e-10, 1.0, Direction::X, Boundary::Open, 0.0).unwrap();
        let w = build_coupling_matrix(&spec_rev).unwrap().matrix;
        let n = v.nrows();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(w[(i, j)].to_bits(), v[(n - 1 - i, n - 1 - j)].to_bits());
            }
        }
    }

    #[test]
    fn electron_scaling_is_exact_entrywise() {
        let base = uniform_spec(BaseKind::Cytosine, 4, Direction::X);
        let v1 = build_coupling_matrix(&base).unwrap().matrix;
        for n in [2u32, 5] {
            let spec_n = base.clone().with_electrons(n).unwrap();
            let vn = build_coupling_matrix(&spec_n).unwrap().matrix;
            for i in 0..4 {
                for j in 0..4 {
                    assert_eq!(vn[(i, j)].to_bits(), (f64::from(n) * v1[(i, j)]).to_bits());
                }
            }
        }
    }

    #[test]
    fn spec_validation_rejects_degenerate_chains() {
        assert!(ChainSpec::new(
            vec![BaseKind::Adenine],
            4.5e-10,
            1.0,
            Direction::X,
            Boundary::Open,
            300.0
        )
        .is_err());
        assert!(ChainSpec::new(
            vec![BaseKind::Adenine; 2],
            4.5e-10,
            1.0,
            Direction::X,
            Boundary::Periodic,
            300.0
        )
        .is_err());
        assert!(ChainSpec::new(
            vec![BaseKind::Adenine; 3],
            -1.0,
            1.0,
            Direction::X,
            Boundary::Open,
            300.0
        )
        .is_err());
    }

    #[test]
    fn parses_plain_and_fasta_text() {
        use BaseKind::*;
        assert_eq!(
            parse_sequence("ACGT").unwrap(),
            vec![Adenine, Cytosine, Guanine, Thymine]
        );
        assert_eq!(
            parse_sequence(">seq1\nacg\ntA").unwrap(),
            vec![Adenine, Cytosine, Guanine, Thymine, Adenine]
        );
        assert_eq!(parse_sequence("  a c\ng t ").unwrap().len(), 4);
        assert_eq!(parse_sequence("").unwrap(), vec![]);
    }

    #[test]
    fn rejects_non_base_characters_with_position() {
        match parse_sequence("ACGU") {
            Err(Error::SequenceParse { position, found }) => {
                assert_eq!(position, 4);
                assert_eq!(found, 'U');
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        // '>' not at a line start is data, not a header.
        assert!(matches!(
            parse_sequence("AC>G"),
            Err(Error::SequenceParse { position: 3, found: '>' })
        ));
    }

    #[test]
    fn rejects_multi_record_fasta() {
        assert!(matches!(
            parse_sequence(">a\nACG\n>b\nTTT"),
            Err(Error::FastaMultiRecord)
        ));
        // A header after plain bases is equally ambiguous.
        assert!(matches!(
            parse_sequence("ACG\n>late\nTTT"),
            Err(Error::FastaMultiRecord)
        ));
    }

    #[test]
    fn sequence_string_round_trips() {
        let seq = parse_sequence("GATTACA").unwrap();
        assert_eq!(sequence_string(&seq), "GATTACA");
    }
}
