//! Error type shared by every module of the crate.

/// Failure modes of chain construction and analysis.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter violates its documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A sequence string contains a character outside A/C/G/T.
    #[error("sequence parse error at position {position}: unexpected character '{found}'")]
    SequenceParse { position: usize, found: char },

    /// FASTA input holds more than one record; concatenation is ambiguous.
    #[error("FASTA input contains more than one record")]
    FastaMultiRecord,

    /// A squared mode frequency is non-positive: the harmonic model has no
    /// stable ground state at this spacing.
    #[error("chain unstable at this spacing: mode {index} has squared frequency {omega_sq:.6e} rad^2/s^2")]
    Unstable { index: usize, omega_sq: f64 },

    /// Second moments produced a symplectic eigenvalue below the physical
    /// bound of 1 by more than roundoff.
    #[error("inconsistent moments at site {site}: symplectic eigenvalue {r} below 1")]
    SymplecticBelowOne { site: usize, r: f64 },

    /// A separability criterion value sits at or below the hard bound -1.
    #[error("unphysical separability value: S{index} = {value} <= -1")]
    UnphysicalCriterion { index: usize, value: f64 },

    /// Paired inputs have incompatible lengths.
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
}
