//! Deterministic fixtures for the criterion suite.

use basechain::{BaseKind, Boundary, ChainSpec, Direction};

/// Cycles A, C, G, T up to the requested length.
pub fn pattern_sequence(n: usize) -> Vec<BaseKind> {
    BaseKind::ALL.iter().copied().cycle().take(n).collect()
}

/// Periodic room-temperature chain at the default geometry.
pub fn ring(n: usize) -> ChainSpec {
    ChainSpec::new(
        pattern_sequence(n),
        4.5e-10,
        1.0,
        Direction::X,
        Boundary::Periodic,
        300.0,
    )
    .expect("fixture parameters are valid")
}
