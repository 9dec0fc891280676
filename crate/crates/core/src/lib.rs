//! Chains of dipole-coupled quantum harmonic oscillators modelling the
//! electron clouds of stacked nucleic-acid bases.
//!
//! The crate builds the symmetric coupling matrix of a base sequence,
//! diagonalizes it into phonon modes, evaluates thermal Gaussian second
//! moments, and derives entanglement witnesses (S1/S2 criteria, negativity,
//! single-site von Neumann entropy) together with the chain binding energy
//! and its large-spacing asymptotics.

pub use nalgebra;

pub mod energy;
pub mod error;
pub mod experiments;
pub mod gaussian;
pub mod model;
pub mod spectrum;
pub mod units;

pub use energy::BindingEnergyResult;
pub use error::Error;
pub use gaussian::{EntanglementReport, SecondMoments};
pub use model::{BaseKind, Boundary, ChainSpec, CouplingMatrix, Direction};
pub use spectrum::ModeSpectrum;
pub use units::Frequency;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
