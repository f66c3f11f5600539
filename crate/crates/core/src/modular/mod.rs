//! Decomposition matrices, Brauer characters and the projectivity of Ψ.

mod checks;
mod decomp;
mod system;

pub use checks::*;
pub use decomp::{load_decomposition, trivial_decomposition, validate, DecompositionData, DecompositionFile, HEADER};
pub use system::{brauer_system, BrauerSystem, SystemInvariants};
