//! p-subgroup complexes, the Steinberg virtual character and local formulas for Ψ.

mod checks;
mod poset;
mod steinberg;

pub use checks::*;
pub use poset::{ChainMode, ChainOrbit, PSubgroupPoset, PosetStats, DEFAULT_POSET_CAP};
pub use steinberg::*;
