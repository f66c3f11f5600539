//! Ordinary character tables and class-function algebra.

pub mod blocks;
mod classfn;
mod cyclotomic;
pub mod dixon;
pub mod gfext;
mod table;

pub use blocks::{block_distribution, Block};
pub use classfn::{frac, ClassFunction};
pub(crate) use classfn::is_nonneg_int;
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use table::{CharacterTable, SERIAL_VERSION};

use crate::perm::FiniteGroup;

/// Compute the verified character table of `g`.
pub fn character_table(g: &FiniteGroup) -> crate::Result<CharacterTable> {
    CharacterTable::compute(g)
}
