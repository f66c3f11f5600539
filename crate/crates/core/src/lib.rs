//! Exact computation of p-element counting characters of finite groups.

pub mod arith;
pub mod cache;
pub mod chartab;
pub mod error;
pub mod linalg;
pub mod modular;
pub mod oracle;
pub mod perm;
pub mod plocal;
pub mod psi;
pub mod report;
pub mod suite;
pub mod verdict;
pub mod zoo;

pub use error::{Error, Result};
pub use perm::{FiniteGroup, Permutation, Subgroup};
pub use zoo::GroupSpec;
