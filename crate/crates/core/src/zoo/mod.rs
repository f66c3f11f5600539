//! Constructors for the standard group families.

mod construct;
pub mod field;
mod spec;

pub use construct::{construct, direct_product, generators};
pub use field::Field;
pub use spec::GroupSpec;

/// Parse and build in one step.
pub fn build(spec: &str) -> crate::Result<crate::FiniteGroup> {
    construct(&spec.parse()?)
}
