//! The chapters of `book/`, one module each, so `cargo test --doc` runs
//! every snippet against the current library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}

#[doc = include_str!("../../../book/src/psi.md")]
pub mod psi {}

#[doc = include_str!("../../../book/src/plocal.md")]
pub mod plocal {}

#[doc = include_str!("../../../book/src/modular.md")]
pub mod modular {}

#[doc = include_str!("../../../book/src/running.md")]
pub mod running {}
