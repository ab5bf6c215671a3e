//! The guide's code listings, compiled as doctests.
//!
//! Each chapter of `book/src` becomes the documentation of an empty module,
//! so `cargo test --doc -p bosonic-book` runs every `rust` block in it and
//! a failure names the chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/laurent.md")]
pub mod laurent {}
#[doc = include_str!("../../../book/src/weyl.md")]
pub mod weyl {}
#[doc = include_str!("../../../book/src/weights.md")]
pub mod weights {}
#[doc = include_str!("../../../book/src/lattice.md")]
pub mod lattice {}
#[doc = include_str!("../../../book/src/operators.md")]
pub mod operators {}
#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../../book/src/spherical.md")]
pub mod spherical {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
