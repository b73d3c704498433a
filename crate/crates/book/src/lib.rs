//! The guide in `book/` and the README as doc-tests. `cargo test -p catbraid-book --doc`
//! compiles and runs every Rust listing.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/coxeter.md")]
pub mod coxeter {}
#[doc = include_str!("../../../book/src/standard.md")]
pub mod standard {}
#[doc = include_str!("../../../book/src/dual.md")]
pub mod dual {}
#[doc = include_str!("../../../book/src/complexes.md")]
pub mod complexes {}
#[doc = include_str!("../../../book/src/action.md")]
pub mod action {}
#[doc = include_str!("../../../book/src/homological.md")]
pub mod homological {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
