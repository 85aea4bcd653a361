//! Doctest shims for the book: every fenced Rust block in `book/src/`
//! compiles and runs against this crate under `cargo test --doc`, keeping
//! the guide and the library in sync.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
mod graphs {}

#[doc = include_str!("../../../book/src/polytopes.md")]
mod polytopes {}

#[doc = include_str!("../../../book/src/toric.md")]
mod toric {}

#[doc = include_str!("../../../book/src/verifiers.md")]
mod verifiers {}
