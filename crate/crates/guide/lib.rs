//! Runs the code listings of the guide in `book/` as doc tests.

#![doc = include_str!("../../book/src/introduction.md")]

#[doc = include_str!("../../book/src/alphabet.md")]
pub mod alphabet {}
#[doc = include_str!("../../book/src/crystals.md")]
pub mod crystals {}
#[doc = include_str!("../../book/src/columns.md")]
pub mod columns {}
#[doc = include_str!("../../book/src/tableaux.md")]
pub mod tableaux {}
#[doc = include_str!("../../book/src/insertion.md")]
pub mod insertion {}
#[doc = include_str!("../../book/src/rewriting.md")]
pub mod rewriting {}
#[doc = include_str!("../../book/src/completion.md")]
pub mod completion {}
#[doc = include_str!("../../book/src/verification.md")]
pub mod verification {}
#[doc = include_str!("../../README.md")]
pub mod readme {}
