pub mod alphabet;
pub mod columns;
pub mod crystal;
pub mod harness;
pub mod insertion;
pub mod relations;
pub mod rewriting;
pub mod tableaux;
