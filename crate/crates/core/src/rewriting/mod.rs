//! Rewriting systems presenting the plactic monoid.

pub mod acol;
pub mod completion;
pub mod congruence;
pub mod engine;
pub mod sp;

pub use acol::{AcolError, AcolSystem};
pub use completion::{kb_complete, type_a_knuth_rules, CompletionError, CompletionReport};
pub use congruence::{congruence_classes, congruence_oracle, CongruenceError};
pub use engine::{Redex, RewriteError, RewriteSystem, Rule, RuleFamily, Strategy};
pub use sp::{reverse_deglex_cmp, reverse_deglex_greater, sp_rules};
