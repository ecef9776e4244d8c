//! Executable theorem suites: evaluates the equivalence theorems for
//! ⋆-Prüfer, (⋆,v)-Prüfer, ⋆-CICD, (⋆,v)-CICD and ⋆-Dedekind structures over
//! exhaustive or sampled scopes, asserts internal consistency, and produces
//! classification reports with replayable witnesses.

pub mod catalog;
pub mod classify;
pub mod conditions;
pub mod report;
pub mod scope;
pub mod suites;

pub use classify::{builtin_stars, check_enumerated_stars, classify, classify_ns, ClassifyOptions};
pub use report::{ClassificationReport, Condition, EquivalenceReport, Witness};
pub use scope::{Scope, ScopeKind};
pub use suites::{gcd_decompose, replay_witness, run_suite, SuiteId};

#[cfg(test)]
mod tests;
