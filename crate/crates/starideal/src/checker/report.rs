//! Report types shared by the suites and the CLI. Field order is part of the
//! JSON contract; serialization is deterministic for identical inputs.

use serde::Serialize;

/// A failing instance: the ideals (and elements, when the condition is
/// element-quantified) in backend literal syntax, plus the two sides that
/// differ. Replaying the literals through the same condition reproduces the
/// mismatch byte for byte.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub ideals: Vec<String>,
    pub elements: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub relation: String,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Truth values for the conditions of one theorem, over one scope, for one
/// star operation.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub structure: String,
    pub star: String,
    pub suite: String,
    pub scope: String,
    pub conditions: Vec<Condition>,
    /// Predicates reported for information; not part of the consistency
    /// check (e.g. bare stability inside the stability suite).
    pub info: Vec<Condition>,
    pub consistent: bool,
}

#[derive(Serialize, Clone, Debug, Default, PartialEq, Eq)]
pub struct StarFlags {
    pub prufer: bool,
    pub v_prufer: bool,
    pub cicd: bool,
    pub v_cicd: bool,
    pub dedekind: bool,
    pub v_dedekind: bool,
    pub stable: bool,
    pub ab: bool,
    pub finite_character: bool,
    pub noetherian: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct StarClassification {
    pub star: String,
    pub flags: StarFlags,
    pub consistent: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct DerivedFlags {
    pub v_domain: bool,
    pub cicd: bool,
    pub krull_like: bool,
    pub pseudo_principal: bool,
    pub pseudo_dedekind: bool,
    pub ggcd: bool,
    pub product_dual: bool,
}

/// Summary over a streamed star enumeration when the full list is too large
/// to print.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedSummary {
    pub checked: usize,
    pub budget_exhausted: bool,
    pub all_consistent: bool,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub structure: String,
    pub scope: String,
    pub stars: Vec<StarClassification>,
    pub enumerated: Option<EnumeratedSummary>,
    pub derived: DerivedFlags,
    pub violations: Vec<String>,
    pub consistent: bool,
}
