//! The capability contract every ideal-system backend implements.
//!
//! An ideal system is a monoid or domain D together with exact arithmetic on
//! its nonzero fractional ideals: sum, product, intersection, colon quotient,
//! principal ideals and scaling by elements of the quotient structure. The
//! star-operation layer and the theorem suites are generic over this trait.
//!
//! Ideals are immutable values; every operation is pure. Ideals passed to an
//! operation must belong to the system the method is called on — the concrete
//! backend surfaces (`numsg`, `quadorder`, `monomial`) return proper errors
//! for mixed owners, while the trait methods treat a mismatch as a caller bug.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;
use crate::rng::SplitMix64;

/// Bounds for deterministic ideal sampling; each backend interprets the
/// fields it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleBounds {
    /// Height bound on numerators/denominators (quadratic orders), offsets
    /// (numerical semigroups) or generator entries (monomial ideals).
    pub height: i64,
    /// Maximum number of generators for sampled monomial ideals.
    pub max_gens: usize,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds {
            height: 5,
            max_gens: 5,
        }
    }
}

pub trait IdealSystem: Send + Sync {
    type Ideal: Clone + Eq + Ord + Hash + Debug + Send + Sync;
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    /// Structure descriptor, e.g. `ns(3,4,5)` or `qo(N=-5,f=1)`.
    fn name(&self) -> String;

    /// The unit ideal D.
    fn unit(&self) -> Self::Ideal;

    /// Smallest ideal containing both arguments.
    fn sum(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;

    fn product(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;

    fn intersect(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;

    /// `(a : b) = { x in K | x·b ⊆ a }`.
    fn colon(&self, a: &Self::Ideal, b: &Self::Ideal) -> Self::Ideal;

    /// `a ⊆ b`.
    fn is_subideal(&self, a: &Self::Ideal, b: &Self::Ideal) -> bool;

    fn principal(&self, e: &Self::Elem) -> Self::Ideal;

    /// `e·a` for a nonzero element of the quotient structure.
    fn scale(&self, e: &Self::Elem, a: &Self::Ideal) -> Self::Ideal;

    /// Finite generating set; regenerating from it must reproduce the ideal.
    fn minimal_generators(&self, a: &Self::Ideal) -> Vec<Self::Elem>;

    /// Ideal generated by finitely many elements.
    fn generated(&self, gens: &[Self::Elem]) -> Result<Self::Ideal>;

    /// All ideals in canonical normalized position, when finitely many.
    fn enumerate_normalized(&self) -> Option<Vec<Self::Ideal>> {
        None
    }

    /// Split `a = z·E` with `E` normalized, when the backend has a canonical
    /// normalized position.
    fn normalize(&self, a: &Self::Ideal) -> Option<(Self::Elem, Self::Ideal)> {
        let _ = a;
        None
    }

    /// Backend-supplied w-operation (intersection of localizations at the
    /// maximal t-ideals); each backend documents its structural form.
    fn w_closure(&self, a: &Self::Ideal) -> Self::Ideal;

    /// Whether the complete integral closure equals D itself.
    fn cic_is_self(&self) -> bool;

    /// Human description of the complete integral closure.
    fn cic_description(&self) -> String;

    fn is_principal(&self, a: &Self::Ideal) -> bool;

    /// Nonzero scaling elements used to augment exhaustive pair scopes with
    /// relative translates. Empty for sampled backends.
    fn relative_translates(&self) -> Vec<Self::Elem> {
        Vec::new()
    }

    /// Scaling elements used to materialize the group of ⋆-invertible
    /// ⋆-ideals from a scope; may be wider than the pair translates.
    fn group_translates(&self) -> Vec<Self::Elem> {
        self.relative_translates()
    }

    /// Small window of elements of D for element-quantified conditions.
    fn element_window(&self) -> Vec<Self::Elem>;

    /// Deterministic sample; identical seeds yield identical ideals.
    fn sample_ideal(&self, rng: &mut SplitMix64, bounds: &SampleBounds) -> Self::Ideal;

    /// Canonical ideals prepended to sampled scopes (unit, known witnesses).
    fn seed_ideals(&self) -> Vec<Self::Ideal> {
        vec![self.unit()]
    }

    fn ideal_literal(&self, a: &Self::Ideal) -> String;
    fn parse_ideal(&self, s: &str) -> Result<Self::Ideal>;
    fn elem_literal(&self, e: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// For a family member E and an ideal A, the finitely many translates
    /// `z·E ⊇ A` whose intersection (together with `A^v`) realizes the
    /// family-defined closure. `None` when the backend cannot bound them.
    fn family_translates(&self, e: &Self::Ideal, a: &Self::Ideal) -> Option<Vec<Self::Ideal>> {
        let _ = (e, a);
        None
    }
}
