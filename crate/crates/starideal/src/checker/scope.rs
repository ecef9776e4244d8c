//! Quantification scopes: the ideal, element, pair and triple families a
//! suite ranges over.
//!
//! An exhaustive scope materializes the full normalized enumeration and, for
//! pair- and triple-quantified conditions whose truth is not invariant under
//! translating one argument, augments pairs with the backend's bounded
//! relative translates; beyond those bounds the pair is nested and the
//! conditions hold trivially, so the augmented scan genuinely decides the
//! universally quantified statement. Sampled scopes record their seed and are
//! reported as evidence, not proof.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::system::{IdealSystem, SampleBounds};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScopeKind {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

pub struct Scope<S: IdealSystem> {
    pub kind: ScopeKind,
    pub ideals: Vec<S::Ideal>,
    /// Nonzero scaling elements for shifted pairs; empty on sampled scopes.
    pub translates: Vec<S::Elem>,
    /// Scaling elements for materializing the invertible-ideal group.
    pub group_translates: Vec<S::Elem>,
    pub elements: Vec<S::Elem>,
    /// Caps for sampled pair/triple scans (exhaustive scopes are uncapped).
    pub pair_limit: usize,
    pub triple_limit: usize,
    desc: String,
}

impl<S: IdealSystem> Scope<S> {
    pub fn exhaustive(sys: &S) -> Result<Scope<S>> {
        let ideals = sys
            .enumerate_normalized()
            .ok_or_else(|| Error::ExhaustiveUnsupported(sys.name()))?;
        let translates = sys.relative_translates();
        let group_translates = sys.group_translates();
        let elements = sys.element_window();
        let desc = format!(
            "exhaustive(normalized={},translates={})",
            ideals.len(),
            translates.len()
        );
        Ok(Scope {
            kind: ScopeKind::Exhaustive,
            ideals,
            translates,
            group_translates,
            elements,
            pair_limit: usize::MAX,
            triple_limit: usize::MAX,
            desc,
        })
    }

    pub fn sampled(sys: &S, seed: u64, count: usize, bounds: SampleBounds) -> Scope<S> {
        let mut ideals = sys.seed_ideals();
        let mut rng = SplitMix64::new(seed);
        while ideals.len() < count {
            let a = sys.sample_ideal(&mut rng, &bounds);
            ideals.push(a);
        }
        let elements = sys.element_window();
        let desc = format!(
            "sampled(seed={seed},count={},height={},max_gens={})",
            ideals.len(),
            bounds.height,
            bounds.max_gens
        );
        Scope {
            kind: ScopeKind::Sampled {
                seed,
                count: ideals.len(),
            },
            ideals,
            translates: Vec::new(),
            group_translates: Vec::new(),
            elements,
            pair_limit: 250_000,
            triple_limit: 125_000,
            desc,
        }
    }

    pub fn describe(&self) -> &str {
        &self.desc
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self.kind, ScopeKind::Exhaustive)
    }

    /// Visits (A, B) pairs without translates. Stops early on `Some`.
    pub fn scan_pairs_plain<R>(
        &self,
        mut f: impl FnMut(&S::Ideal, &S::Ideal) -> Option<R>,
    ) -> Option<R> {
        let mut budget = self.pair_limit;
        for a in &self.ideals {
            for b in &self.ideals {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                if let Some(r) = f(a, b) {
                    return Some(r);
                }
            }
        }
        None
    }

    /// Visits (A, z·B) pairs including the backend's relative translates.
    pub fn scan_pairs_shifted<R>(
        &self,
        sys: &S,
        mut f: impl FnMut(&S::Ideal, &S::Ideal) -> Option<R>,
    ) -> Option<R> {
        let mut budget = self.pair_limit;
        for a in &self.ideals {
            for b in &self.ideals {
                if budget == 0 {
                    return None;
                }
                budget -= 1;
                if let Some(r) = f(a, b) {
                    return Some(r);
                }
            }
        }
        for t in &self.translates {
            for b0 in &self.ideals {
                let b = sys.scale(t, b0);
                for a in &self.ideals {
                    if budget == 0 {
                        return None;
                    }
                    budget -= 1;
                    if let Some(r) = f(a, &b) {
                        return Some(r);
                    }
                }
            }
        }
        None
    }

    /// Visits (P, A, B) with P plain and (A, B) a shifted pair.
    pub fn scan_triples<R>(
        &self,
        sys: &S,
        mut f: impl FnMut(&S::Ideal, &S::Ideal, &S::Ideal) -> Option<R>,
    ) -> Option<R> {
        let mut budget = self.triple_limit;
        let mut inner = |a: &S::Ideal, b: &S::Ideal, budget: &mut usize| -> Option<R> {
            for p in &self.ideals {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                if let Some(r) = f(p, a, b) {
                    return Some(r);
                }
            }
            None
        };
        for a in &self.ideals {
            for b in &self.ideals {
                if let Some(r) = inner(a, b, &mut budget) {
                    return Some(r);
                }
                if budget == 0 {
                    return None;
                }
            }
        }
        for t in &self.translates {
            for b0 in &self.ideals {
                let b = sys.scale(t, b0);
                for a in &self.ideals {
                    if let Some(r) = inner(a, &b, &mut budget) {
                        return Some(r);
                    }
                    if budget == 0 {
                        return None;
                    }
                }
            }
        }
        None
    }

    pub fn scan_ideals<R>(&self, f: impl FnMut(&S::Ideal) -> Option<R>) -> Option<R> {
        self.ideals.iter().find_map(f)
    }

    pub fn scan_elem_pairs<R>(
        &self,
        mut f: impl FnMut(&S::Elem, &S::Elem) -> Option<R>,
    ) -> Option<R> {
        for x in &self.elements {
            for y in &self.elements {
                if let Some(r) = f(x, y) {
                    return Some(r);
                }
            }
        }
        None
    }
}
