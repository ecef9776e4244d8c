//! Condition framework: an evaluation context with memoized closures, typed
//! quantifiers, and per-instance condition evaluators that double as witness
//! replayers.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::checker::report::Witness;
use crate::checker::scope::Scope;
use crate::error::{Error, Result};
use crate::star::{self, StarOperation};
use crate::system::IdealSystem;

const CACHE_CAP: usize = 100_000;

/// Evaluation context for one (system, star, scope) run. Caches are per-run;
/// runs may execute in parallel with no shared state.
pub struct Ctx<'a, S: IdealSystem> {
    pub sys: &'a S,
    pub star: &'a StarOperation<S>,
    pub scope: &'a Scope<S>,
    star_cache: RefCell<HashMap<S::Ideal, S::Ideal>>,
    v_cache: RefCell<HashMap<S::Ideal, S::Ideal>>,
    inv_cache: RefCell<HashMap<S::Ideal, S::Ideal>>,
    sf_cache: RefCell<HashMap<S::Ideal, S::Ideal>>,
    sf_star: StarOperation<S>,
    /// ⋆-invertible ⋆-ideals materialized from the scope, for the
    /// lattice-group and gcd suites.
    inv_ideals: RefCell<Option<std::rc::Rc<Vec<S::Ideal>>>>,
}

impl<'a, S: IdealSystem> Ctx<'a, S> {
    pub fn new(sys: &'a S, star: &'a StarOperation<S>, scope: &'a Scope<S>) -> Ctx<'a, S> {
        Ctx {
            sys,
            star,
            scope,
            star_cache: RefCell::new(HashMap::new()),
            v_cache: RefCell::new(HashMap::new()),
            inv_cache: RefCell::new(HashMap::new()),
            sf_cache: RefCell::new(HashMap::new()),
            sf_star: star::finite_character(star),
            inv_ideals: RefCell::new(None),
        }
    }

    fn cached(
        cache: &RefCell<HashMap<S::Ideal, S::Ideal>>,
        a: &S::Ideal,
        f: impl FnOnce() -> S::Ideal,
    ) -> S::Ideal {
        if let Some(v) = cache.borrow().get(a) {
            return v.clone();
        }
        let v = f();
        let mut c = cache.borrow_mut();
        if c.len() < CACHE_CAP {
            c.insert(a.clone(), v.clone());
        }
        v
    }

    /// A^⋆.
    pub fn st(&self, a: &S::Ideal) -> S::Ideal {
        Self::cached(&self.star_cache, a, || self.star.apply(self.sys, a))
    }

    /// A^v.
    pub fn v(&self, a: &S::Ideal) -> S::Ideal {
        Self::cached(&self.v_cache, a, || star::v_closure(self.sys, a))
    }

    /// A^{-1}.
    pub fn inv(&self, a: &S::Ideal) -> S::Ideal {
        Self::cached(&self.inv_cache, a, || star::inverse(self.sys, a))
    }

    /// A^{⋆_f}, by the literal finite-character route.
    pub fn sf(&self, a: &S::Ideal) -> S::Ideal {
        Self::cached(&self.sf_cache, a, || self.sf_star.apply(self.sys, a))
    }

    pub fn unit(&self) -> S::Ideal {
        self.sys.unit()
    }

    pub fn invertible(&self, a: &S::Ideal) -> bool {
        self.st(&self.sys.product(a, &self.inv(a))) == self.unit()
    }

    pub fn invertible_sf(&self, a: &S::Ideal) -> bool {
        self.sf(&self.sys.product(a, &self.inv(a))) == self.unit()
    }

    /// The ⋆-invertible ⋆-ideals drawn from the scope: closures of invertible
    /// scope ideals, plus their translates on exhaustive scopes.
    pub fn inv_ideals(&self) -> std::rc::Rc<Vec<S::Ideal>> {
        if let Some(l) = self.inv_ideals.borrow().as_ref() {
            return l.clone();
        }
        let mut out = Vec::new();
        for a in &self.scope.ideals {
            if self.invertible(a) {
                let sa = self.st(a);
                if !out.contains(&sa) {
                    out.push(sa);
                }
            }
        }
        let base = out.clone();
        for t in &self.scope.group_translates {
            for a in &base {
                let ta = self.sys.scale(t, a);
                if !out.contains(&ta) {
                    out.push(ta);
                }
            }
        }
        out.sort();
        out.dedup();
        let rc = std::rc::Rc::new(out);
        *self.inv_ideals.borrow_mut() = Some(rc.clone());
        rc
    }
}

/// One quantified instance of a condition.
#[derive(Debug, PartialEq, Eq)]
pub enum Instance<S: IdealSystem> {
    Global,
    One(S::Ideal),
    Two(S::Ideal, S::Ideal),
    Three(S::Ideal, S::Ideal, S::Ideal),
    Elems(S::Elem, S::Elem),
}

impl<S: IdealSystem> Clone for Instance<S> {
    fn clone(&self) -> Self {
        match self {
            Instance::Global => Instance::Global,
            Instance::One(a) => Instance::One(a.clone()),
            Instance::Two(a, b) => Instance::Two(a.clone(), b.clone()),
            Instance::Three(a, b, c) => Instance::Three(a.clone(), b.clone(), c.clone()),
            Instance::Elems(x, y) => Instance::Elems(x.clone(), y.clone()),
        }
    }
}

impl<S: IdealSystem> Instance<S> {
    pub fn serialize(&self, sys: &S) -> (Vec<String>, Vec<String>) {
        match self {
            Instance::Global => (vec![], vec![]),
            Instance::One(a) => (vec![sys.ideal_literal(a)], vec![]),
            Instance::Two(a, b) => (vec![sys.ideal_literal(a), sys.ideal_literal(b)], vec![]),
            Instance::Three(a, b, c) => (
                vec![
                    sys.ideal_literal(a),
                    sys.ideal_literal(b),
                    sys.ideal_literal(c),
                ],
                vec![],
            ),
            Instance::Elems(x, y) => (vec![], vec![sys.elem_literal(x), sys.elem_literal(y)]),
        }
    }

    pub fn parse(sys: &S, kind: Quant, ideals: &[String], elements: &[String]) -> Result<Self> {
        let need = |n: usize| -> Result<Vec<S::Ideal>> {
            if ideals.len() != n {
                return Err(Error::Parse(format!(
                    "expected {n} ideal literals, got {}",
                    ideals.len()
                )));
            }
            ideals.iter().map(|s| sys.parse_ideal(s)).collect()
        };
        Ok(match kind {
            Quant::Global => Instance::Global,
            Quant::Ideals | Quant::TwoGenerated | Quant::InvIdeals => {
                let mut v = need(1)?;
                Instance::One(v.remove(0))
            }
            Quant::PairsPlain | Quant::PairsShifted | Quant::InvPairs => {
                let mut v = need(2)?;
                let b = v.remove(1);
                Instance::Two(v.remove(0), b)
            }
            Quant::Triples | Quant::InvTriples => {
                let mut v = need(3)?;
                let c = v.remove(2);
                let b = v.remove(1);
                Instance::Three(v.remove(0), b, c)
            }
            Quant::ElemPairs => {
                if elements.len() != 2 {
                    return Err(Error::Parse("expected two element literals".into()));
                }
                Instance::Elems(sys.parse_elem(&elements[0])?, sys.parse_elem(&elements[1])?)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quant {
    Global,
    Ideals,
    PairsPlain,
    PairsShifted,
    Triples,
    /// Two-generated ideals built from element pairs; instance is the ideal.
    TwoGenerated,
    ElemPairs,
    /// Members / pairs / triples from the materialized ⋆-invertible ⋆-ideals.
    InvIdeals,
    InvPairs,
    InvTriples,
}

/// A failing evaluation; sides are kept as values and rendered lazily.
#[derive(Clone, Debug)]
pub struct Mismatch<S: IdealSystem> {
    pub lhs: S::Ideal,
    pub rhs: S::Ideal,
    pub relation: &'static str,
}

pub fn ne<S: IdealSystem>(lhs: S::Ideal, rhs: S::Ideal) -> Option<Mismatch<S>> {
    if lhs == rhs {
        None
    } else {
        Some(Mismatch {
            lhs,
            rhs,
            relation: "!=",
        })
    }
}

pub type EvalFn<S> = fn(&Ctx<S>, &Instance<S>) -> Option<Mismatch<S>>;

pub struct CondDef<S: IdealSystem> {
    pub label: &'static str,
    pub quant: Quant,
    /// Consistency group within the suite.
    pub group: u8,
    /// Informational predicates are reported but excluded from consistency.
    pub informational: bool,
    pub eval: EvalFn<S>,
}

/// Outcome of one condition over the scope.
#[derive(Clone, Debug)]
pub struct CondEval<S: IdealSystem> {
    pub label: &'static str,
    pub group: u8,
    pub informational: bool,
    pub holds: bool,
    pub witness: Option<(Instance<S>, Mismatch<S>)>,
}

pub fn render_witness<S: IdealSystem>(
    sys: &S,
    instance: &Instance<S>,
    mismatch: &Mismatch<S>,
) -> Witness {
    let (ideals, elements) = instance.serialize(sys);
    Witness {
        ideals,
        elements,
        lhs: sys.ideal_literal(&mismatch.lhs),
        rhs: sys.ideal_literal(&mismatch.rhs),
        relation: mismatch.relation.to_string(),
    }
}

/// Evaluates one condition over the scope, trying `hint` first. Returns the
/// truth value and the first witness in scan order on failure.
pub fn eval_condition<S: IdealSystem>(
    ctx: &Ctx<S>,
    def: &CondDef<S>,
    hint: Option<&Instance<S>>,
) -> CondEval<S> {
    if let Some(h) = hint {
        if let Some(m) = (def.eval)(ctx, h) {
            return CondEval {
                label: def.label,
                group: def.group,
                informational: def.informational,
                holds: false,
                witness: Some((h.clone(), m)),
            };
        }
    }
    let witness = scan(ctx, def);
    CondEval {
        label: def.label,
        group: def.group,
        informational: def.informational,
        holds: witness.is_none(),
        witness,
    }
}

fn scan<S: IdealSystem>(ctx: &Ctx<S>, def: &CondDef<S>) -> Option<(Instance<S>, Mismatch<S>)> {
    let scope = ctx.scope;
    let sys = ctx.sys;
    match def.quant {
        Quant::Global => {
            let inst = Instance::Global;
            (def.eval)(ctx, &inst).map(|m| (inst, m))
        }
        Quant::Ideals => scope.scan_ideals(|a| {
            let inst = Instance::One(a.clone());
            (def.eval)(ctx, &inst).map(|m| (inst, m))
        }),
        Quant::PairsPlain => scope.scan_pairs_plain(|a, b| {
            let inst = Instance::Two(a.clone(), b.clone());
            (def.eval)(ctx, &inst).map(|m| (inst, m))
        }),
        Quant::PairsShifted => scope.scan_pairs_shifted(sys, |a, b| {
            let inst = Instance::Two(a.clone(), b.clone());
            (def.eval)(ctx, &inst).map(|m| (inst, m))
        }),
        Quant::Triples => scope.scan_triples(sys, |p, a, b| {
            let inst = Instance::Three(p.clone(), a.clone(), b.clone());
            (def.eval)(ctx, &inst).map(|m| (inst, m))
        }),
        Quant::TwoGenerated => scope.scan_elem_pairs(|x, y| {
            let f = sys.sum(&sys.principal(x), &sys.principal(y));
            let inst = Instance::One(f);
            (def.eval)(ctx, &inst).map(|m| (inst, m))
        }),
        Quant::ElemPairs => scope.scan_elem_pairs(|x, y| {
            let inst = Instance::Elems(x.clone(), y.clone());
            (def.eval)(ctx, &inst).map(|m| (inst, m))
        }),
        Quant::InvIdeals => {
            let list = ctx.inv_ideals();
            for a in list.iter() {
                let inst = Instance::One(a.clone());
                if let Some(m) = (def.eval)(ctx, &inst) {
                    return Some((inst, m));
                }
            }
            None
        }
        Quant::InvPairs => {
            let list = ctx.inv_ideals();
            let mut budget = ctx.scope.pair_limit;
            for a in list.iter() {
                for b in list.iter() {
                    if budget == 0 {
                        return None;
                    }
                    budget -= 1;
                    let inst = Instance::Two(a.clone(), b.clone());
                    if let Some(m) = (def.eval)(ctx, &inst) {
                        return Some((inst, m));
                    }
                }
            }
            None
        }
        Quant::InvTriples => {
            let list = ctx.inv_ideals();
            let mut budget = ctx.scope.triple_limit;
            for a in list.iter() {
                for b in list.iter() {
                    for c in list.iter() {
                        if budget == 0 {
                            return None;
                        }
                        budget -= 1;
                        let inst = Instance::Three(a.clone(), b.clone(), c.clone());
                        if let Some(m) = (def.eval)(ctx, &inst) {
                            return Some((inst, m));
                        }
                    }
                }
            }
            None
        }
    }
}
