//! The executable theorem suites.
//!
//! Each suite lists the conditions of one equivalence theorem; a condition is
//! a universally quantified identity evaluated over the scope, early-exiting
//! on the first witness. On an exhaustive scope all conditions of a suite
//! must share one truth value (possibly per group, with the documented
//! implications between groups); that is the executed content of the theorem.

use crate::checker::conditions::{
    eval_condition, ne, render_witness, CondDef, CondEval, Ctx, Instance, Mismatch, Quant,
};
use crate::checker::report::{Condition, EquivalenceReport};
use crate::checker::scope::Scope;
use crate::error::{Error, Result};
use crate::star::StarOperation;
use crate::system::IdealSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteId {
    Cicd,
    VCicd,
    ProdDual,
    Prufer,
    PruferQuotient,
    Stability,
    Necessary,
    Pr26,
    Dedekind,
    InvGroup,
    Gcd,
}

impl SuiteId {
    pub fn name(&self) -> &'static str {
        match self {
            SuiteId::Cicd => "cicd",
            SuiteId::VCicd => "v-cicd",
            SuiteId::ProdDual => "prod-dual",
            SuiteId::Prufer => "prufer",
            SuiteId::PruferQuotient => "prufer-quotient",
            SuiteId::Stability => "stability",
            SuiteId::Necessary => "necessary",
            SuiteId::Pr26 => "pr26",
            SuiteId::Dedekind => "dedekind",
            SuiteId::InvGroup => "inv-group",
            SuiteId::Gcd => "gcd",
        }
    }

    pub fn from_name(s: &str) -> Result<SuiteId> {
        Ok(match s {
            "cicd" => SuiteId::Cicd,
            "v-cicd" => SuiteId::VCicd,
            "prod-dual" => SuiteId::ProdDual,
            "prufer" => SuiteId::Prufer,
            "prufer-quotient" => SuiteId::PruferQuotient,
            "stability" => SuiteId::Stability,
            "necessary" => SuiteId::Necessary,
            "pr26" => SuiteId::Pr26,
            "dedekind" => SuiteId::Dedekind,
            "inv-group" => SuiteId::InvGroup,
            "gcd" => SuiteId::Gcd,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }

    /// Suites exposed on the CLI.
    pub fn cli_suites() -> &'static [SuiteId] {
        &[
            SuiteId::Cicd,
            SuiteId::VCicd,
            SuiteId::Prufer,
            SuiteId::PruferQuotient,
            SuiteId::Stability,
            SuiteId::Dedekind,
            SuiteId::InvGroup,
            SuiteId::Gcd,
        ]
    }
}

macro_rules! one {
    ($inst:expr) => {
        match $inst {
            Instance::One(a) => a,
            _ => unreachable!("ideal-quantified condition"),
        }
    };
}
macro_rules! two {
    ($inst:expr) => {
        match $inst {
            Instance::Two(a, b) => (a, b),
            _ => unreachable!("pair-quantified condition"),
        }
    };
}
macro_rules! three {
    ($inst:expr) => {
        match $inst {
            Instance::Three(p, a, b) => (p, a, b),
            _ => unreachable!("triple-quantified condition"),
        }
    };
}
macro_rules! elems {
    ($inst:expr) => {
        match $inst {
            Instance::Elems(x, y) => (x, y),
            _ => unreachable!("element-quantified condition"),
        }
    };
}

/// Three-way equality; reports the first differing pair.
fn eq3<S: IdealSystem>(a: S::Ideal, b: S::Ideal, c: S::Ideal) -> Option<Mismatch<S>> {
    if a != b {
        return ne(a, b);
    }
    ne(b, c)
}

fn not_unit<S: IdealSystem>(ctx: &Ctx<S>, got: S::Ideal) -> Option<Mismatch<S>> {
    ne(got, ctx.unit())
}

// ---- condition evaluators -------------------------------------------------

fn cicd_i<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.colon(a, b)),
        ctx.st(&sys.product(a, &ctx.inv(b))),
    )
}

fn cicd_ii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.colon(a, &ctx.inv(b))),
        ctx.st(&sys.product(a, b)),
    )
}

fn cicd_iii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.st(a), b),
        ctx.st(&sys.product(a, &ctx.inv(b))),
    )
}

fn cicd_iv<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.st(a), &ctx.inv(b)),
        ctx.st(&sys.product(a, b)),
    )
}

fn cicd_v<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    not_unit(ctx, ctx.st(&ctx.sys.product(a, &ctx.inv(a))))
}

fn cicd_vi<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    if !ctx.sys.cic_is_self() {
        // the complete integral closure is strictly larger than D
        return Some(Mismatch {
            lhs: ctx.unit(),
            rhs: a.clone(),
            relation: "cic!=D",
        });
    }
    ne(ctx.st(a), ctx.v(a))
}

fn cicd_vii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.v(a), &ctx.inv(b)),
        ctx.st(&sys.product(&ctx.v(a), b)),
    )
}

fn vcicd_i<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    not_unit(ctx, ctx.st(&ctx.sys.product(&ctx.v(a), &ctx.inv(a))))
}

fn vcicd_ii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.v(a), b),
        ctx.st(&sys.product(&ctx.v(a), &ctx.inv(b))),
    )
}

fn vcicd_ii_prime<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.v(a), &ctx.v(b)),
        ctx.st(&sys.product(&ctx.v(a), &ctx.inv(b))),
    )
}

fn vcicd_iii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.v(a), &ctx.inv(b)),
        ctx.st(&sys.product(&ctx.v(a), &ctx.v(b))),
    )
}

fn vcicd_iv<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.v(&sys.colon(a, b)),
        ctx.st(&sys.product(&ctx.v(a), &ctx.inv(b))),
    )
}

fn vcicd_v<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.colon(a, &ctx.inv(b))),
        ctx.st(&sys.product(a, &ctx.v(b))),
    )
}

fn vcicd_vi<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.st(a), &ctx.inv(b)),
        ctx.st(&sys.product(a, &ctx.v(b))),
    )
}

fn dual_product<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.inv(&sys.product(a, b)),
        ctx.st(&sys.product(&ctx.inv(a), &ctx.inv(b))),
    )
}

/// (⋆,v)-multiplication via the constructive witness C = B⁻¹A.
fn mult_v<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !sys.is_subideal(&ctx.st(a), &ctx.v(b)) {
        return None;
    }
    let c = sys.product(&ctx.inv(b), a);
    ne(ctx.st(&sys.product(&ctx.v(b), &c)), ctx.st(a))
}

/// ⋆-multiplication via the constructive witness C = B⁻¹A.
fn mult_star<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !sys.is_subideal(&ctx.st(a), &ctx.st(b)) {
        return None;
    }
    let c = sys.product(&ctx.inv(b), a);
    ne(ctx.st(&sys.product(b, &c)), ctx.st(a))
}

fn invertible_cond<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    not_unit(ctx, ctx.st(&ctx.sys.product(a, &ctx.inv(a))))
}

fn prufer_iii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.product(&sys.intersect(a, b), &sys.sum(a, b))),
        ctx.st(&sys.product(a, b)),
    )
}

fn prufer_iv<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (f, a, b) = three!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.product(f, &sys.intersect(&ctx.st(a), &ctx.st(b)))),
        sys.intersect(&ctx.st(&sys.product(f, a)), &ctx.st(&sys.product(f, b))),
    )
}

fn prufer_v<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !(ctx.invertible(a) && ctx.invertible(b)) {
        return None;
    }
    let i = sys.intersect(a, b);
    if !ctx.invertible(&i) {
        return not_unit(ctx, ctx.st(&sys.product(&i, &ctx.inv(&i))));
    }
    let s = sys.sum(a, b);
    if !ctx.invertible(&s) {
        return not_unit(ctx, ctx.st(&sys.product(&s, &ctx.inv(&s))));
    }
    None
}

fn prufer_vi<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !(ctx.invertible(a) && ctx.invertible(b)) {
        return None;
    }
    let s = sys.sum(a, b);
    if !ctx.invertible(&s) {
        return not_unit(ctx, ctx.st(&sys.product(&s, &ctx.inv(&s))));
    }
    None
}

fn pq_ii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f) = two!(inst);
    let sys = ctx.sys;
    if !sys.is_subideal(a, &ctx.st(f)) {
        return None;
    }
    let b = ctx.st(&sys.product(a, &ctx.inv(f)));
    ne(ctx.st(&sys.product(&b, f)), ctx.st(a))
}

fn pq_iii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f) = two!(inst);
    let sys = ctx.sys;
    eq3(
        ctx.st(&sys.colon(a, f)),
        sys.colon(&ctx.st(a), f),
        ctx.st(&sys.product(a, &ctx.inv(f))),
    )
}

fn pq_iv<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f) = two!(inst);
    let sys = ctx.sys;
    eq3(
        ctx.st(&sys.colon(a, &ctx.inv(f))),
        sys.colon(&ctx.st(a), &ctx.inv(f)),
        ctx.st(&sys.product(a, f)),
    )
}

fn pq_v<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f) = two!(inst);
    let sys = ctx.sys;
    eq3(
        ctx.st(&sys.colon(f, a)),
        sys.colon(&ctx.st(f), a),
        ctx.st(&sys.product(f, &ctx.inv(a))),
    )
}

fn pq_vi<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f) = two!(inst);
    let sys = ctx.sys;
    eq3(
        ctx.v(&sys.colon(f, a)),
        sys.colon(&ctx.v(f), a),
        ctx.st(&sys.product(f, &ctx.inv(a))),
    )
}

fn pq_vii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.v(f), &ctx.inv(a)),
        ctx.st(&sys.product(f, &ctx.v(a))),
    )
}

fn pq_viii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (f, a, b) = three!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.colon(&sys.sum(a, b), f)),
        ctx.st(&sys.sum(&sys.colon(a, f), &sys.colon(b, f))),
    )
}

fn pq_ix<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f, g) = three!(inst);
    let sys = ctx.sys;
    if ctx.st(f) != *f || ctx.st(g) != *g {
        return None;
    }
    ne(
        ctx.st(&sys.colon(a, &sys.intersect(f, g))),
        ctx.st(&sys.sum(&sys.colon(a, f), &sys.colon(a, g))),
    )
}

fn pq_x<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (x, y) = elems!(inst);
    let sys = ctx.sys;
    let d = ctx.unit();
    let pa = sys.principal(x);
    let pb = sys.principal(y);
    let ab = sys.intersect(&sys.colon(&pa, &pb), &d);
    let ba = sys.intersect(&sys.colon(&pb, &pa), &d);
    not_unit(ctx, ctx.st(&sys.sum(&ab, &ba)))
}

fn stability_stable<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.intersect(a, b)),
        sys.intersect(&ctx.st(a), &ctx.st(b)),
    )
}

fn stability_i_bar<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let Instance::Global = inst else {
        unreachable!("global condition")
    };
    // ⋆-Prüfer and ⋆ stable, both scanned over the scope
    if let Some(w) = ctx.scope.scan_ideals(|a| {
        let inst = Instance::One(a.clone());
        invertible_cond(ctx, &inst)
    }) {
        return Some(w);
    }
    ctx.scope.scan_pairs_shifted(ctx.sys, |a, b| {
        let inst = Instance::Two(a.clone(), b.clone());
        stability_stable(ctx, &inst)
    })
}

fn stability_iv_bar<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (c, a, b) = three!(inst);
    let sys = ctx.sys;
    eq3(
        ctx.st(&sys.product(c, &sys.intersect(a, b))),
        ctx.st(&sys.product(c, &sys.intersect(&ctx.st(a), &ctx.st(b)))),
        sys.intersect(&ctx.st(&sys.product(c, a)), &ctx.st(&sys.product(c, b))),
    )
}

fn necessary_fg_dual<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    dual_product(ctx, inst)
}

fn necessary_inv_intersect<S: IdealSystem>(
    ctx: &Ctx<S>,
    inst: &Instance<S>,
) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !(ctx.invertible(a) && ctx.invertible(b)) {
        return None;
    }
    let i = sys.intersect(a, b);
    if !ctx.invertible(&i) {
        return not_unit(ctx, ctx.st(&sys.product(&i, &ctx.inv(&i))));
    }
    None
}

fn necessary_ab<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (f, a, b) = three!(inst);
    let sys = ctx.sys;
    let fa = ctx.st(&sys.product(f, a));
    let fb = ctx.st(&sys.product(f, b));
    if !sys.is_subideal(&fa, &fb) {
        return None;
    }
    let (sa, sb) = (ctx.st(a), ctx.st(b));
    if sys.is_subideal(&sa, &sb) {
        None
    } else {
        Some(Mismatch {
            lhs: sa,
            rhs: sb,
            relation: "not_subideal",
        })
    }
}

fn prufer_global<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let Instance::Global = inst else {
        unreachable!("global condition")
    };
    ctx.scope.scan_ideals(|a| {
        let inst = Instance::One(a.clone());
        invertible_cond(ctx, &inst)
    })
}

fn pr26_b<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, f) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.inv(&sys.product(a, f)),
        ctx.st(&sys.product(&ctx.inv(a), &ctx.inv(f))),
    )
}

fn pr26_c<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let f = one!(inst);
    not_unit(ctx, ctx.st(&ctx.sys.product(&ctx.v(f), &ctx.inv(f))))
}

// dedekind suite: the finite-character transform ⋆_f in place of ⋆

fn ded_i<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.sf(&sys.colon(a, b)),
        ctx.sf(&sys.product(a, &ctx.inv(b))),
    )
}

fn ded_ii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.sf(&sys.colon(a, &ctx.inv(b))),
        ctx.sf(&sys.product(a, b)),
    )
}

fn ded_iii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.sf(a), b),
        ctx.sf(&sys.product(a, &ctx.inv(b))),
    )
}

fn ded_iv<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.sf(a), &ctx.inv(b)),
        ctx.sf(&sys.product(a, b)),
    )
}

fn ded_v<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    not_unit(ctx, ctx.sf(&ctx.sys.product(a, &ctx.inv(a))))
}

fn ded_vi<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    if !ctx.sys.cic_is_self() {
        return Some(Mismatch {
            lhs: ctx.unit(),
            rhs: ctx.st(a),
            relation: "cic!=D",
        });
    }
    let t = crate::star::t_closure(ctx.sys, a).expect("t-closure consistent");
    ne(ctx.sf(a), t)
}

fn ded_vii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        sys.colon(&ctx.v(a), &ctx.inv(b)),
        ctx.sf(&sys.product(&ctx.v(a), b)),
    )
}

fn vded_i<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(
        ctx.inv(&sys.product(a, b)),
        ctx.sf(&sys.product(&ctx.inv(a), &ctx.inv(b))),
    )
}

fn vded_ii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    let ia = ctx.inv(a);
    if ctx.invertible_sf(&ia) {
        None
    } else {
        not_unit(ctx, ctx.sf(&ctx.sys.product(&ia, &ctx.inv(&ia))))
    }
}

fn vded_iii<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    let va = ctx.v(a);
    if ctx.invertible_sf(&va) {
        None
    } else {
        not_unit(ctx, ctx.sf(&ctx.sys.product(&va, &ctx.inv(&va))))
    }
}

fn vded_iv<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !sys.cic_is_self() {
        return Some(Mismatch {
            lhs: ctx.unit(),
            rhs: ctx.st(a),
            relation: "cic!=D",
        });
    }
    ne(
        ctx.v(&sys.product(a, b)),
        ctx.sf(&sys.product(&ctx.v(a), &ctx.v(b))),
    )
}

fn ded_noetherian<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    let sys = ctx.sys;
    // strictly ⋆-finite: a finitely generated F ⊆ A with F^⋆ = A^⋆
    let gens = sys.minimal_generators(a);
    let f = match sys.generated(&gens) {
        Ok(f) => f,
        Err(_) => {
            return Some(Mismatch {
                lhs: a.clone(),
                rhs: a.clone(),
                relation: "no_generators",
            })
        }
    };
    if sys.is_subideal(&f, a) && ctx.st(&f) == ctx.st(a) {
        None
    } else {
        ne(ctx.st(&f), ctx.st(a))
    }
}

fn ded_pmd<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    if ctx.invertible_sf(a) {
        None
    } else {
        not_unit(ctx, ctx.sf(&ctx.sys.product(a, &ctx.inv(a))))
    }
}

// inv-group suite

fn ig_closure<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let p = ctx.st(&ctx.sys.product(a, b));
    if ctx.invertible(&p) && ctx.st(&p) == p {
        None
    } else {
        not_unit(ctx, ctx.st(&ctx.sys.product(&p, &ctx.inv(&p))))
    }
}

fn ig_commutative<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    ne(ctx.st(&sys.product(a, b)), ctx.st(&sys.product(b, a)))
}

fn ig_associative<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b, c) = three!(inst);
    let sys = ctx.sys;
    ne(
        ctx.st(&sys.product(&ctx.st(&sys.product(a, b)), c)),
        ctx.st(&sys.product(a, &ctx.st(&sys.product(b, c)))),
    )
}

fn ig_inverses<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let a = one!(inst);
    not_unit(ctx, ctx.st(&ctx.sys.product(a, &ctx.st(&ctx.inv(a)))))
}

fn ig_order_compat<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (x, a, b) = three!(inst);
    let sys = ctx.sys;
    // A ≤ B means A ⊇ B; multiplication by X preserves the order
    if !sys.is_subideal(b, a) {
        return None;
    }
    let xa = ctx.st(&sys.product(x, a));
    let xb = ctx.st(&sys.product(x, b));
    if sys.is_subideal(&xb, &xa) {
        None
    } else {
        Some(Mismatch {
            lhs: xb,
            rhs: xa,
            relation: "not_subideal",
        })
    }
}

fn ig_sup<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    // sup(A,B) under reverse inclusion is A ∩ B, provided it stays in the
    // group; any common upper bound is contained in the intersection, so
    // existence is exactly membership
    let (a, b) = two!(inst);
    let i = ctx.sys.intersect(a, b);
    if ctx.st(&i) == i && ctx.invertible(&i) {
        None
    } else {
        not_unit(ctx, ctx.st(&ctx.sys.product(&i, &ctx.inv(&i))))
    }
}

fn ig_inf<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    // the greatest lower bound, when it exists, is (A+B)^⋆ = (A+B)^v: every
    // ⋆-invertible ⋆-ideal containing A + B contains (A+B)^⋆, so the bound
    // exists exactly when (A+B)^⋆ stays in the group
    let (a, b) = two!(inst);
    let s = ctx.sys.sum(a, b);
    let ss = ctx.st(&s);
    let sv = ctx.v(&s);
    if ss != sv {
        return ne(ss, sv);
    }
    if ctx.invertible(&ss) {
        None
    } else {
        not_unit(ctx, ctx.st(&ctx.sys.product(&ss, &ctx.inv(&ss))))
    }
}

fn ig_sum_star_eq_v<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let s = ctx.sys.sum(a, b);
    ne(ctx.st(&s), ctx.v(&s))
}

fn v_prufer_cond<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let f = one!(inst);
    not_unit(ctx, ctx.st(&ctx.sys.product(&ctx.v(f), &ctx.inv(f))))
}

// gcd suite (over integral ⋆-invertible ⋆-ideals)

fn integral_pair<S: IdealSystem>(ctx: &Ctx<S>, a: &S::Ideal, b: &S::Ideal) -> bool {
    let d = ctx.unit();
    ctx.sys.is_subideal(a, &d) && ctx.sys.is_subideal(b, &d)
}

fn gcd_sum_invertible<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    if !integral_pair(ctx, a, b) {
        return None;
    }
    let c = ctx.st(&ctx.sys.sum(a, b));
    if ctx.invertible(&c) {
        None
    } else {
        not_unit(ctx, ctx.st(&ctx.sys.product(&c, &ctx.inv(&c))))
    }
}

fn gcd_roundtrip<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !integral_pair(ctx, a, b) {
        return None;
    }
    let c = ctx.st(&sys.sum(a, b));
    if !ctx.invertible(&c) {
        return None; // not applicable without an invertible gcd candidate
    }
    let a1 = ctx.st(&sys.product(a, &ctx.inv(&c)));
    let b1 = ctx.st(&sys.product(b, &ctx.inv(&c)));
    let d = ctx.unit();
    if !sys.is_subideal(&a1, &d) {
        return Some(Mismatch {
            lhs: a1,
            rhs: d,
            relation: "not_subideal",
        });
    }
    if !sys.is_subideal(&b1, &d) {
        return Some(Mismatch {
            lhs: b1,
            rhs: d,
            relation: "not_subideal",
        });
    }
    if let Some(m) = ne(ctx.st(&sys.product(&a1, &c)), a.clone()) {
        return Some(m);
    }
    ne(ctx.st(&sys.product(&b1, &c)), b.clone())
}

fn gcd_comaximal<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !integral_pair(ctx, a, b) {
        return None;
    }
    let c = ctx.st(&sys.sum(a, b));
    if !ctx.invertible(&c) {
        return None;
    }
    let a1 = ctx.st(&sys.product(a, &ctx.inv(&c)));
    let b1 = ctx.st(&sys.product(b, &ctx.inv(&c)));
    not_unit(ctx, ctx.st(&sys.sum(&a1, &b1)))
}

fn gcd_unique<S: IdealSystem>(ctx: &Ctx<S>, inst: &Instance<S>) -> Option<Mismatch<S>> {
    let (a, b) = two!(inst);
    let sys = ctx.sys;
    if !integral_pair(ctx, a, b) {
        return None;
    }
    let c = ctx.st(&sys.sum(a, b));
    if !ctx.invertible(&c) {
        return None;
    }
    let d = ctx.unit();
    for cc in ctx.inv_ideals().iter() {
        if !sys.is_subideal(cc, &d) || !sys.is_subideal(a, cc) || !sys.is_subideal(b, cc) {
            continue;
        }
        let a1 = ctx.st(&sys.product(a, &ctx.inv(cc)));
        let b1 = ctx.st(&sys.product(b, &ctx.inv(cc)));
        let decomposes = sys.is_subideal(&a1, &d)
            && sys.is_subideal(&b1, &d)
            && ctx.st(&sys.product(&a1, cc)) == *a
            && ctx.st(&sys.product(&b1, cc)) == *b
            && ctx.st(&sys.sum(&a1, &b1)) == d;
        if decomposes && *cc != c {
            return ne(cc.clone(), c);
        }
    }
    None
}

// ---- suite definitions -----------------------------------------------------

pub fn suite_defs<S: IdealSystem>(suite: SuiteId) -> Vec<CondDef<S>> {
    use Quant::*;
    let c = |label, quant, group, informational, eval| CondDef {
        label,
        quant,
        group,
        informational,
        eval,
    };
    match suite {
        SuiteId::Cicd => vec![
            c("i", PairsPlain, 0, false, cicd_i::<S>),
            c("ii", PairsPlain, 0, false, cicd_ii::<S>),
            c("iii", PairsPlain, 0, false, cicd_iii::<S>),
            c("iv", PairsPlain, 0, false, cicd_iv::<S>),
            c("v", Ideals, 0, false, cicd_v::<S>),
            c("vi", Ideals, 0, false, cicd_vi::<S>),
            c("vii", PairsPlain, 0, false, cicd_vii::<S>),
        ],
        SuiteId::VCicd => vec![
            c("i", Ideals, 0, false, vcicd_i::<S>),
            c("ii", PairsPlain, 0, false, vcicd_ii::<S>),
            c("ii_prime", PairsPlain, 0, false, vcicd_ii_prime::<S>),
            c("iii", PairsPlain, 0, false, vcicd_iii::<S>),
            c("iv", PairsPlain, 0, false, vcicd_iv::<S>),
            c("v", PairsPlain, 0, false, vcicd_v::<S>),
            c("vi", PairsPlain, 0, false, vcicd_vi::<S>),
        ],
        SuiteId::ProdDual => vec![
            c("dual_product", PairsPlain, 0, false, dual_product::<S>),
            c("v_cicd", Ideals, 0, false, vcicd_i::<S>),
            c("mult_v", PairsShifted, 0, false, mult_v::<S>),
            c("cicd", Ideals, 1, false, cicd_v::<S>),
            c("mult", PairsShifted, 1, false, mult_star::<S>),
        ],
        SuiteId::Prufer => vec![
            c("i", Ideals, 0, false, invertible_cond::<S>),
            c("ii", TwoGenerated, 0, false, invertible_cond::<S>),
            c("iii_f", PairsShifted, 0, false, prufer_iii::<S>),
            c("iii_F", PairsShifted, 0, false, prufer_iii::<S>),
            c("iv_f", Triples, 0, false, prufer_iv::<S>),
            c("iv_fF", Triples, 0, false, prufer_iv::<S>),
            c("v", PairsShifted, 0, false, prufer_v::<S>),
            c("vi", PairsShifted, 0, false, prufer_vi::<S>),
        ],
        SuiteId::PruferQuotient => vec![
            c("i", Ideals, 0, false, invertible_cond::<S>),
            c("ii", PairsShifted, 0, false, pq_ii::<S>),
            c("iii", PairsShifted, 0, false, pq_iii::<S>),
            c("iv", PairsShifted, 0, false, pq_iv::<S>),
            c("v", PairsShifted, 0, false, pq_v::<S>),
            c("vi", PairsShifted, 0, false, pq_vi::<S>),
            c("vii", PairsShifted, 0, false, pq_vii::<S>),
            c("viii", Triples, 0, false, pq_viii::<S>),
            c("ix", Triples, 0, false, pq_ix::<S>),
            c("x", ElemPairs, 0, false, pq_x::<S>),
        ],
        SuiteId::Stability => vec![
            c("i_bar", Global, 0, false, stability_i_bar::<S>),
            c("iv_bar", Triples, 0, false, stability_iv_bar::<S>),
            c("stable", PairsShifted, 0, true, stability_stable::<S>),
        ],
        SuiteId::Necessary => vec![
            c("prufer", Global, 0, true, prufer_global::<S>),
            c("product_dual_fg", PairsPlain, 0, false, necessary_fg_dual::<S>),
            c(
                "intersection_invertible",
                PairsShifted,
                0,
                false,
                necessary_inv_intersect::<S>,
            ),
            c("ab", Triples, 0, false, necessary_ab::<S>),
        ],
        SuiteId::Pr26 => vec![
            c("a", Global, 0, false, prufer_global::<S>),
            c("b", PairsShifted, 1, false, pr26_b::<S>),
            c("c", Ideals, 1, false, pr26_c::<S>),
        ],
        SuiteId::Dedekind => vec![
            c("i", PairsPlain, 0, false, ded_i::<S>),
            c("ii", PairsPlain, 0, false, ded_ii::<S>),
            c("iii", PairsPlain, 0, false, ded_iii::<S>),
            c("iv", PairsPlain, 0, false, ded_iv::<S>),
            c("v", Ideals, 0, false, ded_v::<S>),
            c("vi", Ideals, 0, false, ded_vi::<S>),
            c("vii", PairsPlain, 0, false, ded_vii::<S>),
            c("v_ded_i", PairsPlain, 1, false, vded_i::<S>),
            c("v_ded_ii", Ideals, 1, false, vded_ii::<S>),
            c("v_ded_iii", Ideals, 1, false, vded_iii::<S>),
            c("v_ded_iv", PairsPlain, 1, false, vded_iv::<S>),
            c("noetherian", Ideals, 2, true, ded_noetherian::<S>),
            c("pmd", Ideals, 2, true, ded_pmd::<S>),
        ],
        SuiteId::InvGroup => vec![
            c("prufer", Ideals, 0, false, invertible_cond::<S>),
            c("closure", InvPairs, 1, false, ig_closure::<S>),
            c("commutativity", InvPairs, 1, false, ig_commutative::<S>),
            c("associativity", InvTriples, 1, false, ig_associative::<S>),
            c("inverses", InvIdeals, 1, false, ig_inverses::<S>),
            c("order_compat", InvTriples, 1, false, ig_order_compat::<S>),
            c("sup_is_intersection", InvPairs, 2, false, ig_sup::<S>),
            c("inf_is_closed_sum", InvPairs, 2, false, ig_inf::<S>),
            c("v_prufer", Ideals, 3, true, v_prufer_cond::<S>),
            c("sum_star_eq_v", InvPairs, 3, true, ig_sum_star_eq_v::<S>),
        ],
        SuiteId::Gcd => vec![
            c("prufer", Ideals, 0, true, invertible_cond::<S>),
            c("sum_invertible", InvPairs, 1, false, gcd_sum_invertible::<S>),
            c("roundtrip", InvPairs, 1, false, gcd_roundtrip::<S>),
            c("comaximal", InvPairs, 1, false, gcd_comaximal::<S>),
            c("unique", InvPairs, 1, false, gcd_unique::<S>),
        ],
    }
}

fn truth(evals: &[CondEval<impl IdealSystem>], label: &str) -> bool {
    evals
        .iter()
        .find(|e| e.label == label)
        .map(|e| e.holds)
        .unwrap_or(false)
}

/// Suite-specific consistency: generally "all conditions of a group share one
/// truth value", plus the implications the theorem actually asserts between
/// groups.
pub fn consistency<S: IdealSystem>(suite: SuiteId, evals: &[CondEval<S>]) -> bool {
    let group_equal = |g: u8| -> bool {
        let vals: Vec<bool> = evals
            .iter()
            .filter(|e| e.group == g && !e.informational)
            .map(|e| e.holds)
            .collect();
        vals.windows(2).all(|w| w[0] == w[1])
    };
    let group_truth = |g: u8| -> bool {
        evals
            .iter()
            .find(|e| e.group == g && !e.informational)
            .map(|e| e.holds)
            .unwrap_or(false)
    };
    match suite {
        SuiteId::Cicd | SuiteId::VCicd | SuiteId::Prufer | SuiteId::PruferQuotient => {
            group_equal(0)
        }
        SuiteId::Stability => group_equal(0),
        SuiteId::ProdDual => {
            // group 0 ⟺ (⋆,v)-CICD, group 1 ⟺ ⋆-CICD, and ⋆-CICD ⟹ (⋆,v)-CICD
            group_equal(0) && group_equal(1) && (!group_truth(1) || group_truth(0))
        }
        SuiteId::Necessary => {
            // the proposition claims one direction only
            let prufer = truth(evals, "prufer");
            !prufer
                || (truth(evals, "product_dual_fg")
                    && truth(evals, "intersection_invertible")
                    && truth(evals, "ab"))
        }
        SuiteId::Pr26 => {
            let a = truth(evals, "a");
            let b = truth(evals, "b");
            let c = truth(evals, "c");
            b == c && (!a || b)
        }
        SuiteId::Dedekind => {
            let krull = group_truth(0);
            let vded = group_truth(1);
            let noeth = truth(evals, "noetherian");
            let pmd = truth(evals, "pmd");
            group_equal(0)
                && group_equal(1)
                && (!krull || vded)
                && krull == (noeth && pmd)
        }
        SuiteId::InvGroup => {
            let prufer = truth(evals, "prufer");
            let laws = group_truth(1) && group_equal(1);
            let lattice = truth(evals, "sup_is_intersection") && truth(evals, "inf_is_closed_sum");
            let vp = truth(evals, "v_prufer");
            let sum_eq = truth(evals, "sum_star_eq_v");
            laws && prufer == lattice && prufer == (vp && sum_eq)
        }
        SuiteId::Gcd => {
            let prufer = truth(evals, "prufer");
            truth(evals, "sum_invertible") == prufer
                && truth(evals, "roundtrip")
                && truth(evals, "comaximal")
                && truth(evals, "unique")
        }
    }
}

/// Raw outcome of a suite run: condition truths with witnesses as values.
pub struct SuiteEval<S: IdealSystem> {
    pub suite: SuiteId,
    pub evals: Vec<CondEval<S>>,
    pub consistent: bool,
}

pub type WitnessMemo<S> = std::collections::HashMap<(SuiteId, &'static str), Instance<S>>;

pub fn evaluate_suite<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    scope: &Scope<S>,
    suite: SuiteId,
    memo: Option<&mut WitnessMemo<S>>,
) -> SuiteEval<S> {
    let ctx = Ctx::new(sys, star, scope);
    let defs = suite_defs::<S>(suite);
    let mut evals = Vec::with_capacity(defs.len());
    let mut memo = memo;
    for def in &defs {
        let hint = memo
            .as_ref()
            .and_then(|m| m.get(&(suite, def.label)).cloned());
        let ev = eval_condition(&ctx, def, hint.as_ref());
        if let Some(m) = memo.as_mut() {
            if let Some((inst, _)) = &ev.witness {
                m.insert((suite, def.label), inst.clone());
            }
        }
        evals.push(ev);
    }
    let consistent = consistency(suite, &evals);
    SuiteEval {
        suite,
        evals,
        consistent,
    }
}

pub fn render_report<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    scope: &Scope<S>,
    eval: &SuiteEval<S>,
) -> EquivalenceReport {
    let mut conditions = Vec::new();
    let mut info = Vec::new();
    for e in &eval.evals {
        let cond = Condition {
            label: e.label.to_string(),
            holds: e.holds,
            witness: e
                .witness
                .as_ref()
                .map(|(inst, m)| render_witness(sys, inst, m)),
        };
        if e.informational {
            info.push(cond);
        } else {
            conditions.push(cond);
        }
    }
    EquivalenceReport {
        structure: sys.name(),
        star: star.name().to_string(),
        suite: eval.suite.name().to_string(),
        scope: scope.describe().to_string(),
        conditions,
        info,
        consistent: eval.consistent,
    }
}

/// Runs one suite and renders its report.
pub fn run_suite<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    scope: &Scope<S>,
    suite: SuiteId,
) -> EquivalenceReport {
    let eval = evaluate_suite(sys, star, scope, suite, None);
    render_report(sys, star, scope, &eval)
}

/// Re-evaluates a witness from its serialized literals; returns the rendered
/// mismatch, which must reproduce the reported one byte for byte.
pub fn replay_witness<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    scope: &Scope<S>,
    suite: SuiteId,
    label: &str,
    ideals: &[String],
    elements: &[String],
) -> Result<Option<crate::checker::report::Witness>> {
    let defs = suite_defs::<S>(suite);
    let def = defs
        .iter()
        .find(|d| d.label == label)
        .ok_or_else(|| Error::Parse(format!("unknown condition {label:?} in {}", suite.name())))?;
    let inst = Instance::parse(sys, def.quant, ideals, elements)?;
    let ctx = Ctx::new(sys, star, scope);
    Ok((def.eval)(&ctx, &inst).map(|m| render_witness(sys, &inst, &m)))
}

/// The GCD-of-sorts decomposition for a pair of integral ⋆-invertible
/// ⋆-ideals: C = (A+B)^⋆, A = (A₁C)^⋆, B = (B₁C)^⋆ with (A₁+B₁)^⋆ = D.
#[derive(Clone, Debug)]
pub struct GcdDecomposition<S: IdealSystem> {
    pub gcd: S::Ideal,
    pub a_part: S::Ideal,
    pub b_part: S::Ideal,
}

pub fn gcd_decompose<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    a: &S::Ideal,
    b: &S::Ideal,
) -> Result<GcdDecomposition<S>> {
    let d = sys.unit();
    if !sys.is_subideal(a, &d) || !sys.is_subideal(b, &d) {
        return Err(Error::NotApplicable("ideals must be integral".into()));
    }
    let c = star.apply(sys, &sys.sum(a, b));
    let cinv = crate::star::inverse(sys, &c);
    if star.apply(sys, &sys.product(&c, &cinv)) != d {
        return Err(Error::NotApplicable(
            "(A+B)^* is not star-invertible; the structure is not star-Prufer at this pair".into(),
        ));
    }
    let a1 = star.apply(sys, &sys.product(a, &cinv));
    let b1 = star.apply(sys, &sys.product(b, &cinv));
    let ok = sys.is_subideal(&a1, &d)
        && sys.is_subideal(&b1, &d)
        && star.apply(sys, &sys.product(&a1, &c)) == star.apply(sys, a)
        && star.apply(sys, &sys.product(&b1, &c)) == star.apply(sys, b)
        && star.apply(sys, &sys.sum(&a1, &b1)) == d;
    if !ok {
        return Err(Error::Internal(
            "gcd decomposition failed its defining equations".into(),
        ));
    }
    Ok(GcdDecomposition {
        gcd: c,
        a_part: a1,
        b_part: b1,
    })
}
