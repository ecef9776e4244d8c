//! Human-readable tables (lossy; the JSON output is the contract) and the
//! star-operation listing.

use serde::Serialize;

use starideal::checker::conditions::Ctx;
use starideal::checker::report::{ClassificationReport, EquivalenceReport};
use starideal::checker::scope::Scope;
use starideal::checker::suites::{suite_defs, SuiteId};
use starideal::numsg::{stars::enumerate_star_operations, Sg};
use starideal::star::StarOperation;
use starideal::system::IdealSystem;

pub fn print_report(r: &EquivalenceReport) {
    println!(
        "suite {} | structure {} | star {} | scope {}",
        r.suite, r.structure, r.star, r.scope
    );
    for c in &r.conditions {
        let mark = if c.holds { "holds" } else { "fails" };
        match &c.witness {
            Some(w) => {
                let inst = if w.ideals.is_empty() {
                    w.elements.join(" ; ")
                } else {
                    w.ideals.join(" ; ")
                };
                println!(
                    "  {:<12} {mark}  at [{inst}]  {} {} {}",
                    c.label, w.lhs, w.relation, w.rhs
                );
            }
            None => println!("  {:<12} {mark}", c.label),
        }
    }
    for c in &r.info {
        println!(
            "  ({:<10} {} — informational)",
            c.label,
            if c.holds { "holds" } else { "fails" }
        );
    }
    println!(
        "  consistent: {}",
        if r.consistent { "yes" } else { "NO — theorem violation" }
    );
}

pub fn print_classification(r: &ClassificationReport) {
    println!("structure {} | scope {}", r.structure, r.scope);
    println!(
        "  {:<10} {:>6} {:>8} {:>6} {:>7} {:>9} {:>7} {:>6} {:>4} {:>7} {:>6}",
        "star", "prufer", "v-prufer", "cicd", "v-cicd", "dedekind", "stable", "a.b.", "fc", "noeth", "ok"
    );
    for s in &r.stars {
        let f = &s.flags;
        println!(
            "  {:<10} {:>6} {:>8} {:>6} {:>7} {:>9} {:>7} {:>6} {:>4} {:>7} {:>6}",
            s.star,
            f.prufer,
            f.v_prufer,
            f.cicd,
            f.v_cicd,
            f.dedekind,
            f.stable,
            f.ab,
            f.finite_character,
            f.noetherian,
            s.consistent
        );
    }
    if let Some(e) = &r.enumerated {
        println!(
            "  enumerated stars checked: {}{}, all consistent: {}",
            e.checked,
            if e.budget_exhausted {
                " (budget exhausted)"
            } else {
                ""
            },
            e.all_consistent
        );
    }
    let d = &r.derived;
    println!(
        "  derived: v-domain={} cicd={} krull-like={} pseudo-principal={} pseudo-dedekind={} ggcd={} product-dual={}",
        d.v_domain, d.cicd, d.krull_like, d.pseudo_principal, d.pseudo_dedekind, d.ggcd, d.product_dual
    );
    if r.violations.is_empty() {
        println!("  consistent: yes");
    } else {
        println!("  VIOLATIONS:");
        for v in &r.violations {
            println!("    - {v}");
        }
    }
}

#[derive(Serialize)]
pub struct StarListing {
    pub structure: String,
    pub count: usize,
    pub budget: usize,
    pub stars: Vec<StarEntry>,
}

#[derive(Serialize)]
pub struct StarEntry {
    pub name: String,
    pub table: Vec<String>,
    pub is_identity: bool,
    pub is_divisorial: bool,
    pub stable: bool,
    pub ab: bool,
    pub finite_character: bool,
}

pub fn star_listing(sys: &Sg, budget: usize) -> starideal::Result<StarListing> {
    let stars = enumerate_star_operations(sys, budget)?;
    let scope = Scope::exhaustive(sys)?;
    let ideals = sys.enumerate_normalized().expect("finite enumeration");
    let d = StarOperation::identity(sys);
    let v = StarOperation::divisorial(sys);
    let mut out = Vec::with_capacity(stars.len());
    for st in &stars {
        let table: Vec<String> = ideals
            .iter()
            .map(|e| {
                format!(
                    "{} -> {}",
                    sys.ideal_literal(e),
                    sys.ideal_literal(&st.apply(sys, e))
                )
            })
            .collect();
        let same = |other: &StarOperation<Sg>| {
            ideals.iter().all(|e| st.apply(sys, e) == other.apply(sys, e))
        };
        let ctx = Ctx::new(sys, st, &scope);
        let stable_def = suite_defs::<Sg>(SuiteId::Stability)
            .into_iter()
            .find(|sd| sd.label == "stable")
            .expect("stable condition");
        let stable = scope
            .scan_pairs_shifted(sys, |a, b| {
                (stable_def.eval)(
                    &ctx,
                    &starideal::checker::conditions::Instance::Two(a.clone(), b.clone()),
                )
            })
            .is_none();
        let ab_def = suite_defs::<Sg>(SuiteId::Necessary)
            .into_iter()
            .find(|sd| sd.label == "ab")
            .expect("ab condition");
        let ab = scope
            .scan_triples(sys, |p, a, b| {
                (ab_def.eval)(
                    &ctx,
                    &starideal::checker::conditions::Instance::Three(
                        p.clone(),
                        a.clone(),
                        b.clone(),
                    ),
                )
            })
            .is_none();
        let finite_character = ideals.iter().all(|e| ctx.sf(e) == ctx.st(e));
        out.push(StarEntry {
            name: st.name().to_string(),
            table,
            is_identity: same(&d),
            is_divisorial: same(&v),
            stable,
            ab,
            finite_character,
        });
    }
    Ok(StarListing {
        structure: sys.name(),
        count: out.len(),
        budget,
        stars: out,
    })
}

pub fn print_star_listing(l: &StarListing) {
    println!(
        "structure {} | {} star operation(s) (budget {})",
        l.structure, l.count, l.budget
    );
    for s in &l.stars {
        let mut tags = Vec::new();
        if s.is_identity {
            tags.push("= d");
        }
        if s.is_divisorial {
            tags.push("= v");
        }
        if s.stable {
            tags.push("stable");
        } else {
            tags.push("not-stable");
        }
        if s.ab {
            tags.push("a.b.");
        }
        if s.finite_character {
            tags.push("finite-character");
        }
        println!("  {} [{}]", s.name, tags.join(", "));
        for line in &s.table {
            println!("    {line}");
        }
    }
}
