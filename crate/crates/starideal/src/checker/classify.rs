//! Classification of a structure: per-star flags, theorem-suite consistency,
//! the derived domain-class flags, and the implication-lattice assertions.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::checker::conditions::Ctx;
use crate::checker::report::{
    ClassificationReport, DerivedFlags, EnumeratedSummary, StarClassification, StarFlags,
};
use crate::checker::scope::Scope;
use crate::checker::suites::{evaluate_suite, SuiteId, WitnessMemo};
use crate::error::Result;
use crate::numsg::stars::StarContext;
use crate::numsg::Sg;
use crate::star::{self, StarOperation};
use crate::system::IdealSystem;

/// d, w, t, v in pointwise order.
pub fn builtin_stars<S: IdealSystem>(sys: &S) -> Vec<StarOperation<S>> {
    vec![
        StarOperation::identity(sys),
        StarOperation::w_operation(sys),
        StarOperation::t_operation(sys),
        StarOperation::divisorial(sys),
    ]
}

const ALL_SUITES: &[SuiteId] = &[
    SuiteId::Cicd,
    SuiteId::VCicd,
    SuiteId::ProdDual,
    SuiteId::Prufer,
    SuiteId::PruferQuotient,
    SuiteId::Stability,
    SuiteId::Necessary,
    SuiteId::Pr26,
    SuiteId::Dedekind,
    SuiteId::InvGroup,
    SuiteId::Gcd,
];

/// The four suites exercised per enumerated star in mass checks.
pub const ENUMERATED_SUITES: &[SuiteId] = &[
    SuiteId::Cicd,
    SuiteId::VCicd,
    SuiteId::Prufer,
    SuiteId::PruferQuotient,
];

/// Flags plus full-suite consistency for one star.
pub fn classify_star<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    scope: &Scope<S>,
) -> StarClassification {
    let mut flags = StarFlags::default();
    let mut consistent = true;
    let mut truths: HashMap<(SuiteId, &'static str), bool> = HashMap::new();
    for &suite in ALL_SUITES {
        let eval = evaluate_suite(sys, star, scope, suite, None);
        consistent &= eval.consistent;
        for e in &eval.evals {
            truths.insert((suite, e.label), e.holds);
        }
    }
    let t = |s: SuiteId, l: &'static str| truths.get(&(s, l)).copied().unwrap_or(false);
    flags.prufer = t(SuiteId::Prufer, "i");
    flags.v_prufer = t(SuiteId::Pr26, "c");
    flags.cicd = t(SuiteId::Cicd, "v");
    flags.v_cicd = t(SuiteId::VCicd, "i");
    flags.dedekind = t(SuiteId::Dedekind, "v");
    flags.v_dedekind = t(SuiteId::Dedekind, "v_ded_i");
    flags.stable = t(SuiteId::Stability, "stable");
    flags.ab = t(SuiteId::Necessary, "ab");
    flags.noetherian = t(SuiteId::Dedekind, "noetherian");
    // ⋆ has finite character on the scope iff ⋆_f agrees with ⋆ there
    let ctx = Ctx::new(sys, star, scope);
    flags.finite_character = scope
        .scan_ideals(|a| {
            if ctx.sf(a) == ctx.st(a) {
                None
            } else {
                Some(())
            }
        })
        .is_none();
    StarClassification {
        star: star.name().to_string(),
        flags,
        consistent,
    }
}

fn derived_flags<S: IdealSystem>(sys: &S, scope: &Scope<S>) -> DerivedFlags {
    let d = StarOperation::identity(sys);
    let v = StarOperation::divisorial(sys);
    let t = StarOperation::t_operation(sys);
    let unit = sys.unit();
    let all = |f: &dyn Fn(&S::Ideal) -> bool| scope.ideals.iter().all(f);
    let v_domain = all(&|a| {
        star::is_star_invertible(sys, &v, a)
    });
    let krull_like = all(&|a| {
        t.apply(sys, &sys.product(a, &star::inverse(sys, a))) == unit
    });
    let pseudo_principal = all(&|a| sys.is_principal(&star::v_closure(sys, a)));
    let pseudo_dedekind = all(&|a| {
        star::is_star_invertible(sys, &d, &star::v_closure(sys, a))
    });
    let ggcd = pseudo_dedekind;
    let product_dual = scope
        .scan_pairs_plain(|a, b| {
            let lhs = star::inverse(sys, &sys.product(a, b));
            let rhs = sys.product(&star::inverse(sys, a), &star::inverse(sys, b));
            if lhs == rhs {
                None
            } else {
                Some(())
            }
        })
        .is_none();
    DerivedFlags {
        v_domain,
        cicd: sys.cic_is_self(),
        krull_like,
        pseudo_principal,
        pseudo_dedekind,
        ggcd,
        product_dual,
    }
}

fn lattice_violations(rows: &[StarClassification], derived: &DerivedFlags) -> Vec<String> {
    let mut out = Vec::new();
    for r in rows {
        let f = &r.flags;
        let mut imply = |premise: bool, conclusion: bool, what: &str| {
            if premise && !conclusion {
                out.push(format!("{}: {}", r.star, what));
            }
        };
        imply(f.cicd, f.v_cicd, "star-CICD without (star,v)-CICD");
        imply(f.v_cicd, derived.cicd, "(star,v)-CICD on a non-CICD structure");
        imply(f.prufer, f.v_prufer, "star-Prufer without (star,v)-Prufer");
        imply(f.v_prufer, derived.v_domain, "(star,v)-Prufer on a non-v-domain");
        imply(f.cicd, f.prufer, "star-CICD without star-Prufer");
        imply(f.dedekind, f.v_dedekind, "star-Dedekind without (star,v)-Dedekind");
    }
    // monotonicity against the pointwise order d ≤ w ≤ t ≤ v of the built-ins
    let by_name: HashMap<&str, &StarFlags> =
        rows.iter().map(|r| (r.star.as_str(), &r.flags)).collect();
    let chain = ["d", "w", "t", "v"];
    for i in 0..chain.len() {
        for j in i + 1..chain.len() {
            if let (Some(lo), Some(hi)) = (by_name.get(chain[i]), by_name.get(chain[j])) {
                if lo.prufer && !hi.prufer {
                    out.push(format!(
                        "monotonicity: {}-Prufer but not {}-Prufer",
                        chain[i], chain[j]
                    ));
                }
                if lo.cicd && !hi.cicd {
                    out.push(format!(
                        "monotonicity: {}-CICD but not {}-CICD",
                        chain[i], chain[j]
                    ));
                }
            }
        }
    }
    out
}

pub struct ClassifyOptions {
    /// Stop enumerating stars beyond this many.
    pub star_budget: usize,
    /// Enumerated stars reported as individual rows (the rest are summarized).
    pub detail_limit: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            star_budget: 100_000,
            detail_limit: 16,
        }
    }
}

/// Classification for backends without a finite star enumeration.
pub fn classify<S: IdealSystem>(sys: &S, scope: &Scope<S>) -> ClassificationReport {
    let mut rows = Vec::new();
    for star in builtin_stars(sys) {
        rows.push(classify_star(sys, &star, scope));
    }
    let derived = derived_flags(sys, scope);
    let mut violations = lattice_violations(&rows, &derived);
    for r in &rows {
        if !r.consistent {
            violations.push(format!("{}: suite inconsistency", r.star));
        }
    }
    ClassificationReport {
        structure: sys.name(),
        scope: scope.describe().to_string(),
        stars: rows,
        enumerated: None,
        derived,
        violations: violations.clone(),
        consistent: violations.is_empty(),
    }
}

/// Outcome of streaming the full star enumeration through the suites.
pub struct MassOutcome {
    pub stars_checked: usize,
    pub budget_exhausted: bool,
    pub all_consistent: bool,
    pub violations: Vec<String>,
}

/// Runs `suites` for every enumerated star operation of a numerical
/// semigroup, up to `budget` stars, reusing witnesses across stars. Flags for
/// the implication lattice are derived from precomputed invertibility data,
/// so the per-star cost stays near the number of conditions.
pub fn check_enumerated_stars(
    sys: &Sg,
    scope: &Scope<Sg>,
    suites: &[SuiteId],
    budget: usize,
) -> Result<MassOutcome> {
    let ctx = StarContext::new(sys)?;
    let unit_idx = ctx
        .ideals
        .iter()
        .position(|e| *e == sys.unit())
        .expect("unit is normalized");
    // star-independent parts of the invertibility checks
    let mut inv_data = Vec::with_capacity(ctx.len());
    let mut vinv_data = Vec::with_capacity(ctx.len());
    for e in ctx.ideals.iter() {
        let ie = star::inverse(sys, e);
        for (target, out) in [(e.clone(), &mut inv_data), (star::v_closure(sys, e), &mut vinv_data)]
        {
            let p = sys.product(&target, &ie);
            let (shift, norm) = p.normalized();
            let idx = ctx.index.get(&norm).copied();
            out.push((shift, idx));
        }
    }
    let check_all = |map: &[u32], data: &[(i64, Option<usize>)]| -> bool {
        data.iter().all(|(shift, idx)| {
            *shift == 0 && idx.is_some_and(|i| map[i] as usize == unit_idx)
        })
    };
    // "for all A": the v-domain flag, needed for the (⋆,v)-Prüfer implication
    let v_map: Vec<u32> = ctx.v_of.iter().map(|&i| i as u32).collect();
    let v_domain = {
        let data: Vec<(i64, Option<usize>)> = vinv_data.clone();
        data.iter()
            .all(|(s, i)| *s == 0 && i.is_some_and(|i| v_map[i] as usize == unit_idx))
    };
    let mut memo: WitnessMemo<Sg> = HashMap::new();
    let mut violations: Vec<String> = Vec::new();
    let mut checked = 0usize;
    let enum_result = ctx.for_each_table(budget, |map| {
        let name = format!("table#{checked}");
        let star = ctx.star_from_table(map.to_vec(), name.clone());
        checked += 1;
        for &suite in suites {
            let eval = evaluate_suite(sys, &star, scope, suite, Some(&mut memo));
            if !eval.consistent {
                violations.push(format!(
                    "{}: {} suite inconsistent for {}",
                    sys.name(),
                    suite.name(),
                    name
                ));
            }
        }
        // implication lattice on the fast flags
        let prufer = check_all(map, &inv_data);
        let v_prufer = check_all(map, &vinv_data);
        if prufer && !v_prufer {
            violations.push(format!("{name}: star-Prufer without (star,v)-Prufer"));
        }
        if v_prufer && !v_domain {
            violations.push(format!("{name}: (star,v)-Prufer on a non-v-domain"));
        }
        if violations.len() > 16 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let budget_exhausted = match enum_result {
        Ok(_) => false,
        Err(crate::error::Error::EnumerationTooLarge { .. }) => true,
        Err(e) => return Err(e),
    };
    Ok(MassOutcome {
        stars_checked: checked,
        budget_exhausted,
        all_consistent: violations.is_empty(),
        violations,
    })
}

/// Classification for numerical semigroups: built-in stars plus the streamed
/// enumeration.
pub fn classify_ns(
    sys: &Sg,
    scope: &Scope<Sg>,
    opts: &ClassifyOptions,
) -> Result<ClassificationReport> {
    let mut rows = Vec::new();
    for star in builtin_stars(sys) {
        rows.push(classify_star(sys, &star, scope));
    }
    // detailed rows for the first few enumerated stars
    let ctx = StarContext::new(sys)?;
    let mut detailed = Vec::new();
    let detail = opts.detail_limit;
    let _ = ctx.for_each_table(opts.star_budget, |map| {
        if detailed.len() >= detail {
            return ControlFlow::Break(());
        }
        let star = ctx.star_from_table(map.to_vec(), format!("table#{}", detailed.len()));
        detailed.push(classify_star(sys, &star, scope));
        ControlFlow::Continue(())
    });
    rows.extend(detailed);
    let mass = check_enumerated_stars(sys, scope, ENUMERATED_SUITES, opts.star_budget)?;
    let derived = derived_flags(sys, scope);
    let mut violations = lattice_violations(&rows, &derived);
    for r in &rows {
        if !r.consistent {
            violations.push(format!("{}: suite inconsistency", r.star));
        }
    }
    violations.extend(mass.violations.clone());
    Ok(ClassificationReport {
        structure: sys.name(),
        scope: scope.describe().to_string(),
        stars: rows,
        enumerated: Some(EnumeratedSummary {
            checked: mass.stars_checked,
            budget_exhausted: mass.budget_exhausted,
            all_consistent: mass.all_consistent,
        }),
        derived,
        violations: violations.clone(),
        consistent: violations.is_empty(),
    })
}
