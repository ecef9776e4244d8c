use crate::checker::classify::{classify, classify_ns, ClassifyOptions, ENUMERATED_SUITES};
use crate::checker::scope::Scope;
use crate::checker::suites::{gcd_decompose, replay_witness, run_suite, SuiteId};
use crate::monomial::Mon;
use crate::numsg::{Sg, SgIdeal};
use crate::quadorder::{Qo, QuadElem};
use crate::star::{self, StarOperation};
use crate::system::{IdealSystem, SampleBounds};

fn ns(gens: &[u64]) -> Sg {
    Sg::new(gens).unwrap()
}

fn all_hold(report: &crate::checker::report::EquivalenceReport) -> bool {
    report.conditions.iter().all(|c| c.holds)
}

fn none_hold(report: &crate::checker::report::EquivalenceReport) -> bool {
    report.conditions.iter().all(|c| !c.holds)
}

#[test]
fn trivial_semigroup_all_suites_true() {
    let sys = ns(&[1]);
    let scope = Scope::exhaustive(&sys).unwrap();
    for star in crate::checker::builtin_stars(&sys) {
        for &suite in &[
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
        ] {
            let r = run_suite(&sys, &star, &scope, suite);
            assert!(r.consistent, "{} on N with {}", suite.name(), star.name());
            if matches!(
                suite,
                SuiteId::Cicd | SuiteId::VCicd | SuiteId::Prufer | SuiteId::PruferQuotient
            ) {
                assert!(all_hold(&r), "{} on N: {:?}", suite.name(), r);
            }
        }
    }
}

#[test]
fn s345_acceptance_suites_all_false_but_consistent() {
    let sys = ns(&[3, 4, 5]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let v = StarOperation::divisorial(&sys);
    for &suite in ENUMERATED_SUITES {
        let r = run_suite(&sys, &v, &scope, suite);
        assert!(r.consistent, "{} inconsistent: {r:?}", suite.name());
        assert!(none_hold(&r), "{} not all false: {r:?}", suite.name());
        for c in &r.conditions {
            assert!(c.witness.is_some(), "false condition {} lacks witness", c.label);
        }
    }
}

#[test]
fn s345_cicd_witness_for_v_on_nondivisorial_ideal() {
    // (A^v A^{-1})^v = M ≠ S for A = S ∪ {1}
    let sys = ns(&[3, 4, 5]);
    let s1 = SgIdeal::generated(sys.semigroup(), &[0, 1]).unwrap();
    let v = StarOperation::divisorial(&sys);
    let va = star::v_closure(&sys, &s1);
    let p = sys.product(&va, &star::inverse(&sys, &s1));
    let m = SgIdeal::generated(sys.semigroup(), &[3, 4, 5]).unwrap();
    assert_eq!(v.apply(&sys, &p), m);
    assert_ne!(v.apply(&sys, &p), sys.unit());
}

#[test]
fn s345_prufer_quotient_x_witness_explicit() {
    // ((3):_S(4)) ∪ ((4):_S(3)) misses 0
    let sys = ns(&[3, 4, 5]);
    let d = StarOperation::identity(&sys);
    let p3 = sys.principal(&3);
    let p4 = sys.principal(&4);
    let u = sys.unit();
    let lhs = sys.sum(
        &sys.intersect(&sys.colon(&p3, &p4), &u),
        &sys.intersect(&sys.colon(&p4, &p3), &u),
    );
    assert_ne!(d.apply(&sys, &lhs), u);
}

#[test]
fn prod_dual_on_s23_false_with_m_witness() {
    let sys = ns(&[2, 3]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let d = StarOperation::identity(&sys);
    let r = run_suite(&sys, &d, &scope, SuiteId::ProdDual);
    assert!(r.consistent);
    assert!(none_hold(&r));
    // explicit check of the pair A = B = M
    let m = SgIdeal::generated(sys.semigroup(), &[2, 3]).unwrap();
    let lhs = star::inverse(&sys, &sys.product(&m, &m));
    let rhs = star::v_closure(&sys, &sys.product(&star::inverse(&sys, &m), &star::inverse(&sys, &m)));
    assert_ne!(lhs, rhs);
}

#[test]
fn s345_every_enumerated_star_consistent() {
    let sys = ns(&[3, 4, 5]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let outcome =
        crate::checker::check_enumerated_stars(&sys, &scope, ENUMERATED_SUITES, 1000).unwrap();
    assert_eq!(outcome.stars_checked, 4);
    assert!(!outcome.budget_exhausted);
    assert!(outcome.all_consistent, "{:?}", outcome.violations);
}

#[test]
fn stability_intermediate_star_runs_consistent() {
    let sys = ns(&[3, 4, 5]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let stars = crate::numsg::stars::enumerate_star_operations(&sys, 100).unwrap();
    let s1 = SgIdeal::generated(sys.semigroup(), &[0, 1]).unwrap();
    let s2 = SgIdeal::generated(sys.semigroup(), &[0, 2]).unwrap();
    let mut seen_unstable = 0;
    for star in &stars {
        let r = run_suite(&sys, star, &scope, SuiteId::Stability);
        assert!(r.consistent, "stability inconsistent for {}", star.name());
        let stable = r.info.iter().find(|c| c.label == "stable").unwrap();
        if !stable.holds {
            seen_unstable += 1;
        }
        // the star fixing S∪{2} but inflating S∪{1} fails exactly at that pair
        if star.apply(&sys, &s1) != s1 && star.apply(&sys, &s2) == s2 {
            let lhs = star.apply(&sys, &sys.intersect(&s1, &s2));
            let rhs = sys.intersect(&star.apply(&sys, &s1), &star.apply(&sys, &s2));
            assert_ne!(lhs, rhs);
            assert!(!stable.holds);
        }
    }
    // d is stable; v and both intermediate tables are not
    assert_eq!(seen_unstable, 3);
}

#[test]
fn z3i_vcicd_false_with_conductor_witness() {
    let sys = Qo::new(-1, 3).unwrap();
    let scope = Scope::sampled(&sys, 7, 60, SampleBounds::default());
    let d = StarOperation::identity(&sys);
    let r = run_suite(&sys, &d, &scope, SuiteId::VCicd);
    assert!(r.consistent, "{r:?}");
    assert!(none_hold(&r), "{r:?}");
    // condition (i)'s witness is the conductor ideal 3·O_max
    let w = r.conditions[0].witness.as_ref().unwrap();
    let cond = sys.seed_ideals()[1].clone();
    assert_eq!(w.ideals[0], sys.ideal_literal(&cond));
}

#[test]
fn gaussian_integers_dedekind_profile() {
    let sys = Qo::new(-1, 1).unwrap();
    let scope = Scope::sampled(&sys, 42, 30, SampleBounds::default());
    let d = StarOperation::identity(&sys);
    for &suite in &[SuiteId::Cicd, SuiteId::VCicd, SuiteId::Prufer, SuiteId::Dedekind] {
        let r = run_suite(&sys, &d, &scope, suite);
        assert!(r.consistent, "{}: {r:?}", suite.name());
        assert!(all_hold(&r), "{}: {r:?}", suite.name());
    }
}

#[test]
fn monomial_t_prufer_d_not() {
    let sys = Mon::new(2).unwrap();
    let scope = Scope::sampled(&sys, 7, 60, SampleBounds::default());
    let t = StarOperation::t_operation(&sys);
    let rt = run_suite(&sys, &t, &scope, SuiteId::Prufer);
    assert!(rt.consistent, "{rt:?}");
    assert!(all_hold(&rt), "{rt:?}");

    let d = StarOperation::identity(&sys);
    let rd = run_suite(&sys, &d, &scope, SuiteId::Prufer);
    assert!(rd.consistent, "{rd:?}");
    assert!(none_hold(&rd), "{rd:?}");

    // v-cicd with t on N² holds (v-closures are principal)
    let rv = run_suite(&sys, &t, &scope, SuiteId::VCicd);
    assert!(rv.consistent && all_hold(&rv));
}

#[test]
fn monomial_pr26_nonconverse_profile() {
    // N² with d: (a) false while (b) ⟺ (c) both true — the GGCD monoid
    let sys = Mon::new(2).unwrap();
    let scope = Scope::sampled(&sys, 3, 50, SampleBounds::default());
    let d = StarOperation::identity(&sys);
    let r = run_suite(&sys, &d, &scope, SuiteId::Pr26);
    assert!(r.consistent, "{r:?}");
    let find = |l: &str| r.conditions.iter().find(|c| c.label == l).unwrap().holds;
    assert!(!find("a"));
    assert!(find("b"));
    assert!(find("c"));
}

#[test]
fn pr26_z3i_shared_false() {
    let sys = Qo::new(-1, 3).unwrap();
    let scope = Scope::sampled(&sys, 11, 50, SampleBounds::default());
    let d = StarOperation::identity(&sys);
    let r = run_suite(&sys, &d, &scope, SuiteId::Pr26);
    assert!(r.consistent, "{r:?}");
    let find = |l: &str| r.conditions.iter().find(|c| c.label == l).unwrap().holds;
    assert!(!find("a") && !find("b") && !find("c"));
}

#[test]
fn inv_group_lattice_cases() {
    // N: principal translates form a lattice-ordered group
    let sys = ns(&[1]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let d = StarOperation::identity(&sys);
    let r = run_suite(&sys, &d, &scope, SuiteId::InvGroup);
    assert!(r.consistent && all_hold(&r), "{r:?}");

    // sup/inf of principal translates are max/min offsets
    let a = sys.principal(&4);
    let b = sys.principal(&6);
    assert_eq!(sys.intersect(&a, &b), sys.principal(&6));
    assert_eq!(d.apply(&sys, &sys.sum(&a, &b)), sys.principal(&4));

    // ⟨3,4,5⟩ with v: not Prüfer; the glb of principal pairs escapes the
    // group, consistently with the theorem
    let sys = ns(&[3, 4, 5]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let v = StarOperation::divisorial(&sys);
    let r = run_suite(&sys, &v, &scope, SuiteId::InvGroup);
    assert!(r.consistent, "{r:?}");
    let find = |l: &str| r.conditions.iter().find(|c| c.label == l).unwrap().holds;
    assert!(!find("prufer"));
    assert!(!find("inf_is_closed_sum"));
}

#[test]
fn inv_group_z5_dedekind() {
    let sys = Qo::new(-5, 1).unwrap();
    let scope = Scope::sampled(&sys, 9, 40, SampleBounds::default());
    let d = StarOperation::identity(&sys);
    let r = run_suite(&sys, &d, &scope, SuiteId::InvGroup);
    assert!(r.consistent && all_hold(&r), "{r:?}");
    // sup(2D, P₂) = 2D and inf = P₂ on the nested pair
    let p2 = sys.parse_ideal("2, 1+w").unwrap();
    let two_d = sys.principal(&QuadElem::from_ints(2, 0));
    assert_eq!(sys.intersect(&two_d, &p2), two_d);
    assert_eq!(d.apply(&sys, &sys.sum(&two_d, &p2)), p2);
}

#[test]
fn gcd_decompose_examples() {
    // N: A = 4+N, B = 6+N → C = 4+N, A1 = N, B1 = 2+N
    let sys = ns(&[1]);
    let d = StarOperation::identity(&sys);
    let a = sys.principal(&4);
    let b = sys.principal(&6);
    let g = gcd_decompose(&sys, &d, &a, &b).unwrap();
    assert_eq!(g.gcd, sys.principal(&4));
    assert_eq!(g.a_part, sys.principal(&0));
    assert_eq!(g.b_part, sys.principal(&2));

    // ℤ[√−5]: A = 2D, B = P₂ → C = P₂, A1 = P₂, B1 = D
    let sys = Qo::new(-5, 1).unwrap();
    let d = StarOperation::identity(&sys);
    let p2 = sys.parse_ideal("2, 1+w").unwrap();
    let two_d = sys.principal(&QuadElem::from_ints(2, 0));
    let g = gcd_decompose(&sys, &d, &two_d, &p2).unwrap();
    assert_eq!(g.gcd, p2);
    assert_eq!(g.a_part, p2);
    assert_eq!(g.b_part, sys.unit());

    // trivial pair
    let u = sys.unit();
    let g = gcd_decompose(&sys, &d, &u, &u).unwrap();
    assert_eq!(g.gcd, u);
    assert_eq!(g.a_part, u);
    assert_eq!(g.b_part, u);

    // non-invertible gcd candidate is rejected
    let sys = ns(&[3, 4, 5]);
    let d = StarOperation::identity(&sys);
    let a = sys.principal(&0);
    let b = sys.principal(&1);
    assert!(matches!(
        gcd_decompose(&sys, &d, &a, &b),
        Err(crate::error::Error::NotApplicable(_))
    ));
}

#[test]
fn witnesses_replay_byte_for_byte() {
    let sys = ns(&[3, 4, 5]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let v = StarOperation::divisorial(&sys);
    for &suite in ENUMERATED_SUITES {
        let r = run_suite(&sys, &v, &scope, suite);
        for c in r.conditions.iter().chain(&r.info) {
            let Some(w) = &c.witness else { continue };
            let replayed = replay_witness(&sys, &v, &scope, suite, &c.label, &w.ideals, &w.elements)
                .unwrap()
                .expect("witness still fails on replay");
            assert_eq!(&replayed, w, "replay mismatch for {}/{}", suite.name(), c.label);
        }
    }
}

#[test]
fn colon_characterization_bits_agree() {
    let sys = ns(&[3, 4, 5]);
    let ideals = sys.enumerate_normalized().unwrap();
    let v = StarOperation::divisorial(&sys);
    let s1 = SgIdeal::generated(sys.semigroup(), &[0, 1]).unwrap();
    let r = star::colon_characterization(&sys, &v, &s1, &ideals);
    assert!(!r.invertible);
    assert!(!r.identity_holds);
    assert!(r.consistent);
    // principal H: both bits true
    let h = sys.principal(&5);
    let r = star::colon_characterization(&sys, &v, &h, &ideals);
    assert!(r.invertible && r.identity_holds && r.consistent);
}

#[test]
fn cic_reports() {
    let sys = ns(&[3, 4, 5]);
    let ideals = sys.enumerate_normalized().unwrap();
    let r = star::complete_integral_closure(&sys, &ideals);
    assert!(!r.is_cicd && !r.definitional_cicd);
    assert!(r.witness.is_some());

    let sys = ns(&[1]);
    let ideals = sys.enumerate_normalized().unwrap();
    let r = star::complete_integral_closure(&sys, &ideals);
    assert!(r.is_cicd && r.definitional_cicd);

    let sys = Qo::new(-1, 3).unwrap();
    let scope = Scope::sampled(&sys, 5, 30, SampleBounds::default());
    let r = star::complete_integral_closure(&sys, &scope.ideals);
    assert!(!r.is_cicd && !r.definitional_cicd);

    let sys = Mon::new(2).unwrap();
    let scope = Scope::sampled(&sys, 5, 30, SampleBounds::default());
    let r = star::complete_integral_closure(&sys, &scope.ideals);
    assert!(r.is_cicd && r.definitional_cicd);
}

#[test]
fn classify_profiles() {
    // N: everything true, one star operation
    let sys = ns(&[1]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let r = classify_ns(&sys, &scope, &ClassifyOptions::default()).unwrap();
    assert!(r.consistent, "{:?}", r.violations);
    assert_eq!(r.enumerated.as_ref().unwrap().checked, 1);
    assert!(r.derived.v_domain && r.derived.cicd && r.derived.pseudo_principal);

    // ⟨3,4,5⟩: 4 stars, not a v-domain, not pseudo-principal
    let sys = ns(&[3, 4, 5]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let r = classify_ns(&sys, &scope, &ClassifyOptions::default()).unwrap();
    assert!(r.consistent, "{:?}", r.violations);
    assert_eq!(r.enumerated.as_ref().unwrap().checked, 4);
    assert!(!r.derived.v_domain);
    assert!(!r.derived.pseudo_principal);

    // ℤ[i]: Dedekind profile on samples
    let sys = Qo::new(-1, 1).unwrap();
    let scope = Scope::sampled(&sys, 42, 20, SampleBounds::default());
    let r = classify(&sys, &scope);
    assert!(r.consistent, "{:?}", r.violations);
    for row in &r.stars {
        assert!(row.flags.prufer && row.flags.cicd, "{row:?}");
    }
    assert!(r.derived.pseudo_principal); // class number 1

    // ℤ[√−5]: Dedekind but not pseudo-principal
    let sys = Qo::new(-5, 1).unwrap();
    let scope = Scope::sampled(&sys, 42, 20, SampleBounds::default());
    let r = classify(&sys, &scope);
    assert!(r.consistent, "{:?}", r.violations);
    assert!(!r.derived.pseudo_principal);

    // N²: t-Prüfer, not d-Prüfer, GGCD
    let sys = Mon::new(2).unwrap();
    let scope = Scope::sampled(&sys, 42, 30, SampleBounds::default());
    let r = classify(&sys, &scope);
    assert!(r.consistent, "{:?}", r.violations);
    let row = |n: &str| r.stars.iter().find(|s| s.star == n).unwrap();
    assert!(!row("d").flags.prufer);
    assert!(row("t").flags.prufer);
    assert!(row("v").flags.prufer);
    assert!(r.derived.ggcd && r.derived.product_dual);
}

#[test]
fn reports_are_deterministic() {
    let sys = ns(&[3, 4, 5]);
    let scope = Scope::exhaustive(&sys).unwrap();
    let v = StarOperation::divisorial(&sys);
    let r1 = run_suite(&sys, &v, &scope, SuiteId::Prufer);
    let r2 = run_suite(&sys, &v, &scope, SuiteId::Prufer);
    assert_eq!(
        serde_json::to_string(&r1).unwrap(),
        serde_json::to_string(&r2).unwrap()
    );
}
