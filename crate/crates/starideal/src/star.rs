//! Star operations over an ideal system: the identity d, the divisorial
//! closure v, the finite-character companion t, the backend-supplied w,
//! finite-character transforms, meets, table-defined and family-defined
//! closures, and star invertibility.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::system::IdealSystem;

/// Closure table on normalized ideals; extends to every fractional ideal by
/// translation equivariance.
pub struct TableData<S: IdealSystem> {
    pub ideals: Arc<Vec<S::Ideal>>,
    pub index: Arc<HashMap<S::Ideal, usize>>,
    pub map: Vec<u32>,
}

impl<S: IdealSystem> Clone for TableData<S> {
    fn clone(&self) -> Self {
        TableData {
            ideals: Arc::clone(&self.ideals),
            index: Arc::clone(&self.index),
            map: self.map.clone(),
        }
    }
}

pub enum StarKind<S: IdealSystem> {
    /// d: the identity operation.
    Identity,
    /// v: A ↦ (D : (D : A)).
    Divisorial,
    /// t: union of F^v over finitely generated subideals.
    TOperation,
    /// w: backend-supplied intersection of localizations at maximal t-ideals.
    WOperation,
    /// ⋆_f for an inner star ⋆.
    FiniteCharacter(Box<StarOperation<S>>),
    /// Pointwise intersection of finitely many stars.
    Meet(Vec<StarOperation<S>>),
    /// Explicit closure table on normalized ideals.
    Table(TableData<S>),
    /// A ↦ A^v ∩ ⋂ { zE ⊇ A : E in the family }.
    Family(Vec<S::Ideal>),
}

pub struct StarOperation<S: IdealSystem> {
    name: String,
    owner: String,
    kind: StarKind<S>,
}

impl<S: IdealSystem> Clone for StarOperation<S> {
    fn clone(&self) -> Self {
        let kind = match &self.kind {
            StarKind::Identity => StarKind::Identity,
            StarKind::Divisorial => StarKind::Divisorial,
            StarKind::TOperation => StarKind::TOperation,
            StarKind::WOperation => StarKind::WOperation,
            StarKind::FiniteCharacter(inner) => StarKind::FiniteCharacter(inner.clone()),
            StarKind::Meet(list) => StarKind::Meet(list.clone()),
            StarKind::Table(t) => StarKind::Table(t.clone()),
            StarKind::Family(f) => StarKind::Family(f.clone()),
        };
        StarOperation {
            name: self.name.clone(),
            owner: self.owner.clone(),
            kind,
        }
    }
}

impl<S: IdealSystem> fmt::Debug for StarOperation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarOperation({} on {})", self.name, self.owner)
    }
}

impl<S: IdealSystem> StarOperation<S> {
    pub fn identity(sys: &S) -> Self {
        StarOperation {
            name: "d".into(),
            owner: sys.name(),
            kind: StarKind::Identity,
        }
    }

    pub fn divisorial(sys: &S) -> Self {
        StarOperation {
            name: "v".into(),
            owner: sys.name(),
            kind: StarKind::Divisorial,
        }
    }

    pub fn t_operation(sys: &S) -> Self {
        StarOperation {
            name: "t".into(),
            owner: sys.name(),
            kind: StarKind::TOperation,
        }
    }

    pub fn w_operation(sys: &S) -> Self {
        StarOperation {
            name: "w".into(),
            owner: sys.name(),
            kind: StarKind::WOperation,
        }
    }

    pub fn table_on(sys: &S, name: String, data: TableData<S>) -> Self {
        StarOperation {
            name,
            owner: sys.name(),
            kind: StarKind::Table(data),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &StarKind<S> {
        &self.kind
    }

    /// A ↦ A^⋆.
    pub fn apply(&self, sys: &S, a: &S::Ideal) -> S::Ideal {
        match &self.kind {
            StarKind::Identity => a.clone(),
            StarKind::Divisorial => v_closure(sys, a),
            StarKind::TOperation => {
                t_closure(sys, a).expect("t-closure is consistent on finitely generated ideals")
            }
            StarKind::WOperation => sys.w_closure(a),
            StarKind::FiniteCharacter(inner) => finite_character_closure(sys, inner, a)
                .expect("finite-character closure stabilizes on finitely generated ideals"),
            StarKind::Meet(list) => {
                let mut acc = list[0].apply(sys, a);
                for s in &list[1..] {
                    acc = sys.intersect(&acc, &s.apply(sys, a));
                }
                acc
            }
            StarKind::Table(t) => {
                let (z, e) = sys
                    .normalize(a)
                    .expect("table stars require a normalizing backend");
                let i = *t
                    .index
                    .get(&e)
                    .expect("normalized ideal occurs in the enumeration");
                let c = &t.ideals[t.map[i] as usize];
                sys.scale(&z, c)
            }
            StarKind::Family(family) => {
                let mut acc = v_closure(sys, a);
                for e in family {
                    let bounds = sys
                        .family_translates(e, a)
                        .expect("family stars require translate bounds");
                    for t in bounds {
                        acc = sys.intersect(&acc, &t);
                    }
                }
                acc
            }
        }
    }
}

/// `A^v = (D : (D : A))`.
pub fn v_closure<S: IdealSystem>(sys: &S, a: &S::Ideal) -> S::Ideal {
    let unit = sys.unit();
    let inv = sys.colon(&unit, a);
    sys.colon(&unit, &inv)
}

/// `(D : A)`.
pub fn inverse<S: IdealSystem>(sys: &S, a: &S::Ideal) -> S::Ideal {
    sys.colon(&sys.unit(), a)
}

/// Nonempty subsets of `0..n`, singletons and small subsets first, always
/// ending with the full set. Complete for n ≤ 12; beyond that the chain of
/// prefixes plus the full set is used (the union is directed, so the full
/// set dominates either way).
fn generator_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n <= 12 {
        let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for m in masks {
            out.push((0..n).filter(|i| m >> i & 1 == 1).collect());
        }
    } else {
        for i in 0..n {
            out.push(vec![i]);
        }
        for len in 2..=n {
            out.push((0..len).collect());
        }
    }
    out
}

/// `A^t = ⋃ { F^v : F finitely generated, F ⊆ A }`, computed by the literal
/// subset-union route over subsets of the minimal generators. Every backend
/// ideal is finitely generated, so the union stabilizes at `A^v`; that
/// equality is asserted rather than assumed.
pub fn t_closure<S: IdealSystem>(sys: &S, a: &S::Ideal) -> Result<S::Ideal> {
    let gens = sys.minimal_generators(a);
    if gens.is_empty() {
        return Err(Error::InvalidIdeal("ideal with no generators".into()));
    }
    let regen = sys.generated(&gens)?;
    if regen != *a {
        return Err(Error::Internal(
            "minimal generators failed to regenerate the ideal".into(),
        ));
    }
    let mut acc: Option<S::Ideal> = None;
    for subset in generator_subsets(gens.len()) {
        let picked: Vec<S::Elem> = subset.iter().map(|&i| gens[i].clone()).collect();
        let f = sys.generated(&picked)?;
        let fv = v_closure(sys, &f);
        acc = Some(match acc {
            None => fv,
            Some(u) => sys.sum(&u, &fv),
        });
    }
    let t = acc.expect("at least one subset");
    let v = v_closure(sys, a);
    if t != v {
        return Err(Error::Internal(
            "subset-union t-closure did not stabilize at the v-closure".into(),
        ));
    }
    Ok(t)
}

/// `A^{⋆_f} = ⋃ { F^⋆ : F finitely generated, F ⊆ A }` over subsets of the
/// minimal generators.
fn finite_character_closure<S: IdealSystem>(
    sys: &S,
    inner: &StarOperation<S>,
    a: &S::Ideal,
) -> Result<S::Ideal> {
    let gens = sys.minimal_generators(a);
    if gens.is_empty() {
        return Err(Error::InvalidIdeal("ideal with no generators".into()));
    }
    let regen = sys.generated(&gens)?;
    if regen != *a {
        return Err(Error::Internal(
            "minimal generators failed to regenerate the ideal".into(),
        ));
    }
    let mut acc: Option<S::Ideal> = None;
    for subset in generator_subsets(gens.len()) {
        let picked: Vec<S::Elem> = subset.iter().map(|&i| gens[i].clone()).collect();
        let f = sys.generated(&picked)?;
        let fs = inner.apply(sys, &f);
        acc = Some(match acc {
            None => fs,
            Some(u) => sys.sum(&u, &fs),
        });
    }
    Ok(acc.expect("at least one subset"))
}

/// The star operation of finite character associated to `star`.
pub fn finite_character<S: IdealSystem>(star: &StarOperation<S>) -> StarOperation<S> {
    StarOperation {
        name: format!("{}_f", star.name),
        owner: star.owner.clone(),
        kind: StarKind::FiniteCharacter(Box::new(star.clone())),
    }
}

/// Pointwise meet `A ↦ ⋂ A^{⋆_i}`.
pub fn star_meet<S: IdealSystem>(stars: Vec<StarOperation<S>>) -> Result<StarOperation<S>> {
    if stars.is_empty() {
        return Err(Error::InvalidIdeal("meet of an empty star list".into()));
    }
    let owner = stars[0].owner.clone();
    for s in &stars[1..] {
        if s.owner != owner {
            return Err(Error::MixedOwners(owner, s.owner.clone()));
        }
    }
    if stars.len() == 1 {
        return Ok(stars.into_iter().next().unwrap());
    }
    let name = format!(
        "meet({})",
        stars.iter().map(|s| s.name.as_str()).collect::<Vec<_>>().join(",")
    );
    Ok(StarOperation {
        name,
        owner,
        kind: StarKind::Meet(stars),
    })
}

/// `A^⋆ = A^v ∩ ⋂ { zE : A ⊆ zE, E in family }`. The empty family yields v.
/// Requires the backend to bound the relevant translates.
pub fn star_from_family<S: IdealSystem>(
    sys: &S,
    family: Vec<S::Ideal>,
) -> Result<StarOperation<S>> {
    if family.is_empty() {
        return Ok(StarOperation::divisorial(sys));
    }
    if sys.family_translates(&family[0], &sys.unit()).is_none() {
        return Err(Error::Unsupported(format!(
            "family-defined stars are not available on {}",
            sys.name()
        )));
    }
    Ok(StarOperation {
        name: format!("family[{}]", family.len()),
        owner: sys.name(),
        kind: StarKind::Family(family),
    })
}

/// `(A A^{-1})^⋆ = D`.
pub fn is_star_invertible<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    a: &S::Ideal,
) -> bool {
    let p = sys.product(a, &inverse(sys, a));
    star.apply(sys, &p) == sys.unit()
}

/// Outcome of the colon characterization of ⋆-invertibility for one ideal H:
/// H is ⋆-invertible iff `(A:H)^⋆ = (A^⋆:H)^⋆ = (AH^{-1})^⋆` for all A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColonCharacterization<S: IdealSystem> {
    pub invertible: bool,
    pub identity_holds: bool,
    pub witness: Option<S::Ideal>,
    /// Whether the two bits agree on the supplied scope.
    pub consistent: bool,
}

pub fn colon_characterization<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    h: &S::Ideal,
    scope: &[S::Ideal],
) -> ColonCharacterization<S> {
    let invertible = is_star_invertible(sys, star, h);
    let hinv = inverse(sys, h);
    let mut witness = None;
    for a in scope {
        let lhs = star.apply(sys, &sys.colon(a, h));
        let mid = star.apply(sys, &sys.colon(&star.apply(sys, a), h));
        let rhs = star.apply(sys, &sys.product(a, &hinv));
        if lhs != rhs || mid != rhs {
            witness = Some(a.clone());
            break;
        }
    }
    let identity_holds = witness.is_none();
    ColonCharacterization {
        invertible,
        identity_holds,
        witness,
        consistent: invertible == identity_holds,
    }
}

/// Complete-integral-closure descriptor plus the definitional cross-check
/// `(A^v A^{-1})^v = D` over a scope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CicReport<S: IdealSystem> {
    pub description: String,
    pub is_cicd: bool,
    pub definitional_cicd: bool,
    pub witness: Option<S::Ideal>,
}

pub fn complete_integral_closure<S: IdealSystem>(sys: &S, scope: &[S::Ideal]) -> CicReport<S> {
    let is_cicd = sys.cic_is_self();
    let unit = sys.unit();
    let mut witness = None;
    for a in scope {
        let va = v_closure(sys, a);
        let p = sys.product(&va, &inverse(sys, a));
        if v_closure(sys, &p) != unit {
            witness = Some(a.clone());
            break;
        }
    }
    CicReport {
        description: sys.cic_description(),
        is_cicd,
        definitional_cicd: witness.is_none(),
        witness,
    }
}

/// Tabulates any star on a finite normalized enumeration; closure values must
/// land inside the enumeration.
pub fn tabulate<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    ideals: &Arc<Vec<S::Ideal>>,
    index: &Arc<HashMap<S::Ideal, usize>>,
) -> Result<TableData<S>> {
    let mut map = Vec::with_capacity(ideals.len());
    for e in ideals.iter() {
        let c = star.apply(sys, e);
        let i = index
            .get(&c)
            .ok_or_else(|| Error::Internal("closure left the normalized enumeration".into()))?;
        map.push(*i as u32);
    }
    Ok(TableData {
        ideals: Arc::clone(ideals),
        index: Arc::clone(index),
        map,
    })
}

/// Monotonicity across translated containments: `zE ⊆ F ⟹ zE^⋆ ⊆ F^⋆` for
/// the given scope and translates. Table-defined closures enumerated from
/// the normalized poset are monotone on that poset by construction but may
/// fail this stronger containment; the classical order facts (such as
/// ⋆_f ≤ ⋆) hold exactly for the operations that pass it.
pub fn is_fully_monotone<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    ideals: &[S::Ideal],
    translates: &[S::Elem],
) -> bool {
    for e in ideals {
        let se = star.apply(sys, e);
        for f in ideals {
            let sf = star.apply(sys, f);
            if sys.is_subideal(e, f) && !sys.is_subideal(&se, &sf) {
                return false;
            }
            for z in translates {
                if sys.is_subideal(&sys.scale(z, e), f)
                    && !sys.is_subideal(&sys.scale(z, &se), &sf)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks the star axioms over the given finite scope: extensivity,
/// monotonicity, idempotence, unit- and principal-fixing,
/// translation-equivariance and domination by v. Returns the first violation.
pub fn verify_star_axioms<S: IdealSystem>(
    sys: &S,
    star: &StarOperation<S>,
    ideals: &[S::Ideal],
    translates: &[S::Elem],
) -> std::result::Result<(), String> {
    let unit = sys.unit();
    if star.apply(sys, &unit) != unit {
        return Err("unit ideal is not fixed".into());
    }
    for e in translates {
        let p = sys.principal(e);
        if star.apply(sys, &p) != p {
            return Err(format!("principal ideal {} is not fixed", sys.ideal_literal(&p)));
        }
    }
    for a in ideals {
        let sa = star.apply(sys, a);
        if !sys.is_subideal(a, &sa) {
            return Err(format!("not extensive at {}", sys.ideal_literal(a)));
        }
        if star.apply(sys, &sa) != sa {
            return Err(format!("not idempotent at {}", sys.ideal_literal(a)));
        }
        if !sys.is_subideal(&sa, &v_closure(sys, a)) {
            return Err(format!("not dominated by v at {}", sys.ideal_literal(a)));
        }
        for z in translates {
            if star.apply(sys, &sys.scale(z, a)) != sys.scale(z, &sa) {
                return Err(format!(
                    "not translation-equivariant at {}",
                    sys.ideal_literal(a)
                ));
            }
        }
        for b in ideals {
            if sys.is_subideal(a, b) && !sys.is_subideal(&sa, &star.apply(sys, b)) {
                return Err(format!(
                    "not monotone at {} ⊆ {}",
                    sys.ideal_literal(a),
                    sys.ideal_literal(b)
                ));
            }
        }
    }
    Ok(())
}
