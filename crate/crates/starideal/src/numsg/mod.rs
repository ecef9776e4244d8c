//! Numerical-semigroup backend: exact fractional-ideal arithmetic on subsets
//! of ℤ.
//!
//! A numerical semigroup S is a cofinite additive submonoid of ℕ. A fractional
//! ideal is a subset E ⊆ ℤ, bounded below, with E + S ⊆ E. Writing m = min E
//! and c for the conductor of S, every z ≥ m + c lies in E (z − m ∈ S and
//! m ∈ E), so E is completely determined by its offset m and a membership
//! window of length c. All operations work on widened windows and truncate
//! back to this canonical form.

pub mod stars;

use std::fmt;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::system::{IdealSystem, SampleBounds};

/// A numerical semigroup with precomputed gap data.
#[derive(Debug)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    gaps: Vec<u64>,
    frobenius: i64,
    conductor: u64,
    multiplicity: u64,
    window: Bits,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}
impl Eq for NumericalSemigroup {}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "ns({})", gens.join(","))
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `generators`.
    ///
    /// Membership is sieved additively up to a bound that is then certified:
    /// once `multiplicity` consecutive members follow the last sieved gap,
    /// every larger integer is a member too (subtract multiples of the
    /// multiplicity back into the certified run). The sieve bound starts at
    /// the Schur-style estimate (min−1)(max−1)+1 and doubles until certified,
    /// so the computed Frobenius number is exact, not heuristic.
    pub fn new(generators: &[u64]) -> Result<Arc<Self>> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::InvalidIdeal("generator 0 is not allowed".into()));
        }
        let g = generators.iter().fold(0u64, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotNumericalSemigroup(g));
        }
        let lo = *generators.iter().min().unwrap();
        let hi = *generators.iter().max().unwrap();
        let mut bound = ((lo - 1) * (hi - 1) + lo + 1) as usize;
        let member = loop {
            let mut member = vec![false; bound + 1];
            member[0] = true;
            for i in 1..=bound {
                member[i] = generators
                    .iter()
                    .any(|&g| i as u64 >= g && member[i - g as usize]);
            }
            // certify: the trailing run of members must span the multiplicity
            let run = member.iter().rev().take_while(|&&m| m).count();
            if run as u64 > lo {
                break member;
            }
            bound *= 2;
        };
        let frobenius = match member.iter().rposition(|&m| !m) {
            Some(f) => f as i64,
            None => -1,
        };
        let conductor = (frobenius + 1) as u64;
        let gaps: Vec<u64> = (0..conductor)
            .filter(|&n| !member[n as usize])
            .collect();
        let mut window = Bits::new(conductor as usize);
        for n in 0..conductor {
            window.set(n as usize, member[n as usize]);
        }
        // minimal generators: nonzero members not expressible as a sum of two
        let mut gens = Vec::new();
        let in_s = |n: i64| n >= 0 && (n >= conductor as i64 || window.get(n as usize));
        let multiplicity = (1..).find(|&n| in_s(n)).unwrap() as u64;
        for n in multiplicity as i64..=(conductor as i64 + multiplicity as i64) {
            if !in_s(n) {
                continue;
            }
            let decomposable =
                (multiplicity as i64..=n - multiplicity as i64).any(|a| in_s(a) && in_s(n - a));
            if !decomposable {
                gens.push(n as u64);
            }
        }
        debug_assert!(!gens.is_empty());
        Ok(Arc::new(NumericalSemigroup {
            gens,
            gaps,
            frobenius,
            conductor,
            multiplicity,
            window,
        }))
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }
    pub fn conductor(&self) -> u64 {
        self.conductor
    }
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// n ∈ S.
    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (n >= self.conductor as i64 || self.window.get(n as usize))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A fractional ideal of a numerical semigroup in canonical window form.
///
/// `offset` is the minimum element; `window` marks membership on
/// `[offset, offset + conductor)`; everything from `offset + conductor` on is
/// implicitly inside.
#[derive(Clone)]
pub struct SgIdeal {
    owner: Arc<NumericalSemigroup>,
    offset: i64,
    window: Bits,
}

impl fmt::Debug for SgIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SgIdeal({})", self.literal())
    }
}

impl PartialEq for SgIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.offset == other.offset
            && self.window == other.window
            && self.owner.gens == other.owner.gens
    }
}
impl Eq for SgIdeal {}

impl std::hash::Hash for SgIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.offset.hash(state);
        self.window.hash(state);
    }
}

impl PartialOrd for SgIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for SgIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.offset, &self.window).cmp(&(other.offset, &other.window))
    }
}

impl SgIdeal {
    /// Canonicalizes the ideal whose membership function is `f`, given that
    /// its minimum is at least `lo`. The minimum must exist within
    /// `lo + 2·conductor + 2`; operations guarantee this.
    fn from_fn(owner: &Arc<NumericalSemigroup>, lo: i64, f: impl Fn(i64) -> bool) -> SgIdeal {
        let c = owner.conductor as i64;
        let offset = (lo..=lo + 2 * c + 2)
            .find(|&z| f(z))
            .expect("ideal minimum within scan range");
        let mut window = Bits::new(c as usize);
        for i in 0..c {
            window.set(i as usize, f(offset + i));
        }
        let ideal = SgIdeal {
            owner: Arc::clone(owner),
            offset,
            window,
        };
        debug_assert!(ideal.closed_under_generators());
        ideal
    }

    fn closed_under_generators(&self) -> bool {
        let c = self.owner.conductor as i64;
        (0..c)
            .filter(|&i| self.window.get(i as usize))
            .all(|i| {
                self.owner
                    .gens
                    .iter()
                    .all(|&g| self.contains(self.offset + i + g as i64))
            })
    }

    /// The unit ideal S.
    pub fn unit(owner: &Arc<NumericalSemigroup>) -> SgIdeal {
        SgIdeal {
            owner: Arc::clone(owner),
            offset: 0,
            window: owner.window.clone(),
        }
    }

    /// The principal fractional ideal z + S.
    pub fn principal(owner: &Arc<NumericalSemigroup>, z: i64) -> SgIdeal {
        SgIdeal {
            owner: Arc::clone(owner),
            offset: z,
            window: owner.window.clone(),
        }
    }

    /// Ideal generated by finitely many integers: ∪ (g + S).
    pub fn generated(owner: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<SgIdeal> {
        if gens.is_empty() {
            return Err(Error::InvalidIdeal(
                "an ideal needs at least one generator".into(),
            ));
        }
        let lo = *gens.iter().min().unwrap();
        Ok(SgIdeal::from_fn(owner, lo, |z| {
            gens.iter().any(|&g| owner.contains(z - g))
        }))
    }

    pub fn owner(&self) -> &Arc<NumericalSemigroup> {
        &self.owner
    }
    pub fn offset(&self) -> i64 {
        self.offset
    }
    pub fn window(&self) -> &Bits {
        &self.window
    }

    /// z ∈ E.
    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        let c = self.owner.conductor as i64;
        z >= self.offset && (z >= self.offset + c || self.window.get((z - self.offset) as usize))
    }

    fn check_owner(&self, other: &SgIdeal) -> Result<()> {
        if self.owner.gens == other.owner.gens {
            Ok(())
        } else {
            Err(Error::OwnerMismatch(
                self.owner.to_string(),
                other.owner.to_string(),
            ))
        }
    }

    /// Smallest ideal containing both, i.e. the set union.
    pub fn sum(&self, other: &SgIdeal) -> Result<SgIdeal> {
        self.check_owner(other)?;
        Ok(SgIdeal::from_fn(
            &self.owner,
            self.offset.min(other.offset),
            |z| self.contains(z) || other.contains(z),
        ))
    }

    /// Setwise sums {a + b}.
    pub fn product(&self, other: &SgIdeal) -> Result<SgIdeal> {
        self.check_owner(other)?;
        let c = self.owner.conductor as i64;
        let (a, b) = (self, other);
        Ok(SgIdeal::from_fn(&self.owner, a.offset + b.offset, |z| {
            // enough to scan x over a's window plus one tail slot
            (a.offset..=(a.offset + c).min(z - b.offset))
                .any(|x| a.contains(x) && b.contains(z - x))
        }))
    }

    pub fn intersect(&self, other: &SgIdeal) -> Result<SgIdeal> {
        self.check_owner(other)?;
        Ok(SgIdeal::from_fn(
            &self.owner,
            self.offset.max(other.offset),
            |z| self.contains(z) && other.contains(z),
        ))
    }

    /// `(A : B) = { z ∈ ℤ | z + B ⊆ A }`.
    ///
    /// Only b's window needs checking: for w ≥ min B + c the sum z + w lands
    /// in A's forced tail for every candidate z ≥ min A − min B.
    pub fn colon(&self, other: &SgIdeal) -> Result<SgIdeal> {
        self.check_owner(other)?;
        let c = self.owner.conductor as i64;
        let (a, b) = (self, other);
        Ok(SgIdeal::from_fn(&self.owner, a.offset - b.offset, |z| {
            (b.offset..b.offset + c)
                .all(|w| !b.contains(w) || a.contains(z + w))
        }))
    }

    pub fn translate(&self, z: i64) -> SgIdeal {
        SgIdeal {
            owner: Arc::clone(&self.owner),
            offset: self.offset + z,
            window: self.window.clone(),
        }
    }

    /// `A ⊆ B`. The tail of A starts at `min A + c ≥ min B + c`, inside B's
    /// forced tail, so only A's window needs checking.
    pub fn subset_of(&self, other: &SgIdeal) -> bool {
        if self.offset < other.offset {
            return false;
        }
        let c = self.owner.conductor as i64;
        (self.offset..self.offset + c).all(|z| !self.contains(z) || other.contains(z))
    }

    /// Minimal generators: A \ (A + M) with M = S \ {0}.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let owner = &self.owner;
        let c = owner.conductor as i64;
        let m = owner.multiplicity as i64;
        let maximal = SgIdeal::from_fn(owner, m, |z| z > 0 && owner.contains(z));
        let shifted = self.product(&maximal).expect("same owner");
        (self.offset..self.offset + c + m)
            .filter(|&z| self.contains(z) && !shifted.contains(z))
            .collect()
    }

    /// Normalized form: (min, E − min).
    pub fn normalized(&self) -> (i64, SgIdeal) {
        (self.offset, self.translate(-self.offset))
    }

    /// `A^v = (S : (S : A))`.
    pub fn v_closure(&self) -> SgIdeal {
        let unit = SgIdeal::unit(&self.owner);
        let inv = unit.colon(self).expect("same owner");
        unit.colon(&inv).expect("same owner")
    }

    /// `A^w`. The unique maximal ideal M = S \ {0} of a numerical semigroup
    /// satisfies M^v = M (the Frobenius number lies in (S : M) \ S, so
    /// 0 ∉ M^v), hence M is the unique maximal t-ideal; localizing at M
    /// inverts only 0, and the w-closure is A itself.
    pub fn w_closure(&self) -> SgIdeal {
        self.clone()
    }

    /// All ideals E with min E = 0: exactly the sets S ∪ G for gap subsets G
    /// that stay closed under adding generators. `None` when the gap count
    /// makes subset enumeration unreasonable.
    pub fn enumerate_normalized(owner: &Arc<NumericalSemigroup>) -> Option<Vec<SgIdeal>> {
        let gaps = &owner.gaps;
        let genus = gaps.len();
        if genus >= 24 {
            return None;
        }
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << genus) {
            let in_e = |z: i64| -> bool {
                if owner.contains(z) {
                    return true;
                }
                if z < 0 {
                    return false;
                }
                gaps.iter()
                    .position(|&g| g as i64 == z)
                    .is_some_and(|i| mask >> i & 1 == 1)
            };
            let ok = (0..genus)
                .filter(|&i| mask >> i & 1 == 1)
                .all(|i| {
                    owner
                        .gens
                        .iter()
                        .all(|&n| in_e(gaps[i] as i64 + n as i64))
                });
            if !ok {
                continue;
            }
            let mut window = Bits::new(owner.conductor as usize);
            for z in 0..owner.conductor as i64 {
                window.set(z as usize, in_e(z));
            }
            out.push(SgIdeal {
                owner: Arc::clone(owner),
                offset: 0,
                window,
            });
        }
        Some(out)
    }

    /// Generator-list literal, e.g. `0,1`.
    pub fn literal(&self) -> String {
        let gens: Vec<String> = self
            .minimal_generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        gens.join(",")
    }
}

/// The numerical-semigroup ideal system.
#[derive(Clone, Debug)]
pub struct Sg(pub Arc<NumericalSemigroup>);

impl Sg {
    pub fn new(generators: &[u64]) -> Result<Sg> {
        Ok(Sg(NumericalSemigroup::new(generators)?))
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.0
    }
}

impl IdealSystem for Sg {
    type Ideal = SgIdeal;
    type Elem = i64;

    fn name(&self) -> String {
        self.0.to_string()
    }

    fn unit(&self) -> SgIdeal {
        SgIdeal::unit(&self.0)
    }

    fn sum(&self, a: &SgIdeal, b: &SgIdeal) -> SgIdeal {
        a.sum(b).expect("owner checked by caller")
    }

    fn product(&self, a: &SgIdeal, b: &SgIdeal) -> SgIdeal {
        a.product(b).expect("owner checked by caller")
    }

    fn intersect(&self, a: &SgIdeal, b: &SgIdeal) -> SgIdeal {
        a.intersect(b).expect("owner checked by caller")
    }

    fn colon(&self, a: &SgIdeal, b: &SgIdeal) -> SgIdeal {
        a.colon(b).expect("owner checked by caller")
    }

    fn is_subideal(&self, a: &SgIdeal, b: &SgIdeal) -> bool {
        a.subset_of(b)
    }

    fn principal(&self, e: &i64) -> SgIdeal {
        SgIdeal::principal(&self.0, *e)
    }

    fn scale(&self, e: &i64, a: &SgIdeal) -> SgIdeal {
        a.translate(*e)
    }

    fn minimal_generators(&self, a: &SgIdeal) -> Vec<i64> {
        a.minimal_generators()
    }

    fn generated(&self, gens: &[i64]) -> Result<SgIdeal> {
        SgIdeal::generated(&self.0, gens)
    }

    fn enumerate_normalized(&self) -> Option<Vec<SgIdeal>> {
        SgIdeal::enumerate_normalized(&self.0)
    }

    fn normalize(&self, a: &SgIdeal) -> Option<(i64, SgIdeal)> {
        Some(a.normalized())
    }

    fn w_closure(&self, a: &SgIdeal) -> SgIdeal {
        a.w_closure()
    }

    fn cic_is_self(&self) -> bool {
        self.0.conductor == 0
    }

    fn cic_description(&self) -> String {
        "N (every gap element is almost integral via the conductor)".into()
    }

    fn is_principal(&self, a: &SgIdeal) -> bool {
        a.window == self.0.window
    }

    fn relative_translates(&self) -> Vec<i64> {
        // |shift| ≥ conductor only produces nested pairs, which hold
        // trivially in every pair-quantified condition; the window runs to
        // 2·conductor so that integral pairs of translates realize every
        // relevant relative shift
        let c = self.0.conductor as i64;
        let mut out = Vec::new();
        for d in 1..=2 * c {
            out.push(d);
            out.push(-d);
        }
        out
    }

    fn group_translates(&self) -> Vec<i64> {
        // the group of invertible ideals is materialized on a floor of ±20
        // offsets even when the conductor is small
        let c = self.0.conductor as i64;
        let mut out = Vec::new();
        for d in 1..=(2 * c).max(20) {
            out.push(d);
            out.push(-d);
        }
        out
    }

    fn element_window(&self) -> Vec<i64> {
        let hi = 2 * self.0.conductor as i64 + 2;
        (0..=hi).filter(|&n| self.0.contains(n)).collect()
    }

    fn sample_ideal(&self, rng: &mut SplitMix64, bounds: &SampleBounds) -> SgIdeal {
        // random gap subset, closed under adding generators, then shifted
        let gaps = &self.0.gaps;
        let mut sel: Vec<bool> = gaps.iter().map(|_| rng.next_u64() & 1 == 1).collect();
        loop {
            let mut changed = false;
            for i in 0..gaps.len() {
                if !sel[i] {
                    continue;
                }
                for &n in &self.0.gens {
                    let z = gaps[i] + n;
                    if let Some(j) = gaps.iter().position(|&g| g == z) {
                        if !sel[j] {
                            sel[j] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut window = Bits::new(self.0.conductor as usize);
        for z in 0..self.0.conductor {
            let member =
                self.0.contains(z as i64) || gaps.iter().position(|&g| g == z).is_some_and(|i| sel[i]);
            window.set(z as usize, member);
        }
        let shift = rng.range_i64(-bounds.height, bounds.height);
        SgIdeal {
            owner: Arc::clone(&self.0),
            offset: shift,
            window,
        }
    }

    fn seed_ideals(&self) -> Vec<SgIdeal> {
        vec![self.unit()]
    }

    fn ideal_literal(&self, a: &SgIdeal) -> String {
        a.literal()
    }

    fn parse_ideal(&self, s: &str) -> Result<SgIdeal> {
        let gens = parse_int_list(s)?;
        SgIdeal::generated(&self.0, &gens)
    }

    fn elem_literal(&self, e: &i64) -> String {
        e.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<i64> {
        s.trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
    }

    fn family_translates(&self, e: &SgIdeal, a: &SgIdeal) -> Option<Vec<SgIdeal>> {
        // z·E ⊇ A forces z ≤ min A; translates with z ≤ min A − c contribute
        // nothing beyond min A + N, which A^v already enforces
        let c = self.0.conductor as i64;
        let mut out = Vec::new();
        for z in (a.offset - c)..=a.offset {
            let te = e.translate(z);
            if a.subset_of(&te) {
                out.push(te);
            }
        }
        Some(out)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", tok.trim())))
        })
        .collect()
}
