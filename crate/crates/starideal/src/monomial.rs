//! Free-monoid backend: finitely generated fractional monomial ideals of ℕ^k.
//!
//! An ideal is the up-set of a finite antichain of vectors in ℤ^k. Sum is
//! generator union, product is pairwise vector sums, intersection is pairwise
//! componentwise maxima, and the colon quotient intersects the translates by
//! the divisor's generators; every result is re-minimalized to its antichain.
//! The v-closure turns out to be the principal ideal at the componentwise
//! minimum (the GCD-monoid collapse), which the tests verify against the
//! double-colon route rather than assume.

use std::fmt;

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::system::{IdealSystem, SampleBounds};

/// Finitely generated fractional monomial ideal, kept as its minimal
/// generator antichain (sorted, pairwise incomparable under componentwise ≤).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonIdeal {
    k: usize,
    gens: Vec<Vec<i64>>,
}

impl fmt::Debug for MonIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonIdeal({})", self.literal())
    }
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonIdeal {
    pub fn new(k: usize, gens: Vec<Vec<i64>>) -> Result<MonIdeal> {
        if gens.is_empty() {
            return Err(Error::InvalidIdeal("monomial ideal needs a generator".into()));
        }
        for g in &gens {
            if g.len() != k {
                return Err(Error::DimensionMismatch(g.len(), k));
            }
        }
        Ok(MonIdeal::minimalized(k, gens))
    }

    fn minimalized(k: usize, mut gens: Vec<Vec<i64>>) -> MonIdeal {
        gens.sort();
        gens.dedup();
        let mut keep: Vec<Vec<i64>> = Vec::with_capacity(gens.len());
        'next: for g in gens {
            if keep.iter().any(|h| leq(h, &g)) {
                continue 'next;
            }
            keep.retain(|h| !leq(&g, h));
            keep.push(g);
        }
        keep.sort();
        MonIdeal { k, gens: keep }
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.gens
    }

    /// v ∈ ideal, i.e. some generator is ≤ v componentwise.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.gens.iter().any(|g| leq(g, v))
    }

    /// Componentwise minimum of the generators.
    pub fn floor(&self) -> Vec<i64> {
        (0..self.k)
            .map(|i| self.gens.iter().map(|g| g[i]).min().unwrap())
            .collect()
    }

    pub fn translate(&self, z: &[i64]) -> MonIdeal {
        MonIdeal {
            k: self.k,
            gens: self
                .gens
                .iter()
                .map(|g| g.iter().zip(z).map(|(a, b)| a + b).collect())
                .collect(),
        }
    }

    fn check_dim(&self, other: &MonIdeal) -> Result<()> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.k, other.k))
        }
    }

    pub fn sum(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_dim(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonIdeal::minimalized(self.k, gens))
    }

    pub fn product(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_dim(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Ok(MonIdeal::minimalized(self.k, gens))
    }

    pub fn intersect(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_dim(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
            }
        }
        Ok(MonIdeal::minimalized(self.k, gens))
    }

    /// `(A : B) = ⋂_b (A − b)` over the generators of B.
    pub fn colon(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_dim(other)?;
        let mut acc: Option<MonIdeal> = None;
        for b in &other.gens {
            let neg: Vec<i64> = b.iter().map(|x| -x).collect();
            let shifted = self.translate(&neg);
            acc = Some(match acc {
                None => shifted,
                Some(u) => u.intersect(&shifted)?,
            });
        }
        Ok(acc.expect("divisor has a generator"))
    }

    pub fn subset_of(&self, other: &MonIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn literal(&self) -> String {
        self.gens
            .iter()
            .map(|g| {
                let coords: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                format!("({})", coords.join(","))
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// The free-monoid ideal system ℕ^k.
#[derive(Clone, Debug)]
pub struct Mon {
    k: usize,
}

impl Mon {
    pub fn new(k: usize) -> Result<Mon> {
        if !(1..=4).contains(&k) {
            return Err(Error::Unsupported(format!(
                "monomial backend supports dimensions 1..=4, got {k}"
            )));
        }
        Ok(Mon { k })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }
}

impl IdealSystem for Mon {
    type Ideal = MonIdeal;
    type Elem = Vec<i64>;

    fn name(&self) -> String {
        format!("mon(k={})", self.k)
    }

    fn unit(&self) -> MonIdeal {
        MonIdeal {
            k: self.k,
            gens: vec![vec![0; self.k]],
        }
    }

    fn sum(&self, a: &MonIdeal, b: &MonIdeal) -> MonIdeal {
        a.sum(b).expect("dimension checked by caller")
    }

    fn product(&self, a: &MonIdeal, b: &MonIdeal) -> MonIdeal {
        a.product(b).expect("dimension checked by caller")
    }

    fn intersect(&self, a: &MonIdeal, b: &MonIdeal) -> MonIdeal {
        a.intersect(b).expect("dimension checked by caller")
    }

    fn colon(&self, a: &MonIdeal, b: &MonIdeal) -> MonIdeal {
        a.colon(b).expect("dimension checked by caller")
    }

    fn is_subideal(&self, a: &MonIdeal, b: &MonIdeal) -> bool {
        a.subset_of(b)
    }

    fn principal(&self, e: &Vec<i64>) -> MonIdeal {
        MonIdeal {
            k: self.k,
            gens: vec![e.clone()],
        }
    }

    fn scale(&self, e: &Vec<i64>, a: &MonIdeal) -> MonIdeal {
        a.translate(e)
    }

    fn minimal_generators(&self, a: &MonIdeal) -> Vec<Vec<i64>> {
        a.gens.clone()
    }

    fn generated(&self, gens: &[Vec<i64>]) -> Result<MonIdeal> {
        MonIdeal::new(self.k, gens.to_vec())
    }

    fn normalize(&self, a: &MonIdeal) -> Option<(Vec<i64>, MonIdeal)> {
        let f = a.floor();
        let neg: Vec<i64> = f.iter().map(|x| -x).collect();
        Some((f, a.translate(&neg)))
    }

    fn w_closure(&self, a: &MonIdeal) -> MonIdeal {
        // the maximal t-ideals are the coordinate principals ⟨e_i⟩;
        // localizing frees every other coordinate, so the intersection is the
        // principal ideal at the componentwise minimum, which equals A^v
        self.principal(&a.floor())
    }

    fn cic_is_self(&self) -> bool {
        true
    }

    fn cic_description(&self) -> String {
        "the monoid itself (factorial, hence completely integrally closed)".into()
    }

    fn is_principal(&self, a: &MonIdeal) -> bool {
        a.gens.len() == 1
    }

    fn element_window(&self) -> Vec<Vec<i64>> {
        // monoid elements with entries in [0, 2]
        let mut out = vec![vec![]];
        for _ in 0..self.k {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..=2).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn sample_ideal(&self, rng: &mut SplitMix64, bounds: &SampleBounds) -> MonIdeal {
        let count = rng.range_usize(1, bounds.max_gens.max(1));
        let gens: Vec<Vec<i64>> = (0..count)
            .map(|_| {
                (0..self.k)
                    .map(|_| rng.range_i64(-bounds.height, bounds.height))
                    .collect()
            })
            .collect();
        MonIdeal::minimalized(self.k, gens)
    }

    fn seed_ideals(&self) -> Vec<MonIdeal> {
        let mut out = vec![self.unit()];
        if self.k >= 2 {
            let mut e1 = vec![0i64; self.k];
            e1[0] = 1;
            let mut e2 = vec![0i64; self.k];
            e2[1] = 1;
            out.push(self.principal(&e1));
            out.push(self.principal(&e2));
            out.push(MonIdeal::minimalized(self.k, vec![e1.clone(), e2.clone()]));
            let ones: Vec<i64> = e1.iter().zip(&e2).map(|(a, b)| a + b).collect();
            out.push(self.principal(&ones));
        }
        out
    }

    fn ideal_literal(&self, a: &MonIdeal) -> String {
        a.literal()
    }

    fn parse_ideal(&self, s: &str) -> Result<MonIdeal> {
        let mut gens = Vec::new();
        for part in s.split('|') {
            let part = part.trim();
            let inner = part
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("expected (a,b,...) got {part:?}")))?;
            gens.push(crate::numsg::parse_int_list(inner)?);
        }
        MonIdeal::new(self.k, gens)
    }

    fn elem_literal(&self, e: &Vec<i64>) -> String {
        let coords: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        format!("({})", coords.join(","))
    }

    fn parse_elem(&self, s: &str) -> Result<Vec<i64>> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|p| p.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (a,b,...) got {s:?}")))?;
        let v = crate::numsg::parse_int_list(inner)?;
        if v.len() != self.k {
            return Err(Error::DimensionMismatch(v.len(), self.k));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2() -> Mon {
        Mon::new(2).unwrap()
    }

    fn ideal(sys: &Mon, gens: &[&[i64]]) -> MonIdeal {
        MonIdeal::new(sys.k, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn antichain_minimality() {
        let sys = m2();
        let a = ideal(&sys, &[&[1, 0], &[2, 1], &[0, 1], &[1, 1]]);
        assert_eq!(a.generators(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn ops_examples() {
        let sys = m2();
        let unit = sys.unit();
        let e1 = ideal(&sys, &[&[1, 0]]);
        let e2 = ideal(&sys, &[&[0, 1]]);
        let both = ideal(&sys, &[&[1, 0], &[0, 1]]);

        assert_eq!(sys.product(&both, &unit), both);
        assert_eq!(sys.product(&e1, &e2), ideal(&sys, &[&[1, 1]]));
        // (X,Y) ∩ (X) = (X) is principal while (X,Y) is not d-invertible
        assert_eq!(sys.intersect(&both, &e1), e1);
        assert!(!crate::star::is_star_invertible(
            &sys,
            &crate::star::StarOperation::identity(&sys),
            &both
        ));
        assert_eq!(sys.sum(&e1, &e2), both);
    }

    #[test]
    fn colon_examples_and_oracle() {
        let sys = m2();
        let unit = sys.unit();
        let both = ideal(&sys, &[&[1, 0], &[0, 1]]);
        assert_eq!(sys.colon(&both, &unit), both);
        // colon(⟨0⟩, ⟨e1,e2⟩) = unit via componentwise maxima: (-1,0)∨(0,-1) = (0,0)
        assert_eq!(sys.colon(&unit, &both), unit);
        assert_eq!(
            sys.colon(&ideal(&sys, &[&[2, 0]]), &ideal(&sys, &[&[1, 0]])),
            ideal(&sys, &[&[1, 0]])
        );
        // membership oracle on a grid: x ∈ (A : B) iff x + B ⊆ A
        let a = ideal(&sys, &[&[2, 1], &[1, 3]]);
        let b = ideal(&sys, &[&[1, 0], &[0, 2]]);
        let q = sys.colon(&a, &b);
        for x in -4..4 {
            for y in -4..4 {
                let v = vec![x, y];
                let inside = b
                    .generators()
                    .iter()
                    .all(|g| a.contains(&[x + g[0], y + g[1]]));
                assert_eq!(q.contains(&v), inside, "colon grid oracle at ({x},{y})");
            }
        }
    }

    #[test]
    fn v_closure_is_floor_principal() {
        let sys = m2();
        let cases = [
            ideal(&sys, &[&[1, 0], &[0, 1]]),
            ideal(&sys, &[&[2, 1], &[1, 2]]),
            ideal(&sys, &[&[3, -1], &[-2, 4], &[0, 0]]),
        ];
        for a in cases {
            let v = crate::star::v_closure(&sys, &a);
            assert_eq!(v, sys.principal(&a.floor()), "structural v for {a:?}");
            assert_eq!(sys.w_closure(&a), v);
            assert_eq!(crate::star::t_closure(&sys, &a).unwrap(), v);
        }
        let p = ideal(&sys, &[&[4, 7]]);
        assert_eq!(crate::star::v_closure(&sys, &p), p);
    }

    #[test]
    fn sampling_is_deterministic_and_t_invertible() {
        let sys = m2();
        let bounds = SampleBounds {
            height: 5,
            max_gens: 5,
        };
        let mut r1 = SplitMix64::new(9);
        let mut r2 = SplitMix64::new(9);
        let t = crate::star::StarOperation::t_operation(&sys);
        for _ in 0..100 {
            let a = sys.sample_ideal(&mut r1, &bounds);
            let b = sys.sample_ideal(&mut r2, &bounds);
            assert_eq!(a, b);
            assert!(crate::star::is_star_invertible(&sys, &t, &a));
        }
    }

    #[test]
    fn dimension_mismatch_error() {
        let a = MonIdeal::new(2, vec![vec![0, 0]]).unwrap();
        let b = MonIdeal::new(3, vec![vec![0, 0, 0]]).unwrap();
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn literal_roundtrip() {
        let sys = m2();
        let a = ideal(&sys, &[&[1, -2], &[-1, 3]]);
        assert_eq!(sys.parse_ideal(&sys.ideal_literal(&a)).unwrap(), a);
    }
}
