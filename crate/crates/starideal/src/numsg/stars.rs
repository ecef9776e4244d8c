//! Enumeration of all star operations on a numerical semigroup.
//!
//! A star operation is determined by its table on normalized ideals: the map
//! must fix S, satisfy E ⊆ c(E) ⊆ E^v, and be monotone and idempotent on the
//! normalized-ideal poset; it extends to all fractional ideals by translation.
//! Such tables are in bijection with the intersection-closed families of
//! normalized ideals that contain every divisorial ideal (the fixed-point
//! family determines the map: c(E) is the smallest closed ideal containing E,
//! which is unique because the family is intersection-closed and E^v is always
//! closed). Enumeration therefore backtracks over subsets of the
//! non-divisorial ideals, processing them in an order where supersets come
//! first so that including an ideal can only force intersections that are
//! still undecided.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::sync::Arc;

use super::{Sg, SgIdeal};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::star::{StarOperation, TableData};
use crate::system::IdealSystem;

/// Precomputed normalized-ideal data shared by enumeration and fast suite
/// evaluation.
pub struct StarContext {
    pub sys: Sg,
    pub ideals: Arc<Vec<SgIdeal>>,
    pub index: Arc<HashMap<SgIdeal, usize>>,
    /// idx of E^v per ideal.
    pub v_of: Vec<usize>,
    pub divisorial: Vec<bool>,
    /// Flattened intersection table: `inter[i * n + j]` = idx of ideals[i] ∩ ideals[j].
    inter: Vec<u32>,
    /// Per ideal, its supersets ordered by (size, window); the first closed
    /// entry is the closure.
    supersets: Vec<Vec<u32>>,
    /// Non-divisorial indices, supersets first.
    order: Vec<u32>,
}

impl StarContext {
    pub fn new(sys: &Sg) -> Result<StarContext> {
        let ideals = sys
            .enumerate_normalized()
            .ok_or_else(|| Error::ExhaustiveUnsupported(sys.name()))?;
        let n = ideals.len();
        let mut index = HashMap::with_capacity(n);
        for (i, e) in ideals.iter().enumerate() {
            index.insert(e.clone(), i);
        }
        let mut v_of = Vec::with_capacity(n);
        for e in &ideals {
            let v = e.v_closure();
            debug_assert_eq!(v.offset(), 0, "v-closure of a normalized ideal is normalized");
            let vi = *index
                .get(&v)
                .ok_or_else(|| Error::Internal("v-closure missing from enumeration".into()))?;
            v_of.push(vi);
        }
        let divisorial: Vec<bool> = (0..n).map(|i| v_of[i] == i).collect();
        let mut inter = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..=i {
                let m = ideals[i].intersect(&ideals[j]).expect("same owner");
                let k = *index
                    .get(&m)
                    .ok_or_else(|| Error::Internal("intersection missing from enumeration".into()))?
                    as u32;
                inter[i * n + j] = k;
                inter[j * n + i] = k;
            }
        }
        let mut supersets: Vec<Vec<u32>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut sup: Vec<u32> = (0..n)
                .filter(|&j| ideals[i].window().subset_of(ideals[j].window()))
                .map(|j| j as u32)
                .collect();
            sup.sort_by_key(|&j| {
                (
                    ideals[j as usize].window().count_ones(),
                    ideals[j as usize].window().clone(),
                )
            });
            supersets.push(sup);
        }
        let mut order: Vec<u32> = (0..n as u32).filter(|&i| !divisorial[i as usize]).collect();
        order.sort_by_key(|&i| {
            std::cmp::Reverse((
                ideals[i as usize].window().count_ones(),
                ideals[i as usize].window().clone(),
            ))
        });
        Ok(StarContext {
            sys: sys.clone(),
            ideals: Arc::new(ideals),
            index: Arc::new(index),
            v_of,
            divisorial,
            inter,
            supersets,
            order,
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    #[inline]
    pub fn inter_idx(&self, i: usize, j: usize) -> usize {
        self.inter[i * self.ideals.len() + j] as usize
    }

    /// Closure table for one intersection-closed family.
    fn table_of(&self, closed: &Bits) -> Vec<u32> {
        let mut map = Vec::with_capacity(self.ideals.len());
        for sup in &self.supersets {
            let c = sup
                .iter()
                .copied()
                .find(|&j| self.divisorial[j as usize] || closed.get(j as usize))
                .expect("E^v is always closed");
            map.push(c);
        }
        map
    }

    /// Streams every star operation as a closure table (`map[i]` = index of
    /// the closure of `ideals[i]`). Tables arrive in a fixed deterministic
    /// order. Returns the number visited, or an error when `budget` is
    /// exceeded.
    pub fn for_each_table(
        &self,
        budget: usize,
        mut visit: impl FnMut(&[u32]) -> ControlFlow<()>,
    ) -> Result<usize> {
        let n = self.ideals.len();
        let mut closed = Bits::new(n);
        let mut forced = Bits::new(n);
        let mut count = 0usize;
        let mut stopped = false;
        let exceeded = self.dfs(
            0,
            &mut closed,
            &mut forced,
            &mut count,
            budget,
            &mut stopped,
            &mut visit,
        );
        if exceeded {
            return Err(Error::EnumerationTooLarge {
                found: count,
                budget,
            });
        }
        Ok(count)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        i: usize,
        closed: &mut Bits,
        forced: &mut Bits,
        count: &mut usize,
        budget: usize,
        stopped: &mut bool,
        visit: &mut impl FnMut(&[u32]) -> ControlFlow<()>,
    ) -> bool {
        if *stopped {
            return false;
        }
        if i == self.order.len() {
            if *count == budget {
                return true;
            }
            *count += 1;
            if visit(&self.table_of(closed)).is_break() {
                *stopped = true;
            }
            return false;
        }
        let e = self.order[i] as usize;
        if !forced.get(e) {
            // exclude e
            if self.dfs(i + 1, closed, forced, count, budget, stopped, visit) {
                return true;
            }
            if *stopped {
                return false;
            }
        }
        // include e: intersections with every member of the closed family
        // (divisorial ideals included) become forced; each is strictly
        // smaller than e, hence still undecided
        closed.set(e, true);
        let mut newly_forced = Vec::new();
        for x in 0..self.ideals.len() {
            if !(self.divisorial[x] || closed.get(x)) {
                continue;
            }
            let y = self.inter_idx(e, x);
            if !self.divisorial[y] && !closed.get(y) && !forced.get(y) {
                forced.set(y, true);
                newly_forced.push(y);
            }
        }
        let exceeded = self.dfs(i + 1, closed, forced, count, budget, stopped, visit);
        closed.set(e, false);
        for y in newly_forced {
            forced.set(y, false);
        }
        exceeded
    }

    /// Number of star operations, within `budget`.
    pub fn count(&self, budget: usize) -> Result<usize> {
        self.for_each_table(budget, |_| ControlFlow::Continue(()))
    }

    pub fn star_from_table(&self, map: Vec<u32>, name: String) -> StarOperation<Sg> {
        let data = TableData {
            ideals: Arc::clone(&self.ideals),
            index: Arc::clone(&self.index),
            map,
        };
        StarOperation::table_on(&self.sys, name, data)
    }
}

/// Materializes every star operation on `sys`, in enumeration order.
/// The identity and the divisorial closure always occur among them.
pub fn enumerate_star_operations(sys: &Sg, budget: usize) -> Result<Vec<StarOperation<Sg>>> {
    let ctx = StarContext::new(sys)?;
    let mut out = Vec::new();
    ctx.for_each_table(budget, |map| {
        let name = format!("table#{}", out.len());
        out.push(ctx.star_from_table(map.to_vec(), name));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Independent reference enumeration used by the test suites: builds every
/// map `c` with E ⊆ c(E) ⊆ E^v directly as a product over candidate
/// intervals and filters by monotonicity and idempotence. Exponential; only
/// for small semigroups. Returns `None` when the raw product exceeds `cap`.
pub fn reference_count(sys: &Sg, cap: u64) -> Option<u64> {
    let ideals = sys.enumerate_normalized()?;
    let n = ideals.len();
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for e in &ideals {
        let v = e.v_closure();
        let c: Vec<usize> = ideals
            .iter()
            .enumerate()
            .filter(|(_, x)| e.subset_of(x) && x.subset_of(&v))
            .map(|(i, _)| i)
            .collect();
        candidates.push(c);
    }
    let mut product = 1u64;
    for c in &candidates {
        product = product.checked_mul(c.len() as u64)?;
        if product > cap {
            return None;
        }
    }
    let mut count = 0u64;
    let mut choice = vec![0usize; n];
    'outer: loop {
        let map: Vec<usize> = (0..n).map(|i| candidates[i][choice[i]]).collect();
        let monotone = (0..n).all(|i| {
            (0..n).all(|j| {
                !ideals[i].subset_of(&ideals[j]) || ideals[map[i]].subset_of(&ideals[map[j]])
            })
        });
        if monotone && (0..n).all(|i| map[map[i]] == map[i]) {
            count += 1;
        }
        // odometer
        for i in 0..n {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    Some(count)
}
