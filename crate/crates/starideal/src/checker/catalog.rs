//! Enumeration of small numerical semigroups by multiplicity and genus.

use crate::error::Result;
use crate::numsg::Sg;

/// All numerical semigroups with multiplicity ≤ `max_mult` and genus ≤
/// `max_genus`, as generator lists. A semigroup of genus g has Frobenius
/// number at most 2g − 1, so scanning gap subsets of [1, 2·max_genus − 1]
/// is complete.
pub fn semigroups_by_bounds(max_mult: u64, max_genus: usize) -> Vec<Vec<u64>> {
    let top: u64 = if max_genus == 0 { 0 } else { 2 * max_genus as u64 - 1 };
    let mut out = vec![vec![1u64]];
    for mask in 1u64..(1u64 << top) {
        if (mask.count_ones() as usize) > max_genus {
            continue;
        }
        // gap n ⟺ bit n−1 of mask; everything above `top` is a member
        let in_s = |n: u64| -> bool { n == 0 || n > top || mask >> (n - 1) & 1 == 0 };
        let mult = (1..).find(|&n| in_s(n)).unwrap();
        if mult > max_mult {
            continue;
        }
        // sums above `top` are members automatically
        let closed = (1..=top)
            .filter(|&a| in_s(a))
            .all(|a| (a..=top - a).all(|b| !in_s(b) || in_s(a + b)));
        if !closed {
            continue;
        }
        // every minimal generator is at most Frobenius + multiplicity
        let gens: Vec<u64> = (1..=top + mult).filter(|&n| in_s(n)).collect();
        out.push(gens);
    }
    out.sort();
    out.dedup();
    out
}

/// Builds the systems for [`semigroups_by_bounds`].
pub fn catalog(max_mult: u64, max_genus: usize) -> Result<Vec<Sg>> {
    semigroups_by_bounds(max_mult, max_genus)
        .into_iter()
        .map(|gens| Sg::new(&gens))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_by_genus() {
        // number of numerical semigroups of genus 0..6 is 1,1,2,4,7,12,23
        let per_genus = |g: usize| {
            catalog(1 << 20, g)
                .unwrap()
                .iter()
                .filter(|s| s.semigroup().genus() == g)
                .count()
        };
        assert_eq!(per_genus(0), 1);
        assert_eq!(per_genus(1), 1);
        assert_eq!(per_genus(2), 2);
        assert_eq!(per_genus(3), 4);
        assert_eq!(per_genus(4), 7);
        assert_eq!(per_genus(5), 12);
        assert_eq!(per_genus(6), 23);
    }

    #[test]
    fn multiplicity_filter() {
        for sys in catalog(6, 8).unwrap() {
            assert!(sys.semigroup().multiplicity() <= 6);
            assert!(sys.semigroup().genus() <= 8);
        }
    }
}

#[cfg(test)]
mod census {
    use super::*;
    use crate::numsg::stars::StarContext;
    use crate::system::IdealSystem;
    use std::time::Instant;

    #[test]
    #[ignore = "measurement aid, run explicitly"]
    fn star_count_census() {
        let budget = 2_000_000usize;
        let systems = catalog(6, 8).unwrap();
        println!("corpus size: {}", systems.len());
        let mut total = 0u64;
        let mut capped = Vec::new();
        let mut buckets = [0usize; 6]; // <=100, <=10k, <=100k, <=2M, over, -
        let start = Instant::now();
        for sys in &systems {
            let ctx = StarContext::new(sys).unwrap();
            match ctx.count(budget) {
                Ok(count) => {
                    total += count as u64;
                    let b = if count <= 100 {
                        0
                    } else if count <= 10_000 {
                        1
                    } else if count <= 100_000 {
                        2
                    } else {
                        3
                    };
                    buckets[b] += 1;
                    if count > 100_000 {
                        println!("{:<24} ideals={:<5} stars={}", sys.name(), ctx.len(), count);
                    }
                }
                Err(_) => {
                    buckets[4] += 1;
                    capped.push(sys.name());
                    println!("{:<24} ideals={:<5} stars>budget", sys.name(), ctx.len());
                }
            }
        }
        println!(
            "total (within budget): {total}; buckets <=100:{} <=10k:{} <=100k:{} <=2M:{} over:{}",
            buckets[0], buckets[1], buckets[2], buckets[3], buckets[4]
        );
        println!("over budget: {capped:?}");
        println!("elapsed {:?}", start.elapsed());
    }
}
