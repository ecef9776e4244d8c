//! Order-preserving parallel map over pure functions.
//!
//! All checker values are immutable and suite evaluation is pure, so work can
//! be fanned out across threads freely. `STARIDEAL_THREADS` caps the number of
//! worker threads; results come back in input order, so output is identical to
//! the sequential run regardless of schedule.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub fn max_threads() -> usize {
    let avail = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    match std::env::var("STARIDEAL_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        Some(0) | None => avail,
        Some(n) => n.min(avail.max(1)),
    }
}

pub fn parallel_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let threads = max_threads().min(items.len().max(1));
    if threads <= 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let next = AtomicUsize::new(0);
    let out: Vec<Mutex<Option<U>>> = items.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let v = f(&items[i]);
                *out[i].lock().unwrap() = Some(v);
            });
        }
    });
    out.into_iter()
        .map(|m| m.into_inner().unwrap().expect("worker completed"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let items: Vec<u64> = (0..500).collect();
        let squared = parallel_map(items.clone(), |x| x * x);
        assert_eq!(squared, items.iter().map(|x| x * x).collect::<Vec<_>>());
    }
}
