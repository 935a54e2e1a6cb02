//! Deterministic work distribution for the verification campaigns.
//!
//! With the `parallel` feature the items are mapped on a rayon pool and the
//! results collected back in input order, so any worker count produces the
//! same output as the sequential fallback. `jobs == 1` always takes the
//! sequential path; `jobs == 0` means one worker per available core.

#[cfg(feature = "parallel")]
pub(crate) fn map_ordered<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if jobs == 1 || items.len() <= 1 {
        return items.iter().map(f).collect();
    }
    if jobs == 0 {
        // Auto: the shared global pool, one worker per core.
        return items.par_iter().map(f).collect();
    }
    // An explicit worker count gets its own pool; campaigns call this once
    // per order, so the construction cost is acceptable there.
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction");
    pool.install(|| items.par_iter().map(f).collect())
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_ordered<T, R, F>(items: &[T], _jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    items.iter().map(f).collect()
}
