//! Execution strategy for the data-parallel sweeps (subset enumeration,
//! finite-field point counting, per-flat freeness tests).
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool; without it every strategy runs sequentially. Results are
//! exact integer or rational sums, so they never depend on the schedule.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Folds `fold` over `range` into per-worker accumulators created by
/// `identity`, then combines them with `combine`.
pub fn fold_range<T, I, F, C>(
    exec: Execution,
    range: Range<u64>,
    identity: I,
    fold: F,
    combine: C,
) -> T
where
    T: Send,
    I: Fn() -> T + Send + Sync,
    F: Fn(T, u64) -> T + Send + Sync,
    C: Fn(T, T) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return range
            .into_par_iter()
            .fold(&identity, &fold)
            .reduce(&identity, &combine);
    }
    let _ = (&combine, exec);
    range.fold(identity(), fold)
}

/// Maps `f` over `items`, preserving order.
pub fn map_vec<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}
