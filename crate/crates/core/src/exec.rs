//! Switch between rayon data parallelism and a sequential fallback.
//!
//! With the `parallel` feature disabled every helper runs sequentially and
//! [`set_parallel`] has no effect. Reductions combine values with an
//! associative, commutative operation on canonical forms, so results are
//! identical in both modes.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(cfg!(feature = "parallel"));

pub fn set_parallel(on: bool) {
    PARALLEL.store(on && cfg!(feature = "parallel"), Ordering::Relaxed);
}

pub fn is_parallel() -> bool {
    PARALLEL.load(Ordering::Relaxed)
}

/// Caps the global rayon pool. Only the first call takes effect.
pub fn set_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
}

/// `items.map(f)` reduced with `combine`, starting from `identity()`.
pub fn map_reduce<T, R, F, I, C>(items: Vec<T>, f: F, identity: I, combine: C) -> R
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).reduce(identity, combine);
    }
    items.into_iter().map(f).fold(identity(), combine)
}

/// Fallible variant of [`map_reduce`]. In parallel mode which error is
/// reported is unspecified when several items fail.
pub fn try_map_reduce<T, R, E, F, I, C>(items: Vec<T>, f: F, identity: I, combine: C) -> Result<R, E>
where
    T: Send,
    R: Send,
    E: Send,
    F: Fn(T) -> Result<R, E> + Sync + Send,
    I: Fn() -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items
            .into_par_iter()
            .map(f)
            .try_reduce(identity, |a, b| Ok(combine(a, b)));
    }
    let mut acc = identity();
    for t in items {
        acc = combine(acc, f(t)?);
    }
    Ok(acc)
}

/// Order-preserving map.
pub fn map_vec<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if is_parallel() && items.len() > 1 {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    items.into_iter().map(f).collect()
}
