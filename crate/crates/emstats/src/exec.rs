//! Execution strategy for the data-parallel summations at the heart of
//! identity verification: map a pure function over a list of items and fold
//! the results with an associative merge.
//!
//! Both strategies are always compiled so benchmarks can compare them; the
//! `parallel` cargo feature gates the rayon dependency and therefore whether
//! `ExecMode::Parallel` is available. `ExecMode::default()` picks the fastest
//! mode the build supports.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Which engine drives a map-reduce over group elements / cones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    /// Plain sequential fold. Always available.
    Sequential,
    /// Rayon work-stealing fold. Requires the `parallel` feature.
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            ExecMode::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            ExecMode::Sequential
        }
    }
}

/// Map `f` over `items` and fold the images with `merge`, starting from
/// `identity()`. `merge` must be associative and `identity()` its neutral
/// element; with those guarantees both modes produce identical results.
pub fn map_reduce<I, R, F, M, E>(mode: ExecMode, items: Vec<I>, f: F, identity: E, merge: M) -> R
where
    I: Send + Sync,
    R: Send,
    F: Fn(&I) -> R + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
    E: Fn() -> R + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(|i| f(i)).fold(identity(), merge),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => items
            .par_iter()
            .map(|i| f(i))
            .reduce_with(&merge)
            .unwrap_or_else(identity),
    }
}
