//! Data-parallel helpers with a sequential fallback.
//!
//! The heavy inner loops (labeling enumeration, batch identity checks) are
//! embarrassingly parallel, but results must not depend on scheduling. Every
//! helper here therefore preserves input order (or the caller sorts), and the
//! sequential build — `--no-default-features` — runs the exact same closures
//! over plain iterators.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the inputs, preserving order.
pub fn map_collect<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Sequential twin of [`map_collect`], always single-threaded. Exists so the
/// benchmark suite can compare the two code paths in one binary.
pub fn map_collect_seq<I, O, F>(items: Vec<I>, f: F) -> Vec<O>
where
    F: Fn(I) -> O,
{
    items.into_iter().map(f).collect()
}

/// Maps `f` over an index range and keeps the `Some` results, in index order.
pub fn filter_map_range<O, F>(range: std::ops::Range<u64>, f: F) -> Vec<O>
where
    O: Send,
    F: Fn(u64) -> Option<O> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().filter_map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        range.filter_map(f).collect()
    }
}

/// Sequential twin of [`filter_map_range`].
pub fn filter_map_range_seq<O, F>(range: std::ops::Range<u64>, f: F) -> Vec<O>
where
    F: Fn(u64) -> Option<O>,
{
    range.filter_map(f).collect()
}
