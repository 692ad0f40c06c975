//! Data-parallel helpers. With the `parallel` feature these fan out over the
//! rayon pool; without it they run the same closures sequentially. Output
//! order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Smallest input index for which `f` yields a value, with that value.
#[cfg(feature = "parallel")]
pub fn find_first<T, R, F>(items: &[T], f: F) -> Option<(usize, R)>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    items
        .par_iter()
        .enumerate()
        .filter_map(|(k, t)| f(t).map(|r| (k, r)))
        .min_by_key(|(k, _)| *k)
}

#[cfg(not(feature = "parallel"))]
pub fn find_first<T, R, F>(items: &[T], f: F) -> Option<(usize, R)>
where
    F: Fn(&T) -> Option<R>,
{
    items
        .iter()
        .enumerate()
        .find_map(|(k, t)| f(t).map(|r| (k, r)))
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
