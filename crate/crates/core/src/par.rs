//! Index-parallel map used by every rule builder.
//!
//! With the `parallel` feature the work is spread over the current rayon
//! pool; without it the same closure runs sequentially. Output order is the
//! index order either way, so results do not depend on the thread count.

#[cfg(feature = "parallel")]
pub(crate) fn map_range<T, F>(start: usize, end: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (start..end).into_par_iter().with_min_len(256).map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<T, F>(start: usize, end: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (start..end).map(f).collect()
}

/// Number of worker threads the builders will use.
pub fn current_threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
