//! Index-parallel map with a sequential fallback.
//!
//! With the `parallel` feature, work is spread over rayon's pool (or a
//! dedicated pool of `jobs` threads); without it every call runs on the
//! current thread. Results always come back in index order.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
    /// Parallel on a pool of exactly this many threads.
    Threads(usize),
}

pub fn is_parallel_available() -> bool {
    cfg!(feature = "parallel")
}

pub fn map_range<U, F>(range: Range<usize>, exec: Execution, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match exec {
        Execution::Sequential => range.map(f).collect(),
        Execution::Parallel => parallel(range, f),
        Execution::Threads(jobs) => with_threads(jobs, || parallel(range, f)),
    }
}

#[cfg(feature = "parallel")]
fn parallel<U, F>(range: Range<usize>, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    range.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel<U, F>(range: Range<usize>, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    range.map(f).collect()
}

#[cfg(feature = "parallel")]
fn with_threads<R: Send>(jobs: usize, op: impl FnOnce() -> R + Send) -> R {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<R>(_jobs: usize, op: impl FnOnce() -> R) -> R {
    op()
}
