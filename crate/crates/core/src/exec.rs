//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over a rayon pool;
//! without it every [`Execution`] runs sequentially. Results always come back
//! in input order, so callers merge deterministically.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// `jobs: None` uses rayon's global pool.
    Parallel {
        jobs: Option<usize>,
    },
}

impl Default for Execution {
    fn default() -> Self {
        Execution::Parallel { jobs: None }
    }
}

impl Execution {
    pub fn with_jobs(jobs: usize) -> Self {
        if jobs <= 1 {
            Execution::Sequential
        } else {
            Execution::Parallel { jobs: Some(jobs) }
        }
    }
}

/// `items.iter().map(f).collect()`, possibly in parallel.
pub fn par_map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        Execution::Parallel { jobs } => parallel_map(jobs, items, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(jobs: Option<usize>, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match jobs {
        None => items.par_iter().map(f).collect(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(|| items.par_iter().map(f).collect()),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(_jobs: Option<usize>, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}
