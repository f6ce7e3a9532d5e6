//! Sequential or rayon-backed evaluation of independent work items.
//!
//! Results always come back in item order, so merges downstream are
//! deterministic whichever executor ran them.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Executor {
    Sequential,
    /// Uses the global rayon pool, or a dedicated pool of `threads` workers.
    /// Without the `parallel` feature this runs sequentially.
    Parallel {
        threads: Option<usize>,
    },
}

impl Default for Executor {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Executor::Parallel { threads: None }
        } else {
            Executor::Sequential
        }
    }
}

impl Executor {
    /// `threads == 1` selects the sequential path.
    pub fn with_threads(threads: Option<usize>) -> Self {
        match threads {
            Some(1) => Executor::Sequential,
            Some(0) | None => Executor::default(),
            Some(t) => Executor::Parallel { threads: Some(t) },
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Executor::Parallel { .. })
    }

    /// `(0..count).map(f)` collected in order.
    pub fn map<T, F>(&self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Executor::Sequential => (0..count).map(f).collect(),
            Executor::Parallel { threads } => parallel_map(*threads, count, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, F>(threads: Option<usize>, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    let run = || (0..count).into_par_iter().map(&f).collect();
    match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, F>(_threads: Option<usize>, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).map(f).collect()
}
