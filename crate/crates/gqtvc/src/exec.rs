//! Thread pool and wall-clock budget for the core's execution hooks.

use std::time::{Duration, Instant};

use gqtvc_core::exec::{Budget, Executor};
use rayon::prelude::*;

pub struct Pool {
    pool: rayon::ThreadPool,
}

impl Pool {
    /// `threads == 0` picks the number of available cores.
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        Ok(Pool { pool: rayon::ThreadPoolBuilder::new().num_threads(threads).build()? })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Pool {
    fn execute(&self, jobs: usize, job: &(dyn Fn(usize) + Sync)) {
        self.pool.install(|| (0..jobs).into_par_iter().for_each(job));
    }
}

/// Exhausted once the deadline has passed.
pub struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub fn after(limit: Option<Duration>) -> Self {
        Deadline { at: limit.map(|d| Instant::now() + d) }
    }
}

impl Budget for Deadline {
    fn exhausted(&self) -> bool {
        self.at.is_some_and(|at| Instant::now() >= at)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn pool_runs_every_job_once() {
        let pool = Pool::new(3).unwrap();
        assert_eq!(pool.threads(), 3);
        let hits: Vec<AtomicUsize> = (0..100).map(|_| AtomicUsize::new(0)).collect();
        pool.execute(100, &|i| {
            hits[i].fetch_add(1, Ordering::Relaxed);
        });
        assert!(hits.iter().all(|h| h.load(Ordering::Relaxed) == 1));
    }

    #[test]
    fn deadline() {
        assert!(!Deadline::after(None).exhausted());
        assert!(Deadline::after(Some(Duration::ZERO)).exhausted());
        assert!(!Deadline::after(Some(Duration::from_secs(3600))).exhausted());
    }
}
