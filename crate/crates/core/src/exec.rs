//! Execution hooks: how independent jobs are run and when a scan must stop.
//!
//! The core never spawns threads or reads a clock. Callers hand in an
//! [`Executor`] (the companion crate provides a thread pool) and a
//! [`Budget`] (the companion crate provides a wall-clock deadline).
//! Every scan built on these hooks produces the same verdict whatever the
//! executor, because results are merged by pair index rather than by
//! completion order.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

/// Runs `jobs` independent jobs, each identified by its index.
pub trait Executor: Sync {
    fn execute(&self, jobs: usize, job: &(dyn Fn(usize) + Sync));
}

/// Runs jobs one after another on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn execute(&self, jobs: usize, job: &(dyn Fn(usize) + Sync)) {
        for i in 0..jobs {
            job(i);
        }
    }
}

/// Cooperative stop signal polled by long scans.
pub trait Budget: Sync {
    fn exhausted(&self) -> bool;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

/// Allows a fixed number of polls, then reports exhaustion. Handy for
/// exercising the inconclusive path deterministically.
#[derive(Debug)]
pub struct PollBudget {
    remaining: AtomicU64,
}

impl PollBudget {
    pub fn new(polls: u64) -> Self {
        PollBudget { remaining: AtomicU64::new(polls) }
    }
}

impl Budget for PollBudget {
    fn exhausted(&self) -> bool {
        self.remaining.fetch_update(Ordering::Relaxed, Ordering::Relaxed, |r| r.checked_sub(1)).is_err()
    }
}

/// Executor and budget travelling together through a computation.
#[derive(Clone, Copy)]
pub struct Ctx<'a> {
    pub exec: &'a dyn Executor,
    pub budget: &'a dyn Budget,
}

impl Ctx<'static> {
    pub fn sequential() -> Self {
        Ctx { exec: &Sequential, budget: &Unlimited }
    }
}

/// Pairs handled by one job.
pub(crate) const CHUNK: usize = 16;

/// Outcome of streaming a per-pair value and comparing it to a reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Scan {
    /// Every pair matched the reference.
    Uniform,
    /// Index of the first pair whose value differs from the reference.
    Mismatch(usize),
    /// The budget ran out before a mismatch was found.
    Exhausted,
}

/// Compares `eval(i)` with `reference` for `i` in `start..len`, stopping at
/// the first mismatch. The reported index is the smallest mismatching index
/// regardless of how jobs are scheduled, unless the budget intervenes.
pub(crate) fn scan_uniform<V, F>(ctx: Ctx<'_>, start: usize, len: usize, reference: &V, eval: F) -> Scan
where
    V: PartialEq + Sync,
    F: Fn(usize) -> V + Sync,
{
    if start >= len {
        return Scan::Uniform;
    }
    let best = AtomicUsize::new(usize::MAX);
    let ran_out = AtomicBool::new(false);
    let jobs = (len - start).div_ceil(CHUNK);
    ctx.exec.execute(jobs, &|job| {
        let lo = start + job * CHUNK;
        let hi = (lo + CHUNK).min(len);
        for i in lo..hi {
            if best.load(Ordering::Relaxed) < i {
                return;
            }
            if ctx.budget.exhausted() {
                ran_out.store(true, Ordering::Relaxed);
                return;
            }
            if eval(i) != *reference {
                best.fetch_min(i, Ordering::Relaxed);
                return;
            }
        }
    });
    match best.load(Ordering::Relaxed) {
        usize::MAX if ran_out.load(Ordering::Relaxed) => Scan::Exhausted,
        usize::MAX => Scan::Uniform,
        i => Scan::Mismatch(i),
    }
}

/// Evaluates `eval(i)` for every `i < len` into an index-ordered vector.
/// Returns `None` if the budget ran out first.
pub(crate) fn map_indexed<F>(ctx: Ctx<'_>, len: usize, eval: F) -> Option<Vec<u64>>
where
    F: Fn(usize) -> u64 + Sync,
{
    let out: Vec<AtomicU64> = (0..len).map(|_| AtomicU64::new(0)).collect();
    let ran_out = AtomicBool::new(false);
    ctx.exec.execute(len.div_ceil(CHUNK), &|job| {
        let lo = job * CHUNK;
        for (i, slot) in out.iter().enumerate().take((lo + CHUNK).min(len)).skip(lo) {
            if ran_out.load(Ordering::Relaxed) || ctx.budget.exhausted() {
                ran_out.store(true, Ordering::Relaxed);
                return;
            }
            slot.store(eval(i), Ordering::Relaxed);
        }
    });
    if ran_out.load(Ordering::Relaxed) {
        return None;
    }
    Some(out.into_iter().map(AtomicU64::into_inner).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Runs jobs in reverse order to stand in for an adversarial scheduler.
    struct Reversed;

    impl Executor for Reversed {
        fn execute(&self, jobs: usize, job: &(dyn Fn(usize) + Sync)) {
            for i in (0..jobs).rev() {
                job(i);
            }
        }
    }

    #[test]
    fn mismatch_index_is_schedule_independent() {
        let values: Vec<u32> = (0..200).map(|i| if i == 37 || i == 150 { 1 } else { 0 }).collect();
        for exec in [&Sequential as &dyn Executor, &Reversed] {
            let ctx = Ctx { exec, budget: &Unlimited };
            assert_eq!(scan_uniform(ctx, 1, values.len(), &0, |i| values[i]), Scan::Mismatch(37));
        }
    }

    #[test]
    fn poll_budget_exhausts() {
        let budget = PollBudget::new(5);
        let ctx = Ctx { exec: &Sequential, budget: &budget };
        assert_eq!(scan_uniform(ctx, 0, 100, &0u32, |_| 0), Scan::Exhausted);
        let budget = PollBudget::new(5);
        let ctx = Ctx { exec: &Sequential, budget: &budget };
        assert!(map_indexed(ctx, 100, |i| i as u64).is_none());
        assert_eq!(map_indexed(Ctx::sequential(), 4, |i| i as u64 * 2), Some(alloc::vec![0, 2, 4, 6]));
    }
}
