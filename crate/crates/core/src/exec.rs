//! Execution strategy for the data-parallel loops (commutant enumeration,
//! randomized trial batches, exhaustive table scans).
//!
//! With the `parallel` feature disabled, [`Execution::Parallel`] silently
//! runs sequentially. Results are always merged in index order, so output
//! never depends on the schedule.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this strategy actually runs on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Keeps `f(i)` for every `i` in `range` that yields `Some`, in index order.
    pub fn filter_map_range<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().filter_map(f).collect();
        }
        range.filter_map(f).collect()
    }

    /// `f(0), ..., f(n-1)` in index order.
    pub fn map_indices<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// The lowest index for which `f` yields `Some`, with its value.
    pub fn find_first<T, F>(self, n: usize, f: F) -> Option<(usize, T)>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n)
                .into_par_iter()
                .filter_map(|i| f(i).map(|v| (i, v)))
                .min_by_key(|(i, _)| *i);
        }
        (0..n).find_map(|i| f(i).map(|v| (i, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let evens = exec.filter_map_range(0..100, |i| (i % 2 == 0).then_some(i));
            assert_eq!(evens, (0..100).step_by(2).collect::<Vec<_>>());
            assert_eq!(exec.map_indices(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(exec.find_first(100, |i| (i > 40 && i % 7 == 0).then_some(i)), Some((42, 42)));
            assert_eq!(exec.find_first(10, |_| None::<()>), None);
        }
    }
}
