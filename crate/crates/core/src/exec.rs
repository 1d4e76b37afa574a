//! Deterministic shard execution.
//!
//! Every bulk search in the crate maps a slice of independent work items to
//! per-item result vectors and concatenates them in item order. With the
//! `parallel` feature (default) the map runs on rayon; without it, on a plain
//! iterator. The merged output is identical in both modes and under any
//! thread count, so search results and CLI output never depend on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to drive a sharded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl ExecMode {
    /// Parallel when compiled in, sequential otherwise.
    pub fn auto() -> ExecMode {
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

impl Default for ExecMode {
    fn default() -> Self {
        ExecMode::auto()
    }
}

/// Maps `f` over `items` and flattens the per-item results in item order.
pub fn flat_map_ordered<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync,
{
    match mode {
        ExecMode::Sequential => items.iter().flat_map(|t| f(t)).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            let nested: Vec<Vec<U>> = items.par_iter().map(|t| f(t)).collect();
            nested.into_iter().flatten().collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_preserves_order() {
        let items = vec![1u32, 2, 3];
        let out = flat_map_ordered(ExecMode::Sequential, &items, |&x| vec![x, x * 10]);
        assert_eq!(out, vec![1, 10, 2, 20, 3, 30]);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let items: Vec<u64> = (0..500).collect();
        let f = |&x: &u64| (0..x % 7).map(|k| x * 1000 + k).collect::<Vec<_>>();
        let seq = flat_map_ordered(ExecMode::Sequential, &items, f);
        let par = flat_map_ordered(ExecMode::Parallel, &items, f);
        assert_eq!(seq, par);
    }
}
