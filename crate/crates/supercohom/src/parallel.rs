//! Data-parallel helpers. With the `parallel` feature the work is spread
//! over the rayon pool unless sequential mode has been selected at run
//! time; without the feature everything runs on the calling thread.

use std::sync::atomic::{AtomicBool, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    Parallel,
}

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Select the execution mode for all subsequent library calls.
pub fn set_parallelism(mode: Parallelism) {
    FORCE_SEQUENTIAL.store(mode == Parallelism::Sequential, Ordering::SeqCst);
}

/// The mode actually in effect.
pub fn parallelism() -> Parallelism {
    if cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::SeqCst) {
        Parallelism::Parallel
    } else {
        Parallelism::Sequential
    }
}

/// Map `f` over `items`, preserving order.
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallelism() == Parallelism::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

/// Map `f` over `0..n`, preserving order.
pub fn par_map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallelism() == Parallelism::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_in_both_modes() {
        let v: Vec<u64> = (0..1000).collect();
        let a = par_map(&v, |x| x * x);
        set_parallelism(Parallelism::Sequential);
        let b = par_map(&v, |x| x * x);
        set_parallelism(Parallelism::Parallel);
        assert_eq!(a, b);
        assert_eq!(par_map_range(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
    }
}
