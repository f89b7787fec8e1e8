//! Data-parallel helpers. With the `parallel` feature (default) batch
//! work is spread over rayon's pool; without it, or with
//! `Exec::Sequential`, everything runs on the calling thread.

/// Execution mode for batch operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True if this mode actually runs on the rayon pool in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Maps `f` over `items` and folds the results with `merge`, starting
/// from `identity()` in every worker.
pub fn map_reduce<T, R, F, I, M>(exec: Exec, items: &[T], identity: I, f: F, merge: M) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(&f).reduce(&identity, &merge);
    }
    let _ = exec;
    items.iter().map(f).fold(identity(), merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map_collect(Exec::Sequential, &items, |x| x * x);
        let par = map_collect(Exec::Parallel, &items, |x| x * x);
        assert_eq!(seq, par);
        let s1 = map_reduce(Exec::Sequential, &items, || 0u64, |x| *x, |a, b| a + b);
        let s2 = map_reduce(Exec::Parallel, &items, || 0u64, |x| *x, |a, b| a + b);
        assert_eq!(s1, 499_500);
        assert_eq!(s1, s2);
    }
}
