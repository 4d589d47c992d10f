//! Data-parallel index map with a sequential fallback. Everything heavy in
//! this crate (curve fan-out, oracle stage sweeps) funnels through
//! [`map_collect`], so toggling the `parallel` feature swaps the execution
//! strategy in one place without touching call sites.

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..count).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let squares = map_collect(1000, |i| i * i);
        assert_eq!(squares.len(), 1000);
        for (i, sq) in squares.iter().enumerate() {
            assert_eq!(*sq, i * i);
        }
    }
}
