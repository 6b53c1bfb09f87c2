//! Data-parallel map helpers.
//!
//! Every hot loop in the crate (grid residuals, discrete fractional
//! derivatives, per-node memory sums) is an independent map over an index
//! range. `map_indexed` dispatches to rayon when the `parallel` feature is
//! enabled and to a plain loop otherwise. Results are collected in index
//! order, so output is bitwise identical under both backends and any thread
//! schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sequential map over `0..n`, collecting in order.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Parallel map over `0..n`; indexed collect keeps deterministic order.
#[cfg(feature = "parallel")]
pub fn map_indexed_par<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Map over `0..n` with the backend selected by the `parallel` feature.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_indexed_par(n, f)
}

/// Map over `0..n` with the backend selected by the `parallel` feature.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    map_indexed_seq(n, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indexed_matches_sequential() {
        let f = |i: usize| (i as f64).sin() * (i as f64 + 1.0).ln();
        let a = map_indexed(257, f);
        let b = map_indexed_seq(257, f);
        assert_eq!(a, b); // bitwise
    }
}
