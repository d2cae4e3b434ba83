//! Batch execution policy.
//!
//! Batch operations (grid evaluation, surface sampling, per-hyperplane
//! checks) are embarrassingly parallel over immutable inputs. With the
//! `parallel` feature they run on rayon; without it, or with
//! [`Exec::Sequential`], they run on a plain iterator. Results preserve
//! input order either way, so reports are identical across policies.

/// How a batch operation distributes its work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    /// Use rayon when the `parallel` feature is enabled, otherwise sequential.
    #[default]
    Parallel,
    /// Force the sequential path.
    Sequential,
}

#[cfg(feature = "parallel")]
pub fn map_indexed<R, F>(exec: Exec, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match exec {
        Exec::Parallel => (0..len).into_par_iter().map(f).collect(),
        Exec::Sequential => (0..len).map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<R, F>(_exec: Exec, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Map over a slice, preserving order.
pub fn map_slice<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_indexed(exec, items.len(), |i| f(&items[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policies_agree_and_preserve_order() {
        let xs: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        let seq = map_slice(Exec::Sequential, &xs, |x| x * x);
        let par = map_slice(Exec::Parallel, &xs, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49.0);
    }
}
