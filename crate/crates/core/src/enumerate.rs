//! Bounded enumeration of small parameter sets, and an order-preserving
//! parallel map for sweeping analyses over them.

use rayon::prelude::*;

use crate::array::{IntersectionArray, SrgParams};
use crate::srg::srg_closed_form;

/// Every `(n, k, a, c)` with `n <= n_max` that passes validation and has
/// positive integral eigenvalue multiplicities, in lexicographic order.
pub fn feasible_srg_params(n_max: i64) -> Vec<SrgParams> {
    (4..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| {
            (1..n - 1).flat_map(move |k| {
                (0..k).flat_map(move |a| (1..=k).filter_map(move |c| SrgParams::new(n, k, a, c).ok()))
            })
        })
        .filter(|p| srg_closed_form(p).is_ok())
        .collect()
}

/// The diameter-2 arrays of [`feasible_srg_params`], paired with their parameters.
pub fn feasible_srg_arrays(n_max: i64) -> Vec<(SrgParams, IntersectionArray)> {
    let mut out: Vec<_> = feasible_srg_params(n_max)
        .into_iter()
        .map(|p| (p, p.to_array().expect("validated parameters")))
        .collect();
    out.sort_by(|x, y| cmp_arrays(&x.1, &y.1));
    out
}

/// Diameter-3 arrays `{k, b_1, b_2; 1, c_2, c_3}` with every `b_i <= b_max` and
/// `c_i <= c_max` that satisfy the basic array constraints and have integral
/// sphere sizes, in lexicographic order.
pub fn diameter3_arrays(b_max: i64, c_max: i64) -> Vec<IntersectionArray> {
    let mut out: Vec<IntersectionArray> = (1..=b_max)
        .into_par_iter()
        .flat_map_iter(|k| {
            (1..=k).flat_map(move |b1| {
                (1..=b1).flat_map(move |b2| {
                    (1..=c_max.min(k)).flat_map(move |c2| {
                        (c2..=c_max.min(k)).filter_map(move |c3| {
                            IntersectionArray::new(&[k, b1, b2], &[1, c2, c3])
                                .ok()
                                .filter(|arr| arr.sphere_sizes().is_ok())
                        })
                    })
                })
            })
        })
        .collect();
    out.sort_by(cmp_arrays);
    out
}

/// Lexicographic on `b` then `c`.
pub fn cmp_arrays(x: &IntersectionArray, y: &IntersectionArray) -> std::cmp::Ordering {
    (x.b_seq(), x.c_seq()).cmp(&(y.b_seq(), y.c_seq()))
}

/// Maps `f` over `items` on the rayon pool; output order matches input order.
pub fn sweep<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}
