//! Shared inputs for the criterion benchmarks.

use apery_core::compositions::classes;
use apery_core::DualityClass;

/// Every class of weight `k`, in canonical order.
pub fn classes_of(k: u32) -> Vec<DualityClass> {
    classes(k)
}

/// A handful of classes spread across weight `k`, for per-item timings.
pub fn sample_classes(k: u32, count: usize) -> Vec<DualityClass> {
    let all = classes(k);
    let step = (all.len() / count.max(1)).max(1);
    all.into_iter().step_by(step).take(count).collect()
}
