//! Tolerance-aware comparisons on weights in `[0, 1]`.
//!
//! Operators such as the geometric average leave the rationals, so all
//! equality and threshold tests use an absolute tolerance. The tolerance is
//! process-wide and settable once at startup (the CLI's `--eps` flag).

use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_EPS: f64 = 1e-9;

// 0 bits is the unset sentinel (0.0 is never a useful tolerance).
static EPS_BITS: AtomicU64 = AtomicU64::new(0);

/// Current absolute tolerance for weight comparisons.
pub fn eps() -> f64 {
    let bits = EPS_BITS.load(Ordering::Relaxed);
    if bits == 0 {
        DEFAULT_EPS
    } else {
        f64::from_bits(bits)
    }
}

/// Override the process-wide tolerance. Intended to be called once, before
/// any computation.
pub fn set_eps(value: f64) {
    assert!(value > 0.0 && value < 0.5, "tolerance must be in (0, 0.5)");
    EPS_BITS.store(value.to_bits(), Ordering::Relaxed);
}

pub fn eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= eps()
}

/// Strict `a < b` with tolerance.
pub fn lt(a: f64, b: f64) -> bool {
    b - a > eps()
}

/// Strict `a > b` with tolerance.
pub fn gt(a: f64, b: f64) -> bool {
    a - b > eps()
}

pub fn le(a: f64, b: f64) -> bool {
    a - b <= eps()
}

pub fn ge(a: f64, b: f64) -> bool {
    b - a <= eps()
}

pub fn is_zero(a: f64) -> bool {
    a.abs() <= eps()
}

pub fn is_one(a: f64) -> bool {
    (a - 1.0).abs() <= eps()
}

/// True iff `w` is a valid weight (finite and inside `[0, 1]` up to
/// tolerance).
pub fn in_unit(w: f64) -> bool {
    w.is_finite() && w >= -eps() && w <= 1.0 + eps()
}

/// Sorted descending list of distinct values, merging values closer than the
/// tolerance.
pub fn distinct_desc(values: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut v: Vec<f64> = values.into_iter().collect();
    v.sort_by(|a, b| b.partial_cmp(a).expect("weights are finite"));
    v.dedup_by(|a, b| (*a - *b).abs() <= eps());
    v
}
