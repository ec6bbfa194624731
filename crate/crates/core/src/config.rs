//! Process-wide resource caps.
//!
//! Entailment works by exhaustive model enumeration, and the n-ary fusion
//! construction is exponential in the number of bases, so both are guarded
//! by caps. Defaults suit desk-scale problems; the CLI can raise or lower
//! them once at startup.

use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_MAX_VARS: usize = 20;
pub const DEFAULT_EXPLOSION_CAP: usize = 200_000;

static MAX_VARS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_VARS);
static EXPLOSION_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_EXPLOSION_CAP);

/// Hard cap on the number of propositional variables in a vocabulary.
pub fn max_vars() -> usize {
    MAX_VARS.load(Ordering::Relaxed)
}

pub fn set_max_vars(cap: usize) {
    assert!(cap >= 1 && cap <= 30, "variable cap must be in 1..=30");
    MAX_VARS.store(cap, Ordering::Relaxed);
}

/// Cap on the number of weighted items the n-ary fusion may emit.
pub fn explosion_cap() -> usize {
    EXPLOSION_CAP.load(Ordering::Relaxed)
}

pub fn set_explosion_cap(cap: usize) {
    assert!(cap >= 1, "explosion cap must be positive");
    EXPLOSION_CAP.store(cap, Ordering::Relaxed);
}
