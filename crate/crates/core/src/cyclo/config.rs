//! Process-wide conductor cap.
//!
//! Orders of the form z^k(z^l - 1) explode quickly; the cap converts silent
//! blowup into a diagnosable error. Default 10^6, overridable via the
//! `TORUS_STAB_MAX_CONDUCTOR` environment variable or [`set_conductor_cap`].

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

const DEFAULT_CAP: u64 = 1_000_000;

static CAP: OnceLock<AtomicU64> = OnceLock::new();

fn cell() -> &'static AtomicU64 {
    CAP.get_or_init(|| {
        let from_env = std::env::var("TORUS_STAB_MAX_CONDUCTOR")
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
            .filter(|&v| v >= 1);
        AtomicU64::new(from_env.unwrap_or(DEFAULT_CAP))
    })
}

/// Current cap on cyclotomic conductors.
pub fn conductor_cap() -> u64 {
    cell().load(Ordering::Relaxed)
}

/// Override the conductor cap for this process.
pub fn set_conductor_cap(cap: u64) {
    cell().store(cap.max(1), Ordering::Relaxed);
}
