//! Process-wide knobs shared by the library and the CLI.

use std::sync::atomic::{AtomicU64, Ordering};

/// Root finding scans the whole target field up to this size and switches
/// to equal-degree splitting beyond it.
pub const SCAN_LIMIT: u64 = 1_000_000;

/// Default cap on the number of items any enumeration may produce.
pub const DEFAULT_LIMIT: u64 = 2_000_000;

const DEFAULT_SEED: u64 = 0x5eed_cafe;

static SPLIT_SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

/// Seed for randomized root splitting. Results never depend on it, only the
/// path taken to reach them.
pub fn split_seed() -> u64 {
    SPLIT_SEED.load(Ordering::Relaxed)
}

pub fn set_split_seed(seed: u64) {
    SPLIT_SEED.store(seed, Ordering::Relaxed);
}
