//! Resource limits for the exponential-cost routines.
//!
//! Limits are hard errors, never silent truncation. Setting the
//! `GIFTCOUNT_GUARD_MAX` environment variable raises every limit to at least
//! that value.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const GUARD_ENV: &str = "GIFTCOUNT_GUARD_MAX";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Max `(sigma+1)*n` when listing gamma sequences one by one.
    pub gamma_list_depth: u64,
    /// Max `(sigma+1)*n` for the memoized gamma-sequence counter.
    pub gamma_count_depth: u64,
    /// Max ground-set size when listing partitions one by one.
    pub partition_list_k: u64,
    /// Max ground-set size for the memoized partition counter.
    pub partition_count_k: u64,
    /// Max number of gifts in the full game simulator.
    pub game_gifts: u64,
    /// Max `n` for the `(sigma+1)^n`-term multinomial sum.
    pub multinomial_n: u64,
    /// Max number of cells in a dense E table.
    pub table_cells: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            gamma_list_depth: 16,
            gamma_count_depth: 64,
            partition_list_k: 18,
            partition_count_k: 40,
            game_gifts: 5,
            multinomial_n: 8,
            table_cells: 50_000_000,
        }
    }
}

impl Guards {
    /// Every limit raised to at least `floor`.
    pub fn raised_to(self, floor: u64) -> Self {
        Guards {
            gamma_list_depth: self.gamma_list_depth.max(floor),
            gamma_count_depth: self.gamma_count_depth.max(floor),
            partition_list_k: self.partition_list_k.max(floor),
            partition_count_k: self.partition_count_k.max(floor),
            game_gifts: self.game_gifts.max(floor),
            multinomial_n: self.multinomial_n.max(floor),
            table_cells: self.table_cells.max(floor),
        }
    }

    pub fn from_env() -> Self {
        let base = Guards::default();
        match std::env::var(GUARD_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()) {
            Some(floor) => base.raised_to(floor),
            None => base,
        }
    }

    /// Process-wide limits, read from the environment once.
    pub fn global() -> &'static Guards {
        static GUARDS: OnceLock<Guards> = OnceLock::new();
        GUARDS.get_or_init(Guards::from_env)
    }
}

pub(crate) fn check(guard: &'static str, requested: u64, limit: u64) -> Result<()> {
    if requested > limit {
        Err(Error::Guard { guard, requested, limit })
    } else {
        Ok(())
    }
}
