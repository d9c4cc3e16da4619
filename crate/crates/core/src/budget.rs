//! Search budgets, overridable through the `TRISEP_BUDGET` environment variable.

use crate::minor::DEFAULT_MINOR_BUDGET;

/// Default cap on separator candidates examined by one enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 50_000_000;

fn from_env() -> Option<u128> {
    std::env::var("TRISEP_BUDGET").ok()?.trim().parse().ok()
}

pub fn enumeration_budget() -> u128 {
    from_env().unwrap_or(DEFAULT_ENUMERATION_BUDGET)
}

pub fn minor_budget() -> u64 {
    from_env().map(|b| b.min(u64::MAX as u128) as u64).unwrap_or(DEFAULT_MINOR_BUDGET)
}
