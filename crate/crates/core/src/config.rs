//! Size limits for the exponential searches.

use std::env;

use serde::Serialize;

/// Environment variable overriding [`Limits::oracle`].
pub const ORACLE_LIMIT_VAR: &str = "CIRCTDC_ORACLE_LIMIT";
/// Environment variable overriding [`Limits::solver`].
pub const SOLVER_LIMIT_VAR: &str = "CIRCTDC_SOLVER_LIMIT";

/// Searches pack vertex sets into one `u64`, so no limit may exceed this.
pub const MAX_SEARCH_ORDER: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest `n` accepted by the brute-force invariant oracles.
    pub oracle: u32,
    /// Largest `n` accepted by the exact total dominator search.
    pub solver: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            oracle: 24,
            solver: 24,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `CIRCTDC_ORACLE_LIMIT` / `CIRCTDC_SOLVER_LIMIT`
    /// when those parse as integers. Values are clamped to [`MAX_SEARCH_ORDER`].
    pub fn from_env() -> Self {
        let read = |var: &str, default: u32| {
            env::var(var)
                .ok()
                .and_then(|s| s.trim().parse::<u32>().ok())
                .unwrap_or(default)
                .min(MAX_SEARCH_ORDER)
        };
        let d = Self::default();
        Self {
            oracle: read(ORACLE_LIMIT_VAR, d.oracle),
            solver: read(SOLVER_LIMIT_VAR, d.solver),
        }
    }

    pub fn with_oracle(mut self, limit: u32) -> Self {
        self.oracle = limit.min(MAX_SEARCH_ORDER);
        self
    }

    pub fn with_solver(mut self, limit: u32) -> Self {
        self.solver = limit.min(MAX_SEARCH_ORDER);
        self
    }
}
