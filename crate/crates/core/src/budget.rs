use serde::Serialize;

use crate::error::{Error, Result};

/// Caps on the exponential parts of the exact solvers.
///
/// Every cap is checked before (or while) the corresponding search runs; hitting
/// one yields [`Error::BudgetExhausted`] or [`Error::TooLarge`], never a wrong
/// answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of cluster boundaries a boundary enumeration may visit.
    pub max_boundaries: u64,
    /// Maximum matrix-cell checks summed over all boundary formulas built by one
    /// enumeration (`boundaries * m * n * k * l`).
    pub max_boundary_work: u64,
    /// Maximum clause count of a single formula (full encoding, colouring bounds).
    pub max_clauses: u64,
    /// Maximum branching decisions of one backtracking SAT call.
    pub max_decisions: u64,
    /// Maximum `row partitions * column partitions` the brute-force oracle examines.
    pub max_oracle_space: u64,
    /// Maximum number of cut sets the consecutive solver enumerates.
    pub max_cut_sets: u64,
    /// Maximum number of search nodes of the `c = 1`, `k = 2` algorithm.
    pub max_fpt_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_boundaries: 1_000_000,
            max_boundary_work: 500_000_000,
            max_clauses: 10_000_000,
            max_decisions: 10_000_000,
            max_oracle_space: 10_000_000,
            max_cut_sets: 10_000_000,
            max_fpt_nodes: 10_000_000,
        }
    }
}

impl Budget {
    /// Name of the environment variable read by [`Budget::from_env`].
    pub const ENV_VAR: &'static str = "COCLUST_BUDGET";

    /// Default budget with the enumeration caps (boundaries, oracle space, cut
    /// sets, FPT nodes) replaced by the value of `COCLUST_BUDGET`, if set.
    pub fn from_env() -> Result<Self> {
        let mut budget = Budget::default();
        if let Ok(raw) = std::env::var(Self::ENV_VAR) {
            let cap: u64 = raw.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{} must be a non-negative integer, got {raw:?}", Self::ENV_VAR))
            })?;
            budget = budget.with_enumeration_cap(cap);
        }
        Ok(budget)
    }

    pub fn with_enumeration_cap(mut self, cap: u64) -> Self {
        self.max_boundaries = cap;
        self.max_oracle_space = cap;
        self.max_cut_sets = cap;
        self.max_fpt_nodes = cap;
        self
    }
}

/// Counters accumulated by the searches; serialized into the CLI trace.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub boundaries: u64,
    pub sat_calls: u64,
    pub sat_decisions: u64,
    pub partitions: u64,
    pub cut_sets: u64,
    pub fpt_nodes: u64,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.boundaries += other.boundaries;
        self.sat_calls += other.sat_calls;
        self.sat_decisions += other.sat_decisions;
        self.partitions += other.partitions;
        self.cut_sets += other.cut_sets;
        self.fpt_nodes += other.fpt_nodes;
    }
}

/// Budget, counters and worker count shared by one solving session.
#[derive(Debug, Clone)]
pub struct SearchContext {
    pub budget: Budget,
    pub stats: SearchStats,
    /// Worker threads for parallelizable enumerations; `1` runs sequentially.
    pub jobs: usize,
}

impl Default for SearchContext {
    fn default() -> Self {
        SearchContext::new(Budget::default())
    }
}

impl SearchContext {
    pub fn new(budget: Budget) -> Self {
        SearchContext {
            budget,
            stats: SearchStats::default(),
            jobs: 1,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}
