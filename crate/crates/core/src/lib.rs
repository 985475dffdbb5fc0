//! Exact solvers for co-clustering under the maximum norm.
//!
//! Rows of a matrix are split into `k` blocks and columns into `l` blocks; the
//! cost of such a co-clustering is the largest `max - min` over the `k * l`
//! clusters. The crate decides whether cost `c` is reachable and finds the
//! optimal cost, using polynomial special cases where they apply and SAT
//! encodings or exhaustive search otherwise.

pub mod budget;
pub mod consecutive;
pub mod engine;
pub mod error;
pub mod fpt;
pub mod generators;
pub mod instance;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod rescale;
pub mod sat;
pub mod special;

pub use budget::{Budget, SearchContext, SearchStats};
pub use consecutive::{cutset_to_coclustering, optimize_consecutive, solve_consecutive, CutSet};
pub use engine::{bounds, decide, optimize, Bounds, Decision, Optimum, Route, Strategy, Trace};
pub use error::{Error, Result};
pub use instance::{candidate_costs, cost, Instance};
pub use matrix::{Alphabet, IntMatrix};
pub use partition::{CoClustering, OneBasedCoClustering, Partition};
pub use rescale::{rescale, RealInstance, RealMatrix, ValueMap};

// Book chapters double as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/engine.md")]
    mod engine {}
    #[doc = include_str!("../../../book/src/special-cases.md")]
    mod special_cases {}
    #[doc = include_str!("../../../book/src/sat.md")]
    mod sat {}
    #[doc = include_str!("../../../book/src/real-values.md")]
    mod real_values {}
    #[doc = include_str!("../../../book/src/consecutive.md")]
    mod consecutive {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/testing.md")]
    mod testing {}
}
