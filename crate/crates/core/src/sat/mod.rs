//! CNF encodings, the internal SAT solver, DIMACS interop and the
//! boundary-enumeration driver.

mod boundary;
mod cnf;
mod dimacs;
mod encode;
mod solver;

pub use boundary::{solve_via_boundary_enumeration, BoundaryOptions, BoundarySolution};
pub(crate) use boundary::{check_boundary_budget, forced_values};
pub use cnf::{Assignment, Cnf, Lit, VarMap, VarRef};
pub use dimacs::{export_dimacs, export_model, import_model, parse_dimacs};
pub use encode::{
    build_boundary_cnf, build_full_cnf, count_conflicting_pairs, decode_assignment, ClusterBoundary,
};
pub(crate) use encode::boundary_cnf_unchecked;
pub use solver::{solve_cnf, solve_dpll, solve_two_sat, SatResult};
