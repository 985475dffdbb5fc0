//! Deciding an instance by trying every cluster boundary in turn.

use rayon::prelude::*;

use crate::budget::{SearchContext, SearchStats};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matrix::IntMatrix;
use crate::partition::CoClustering;
use crate::sat::encode::{boundary_cnf_unchecked, decode_assignment, ClusterBoundary};
use crate::sat::solver::solve_cnf;

/// Optional reductions of the boundary search space. Both are off by default,
/// so the plain enumeration visits all `|Σ|^{kl}` boundaries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BoundaryOptions {
    /// Only try boundaries containing `min Σ` and `min {a ∈ Σ : a >= max Σ - c}`.
    ///
    /// Some satisfiable boundary always contains both: the cluster holding a
    /// minimum entry can use `min Σ` as its bound, and the one holding a
    /// maximum entry can lower its bound to the second value.
    pub prune_forced_values: bool,
    /// Only try boundaries whose rows and columns are both lexicographically
    /// non-decreasing. Permuting row blocks and column blocks permutes the
    /// boundary, and every matrix has a permutation of this shape.
    pub prune_symmetric: bool,
}

impl BoundaryOptions {
    pub fn pruned() -> BoundaryOptions {
        BoundaryOptions {
            prune_forced_values: true,
            prune_symmetric: true,
        }
    }
}

/// A co-clustering together with the boundary that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySolution {
    pub coclustering: CoClustering,
    pub boundary: ClusterBoundary,
}

/// Checks the up-front caps for enumerating `Σ^{k×l}` on an `m×n` matrix.
pub(crate) fn check_boundary_budget(
    sigma_len: usize,
    m: usize,
    n: usize,
    k: usize,
    l: usize,
    ctx: &SearchContext,
) -> Result<u64> {
    let cells = (k * l) as u32;
    let count = (sigma_len as u64).checked_pow(cells);
    let budget = &ctx.budget;
    match count {
        Some(count) if count <= budget.max_boundaries => {
            let work = count.saturating_mul((m * n * k * l) as u64);
            if work > budget.max_boundary_work {
                return Err(Error::BudgetExhausted(format!(
                    "boundary enumeration needs {count} formulas of {} cells each, over the work cap {}",
                    m * n * k * l,
                    budget.max_boundary_work
                )));
            }
            Ok(count)
        }
        _ => Err(Error::BudgetExhausted(format!(
            "{sigma_len}^{cells} boundaries exceed the cap of {}",
            budget.max_boundaries
        ))),
    }
}

/// Lazily yields boundaries over `values` in row-major odometer order (first
/// cell most significant, values ascending), skipping pruned ones.
pub(crate) struct BoundaryIter {
    values: Vec<i64>,
    k: usize,
    l: usize,
    symmetric: bool,
    forced: Vec<i64>,
    /// Value index per cell; `None` once exhausted.
    digits: Option<Vec<usize>>,
    started: bool,
}

impl BoundaryIter {
    pub(crate) fn new(values: Vec<i64>, k: usize, l: usize, symmetric: bool, forced: Vec<i64>) -> BoundaryIter {
        let digits = (!values.is_empty()).then(|| vec![0; k * l]);
        BoundaryIter {
            values,
            k,
            l,
            symmetric,
            forced,
            digits,
            started: false,
        }
    }

    /// First cell (row-major) violating the symmetry order, if any. Rows and
    /// columns are compared on index digits, which order like the values.
    fn first_violation(&self, d: &[usize]) -> Option<usize> {
        let (k, l) = (self.k, self.l);
        let mut row_tied = vec![true; k];
        let mut col_tied = vec![true; l];
        for r in 0..k {
            for s in 0..l {
                let x = d[r * l + s];
                if r > 0 && row_tied[r] {
                    let above = d[(r - 1) * l + s];
                    if x < above {
                        return Some(r * l + s);
                    }
                    row_tied[r] = x == above;
                }
                if s > 0 && col_tied[s] {
                    let left = d[r * l + s - 1];
                    if x < left {
                        return Some(r * l + s);
                    }
                    col_tied[s] = x == left;
                }
            }
        }
        None
    }

    /// Advances the odometer so that cell `pos` increments and everything after
    /// it resets. Returns false when the enumeration is over.
    fn bump(&mut self, pos: usize) -> bool {
        let base = self.values.len();
        let d = self.digits.as_mut().expect("bump after exhaustion");
        for x in &mut d[pos + 1..] {
            *x = 0;
        }
        let mut p = pos;
        loop {
            d[p] += 1;
            if d[p] < base {
                return true;
            }
            d[p] = 0;
            if p == 0 {
                self.digits = None;
                return false;
            }
            p -= 1;
        }
    }

    fn accepted(&self, d: &[usize]) -> bool {
        self.forced
            .iter()
            .all(|f| d.iter().any(|&x| self.values[x] == *f))
    }
}

impl Iterator for BoundaryIter {
    type Item = ClusterBoundary;

    fn next(&mut self) -> Option<ClusterBoundary> {
        let last = self.k * self.l - 1;
        if self.started {
            self.digits.as_ref()?;
            if !self.bump(last) {
                return None;
            }
        }
        self.started = true;
        loop {
            let d = self.digits.as_ref()?;
            if self.symmetric {
                if let Some(pos) = self.first_violation(d) {
                    // Every completion of this prefix violates the order too.
                    if !self.bump(pos) {
                        return None;
                    }
                    continue;
                }
            }
            if self.accepted(d) {
                let data = d.iter().map(|&x| self.values[x]).collect();
                return Some(
                    ClusterBoundary::from_row_major(self.k, self.l, data).expect("shape is k x l"),
                );
            }
            if !self.bump(last) {
                return None;
            }
        }
    }
}

/// The values that [`BoundaryOptions::prune_forced_values`] requires.
pub(crate) fn forced_values(sigma: &[i64], c: i64) -> Vec<i64> {
    let lo = sigma[0];
    let hi = sigma[sigma.len() - 1];
    let top = sigma[sigma.partition_point(|&a| a < hi - c)];
    if top == lo {
        vec![lo]
    } else {
        vec![lo, top]
    }
}

fn try_boundary(
    a: &IntMatrix,
    k: usize,
    l: usize,
    c: i64,
    boundary: &ClusterBoundary,
    max_decisions: u64,
    stats: &mut SearchStats,
) -> Result<Option<CoClustering>> {
    let (cnf, vm) = boundary_cnf_unchecked(a, k, l, c, boundary);
    let result = solve_cnf(&cnf, max_decisions)?;
    stats.boundaries += 1;
    stats.sat_calls += 1;
    stats.sat_decisions += result.decisions;
    result
        .assignment
        .map(|model| decode_assignment(&model, &vm))
        .transpose()
}

/// Decides `instance` by solving one boundary formula per boundary in
/// `Σ^{k×l}`, in odometer order. Returns the first satisfiable one.
///
/// With `ctx.jobs > 1` boundaries are solved in parallel chunks; the result is
/// still the first satisfiable boundary in enumeration order.
pub fn solve_via_boundary_enumeration(
    instance: &Instance,
    options: BoundaryOptions,
    ctx: &mut SearchContext,
) -> Result<Option<BoundarySolution>> {
    let a = instance.matrix();
    let (k, l, c) = (instance.k(), instance.l(), instance.c());
    let sigma = a.alphabet();
    check_boundary_budget(sigma.len(), a.rows(), a.cols(), k, l, ctx)?;
    let forced = if options.prune_forced_values {
        forced_values(sigma.values(), c)
    } else {
        Vec::new()
    };
    let mut iter = BoundaryIter::new(sigma.values().to_vec(), k, l, options.prune_symmetric, forced);
    let max_decisions = ctx.budget.max_decisions;

    if ctx.jobs <= 1 {
        for boundary in iter {
            if let Some(cc) = try_boundary(a, k, l, c, &boundary, max_decisions, &mut ctx.stats)? {
                return Ok(Some(BoundarySolution {
                    coclustering: cc,
                    boundary,
                }));
            }
        }
        return Ok(None);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(ctx.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let chunk_size = 64 * ctx.jobs;
    loop {
        let chunk: Vec<ClusterBoundary> = iter.by_ref().take(chunk_size).collect();
        if chunk.is_empty() {
            return Ok(None);
        }
        let outcomes: Vec<(Result<Option<CoClustering>>, SearchStats)> = pool.install(|| {
            chunk
                .par_iter()
                .map(|b| {
                    let mut stats = SearchStats::default();
                    (try_boundary(a, k, l, c, b, max_decisions, &mut stats), stats)
                })
                .collect()
        });
        for (boundary, (outcome, stats)) in chunk.into_iter().zip(outcomes) {
            ctx.stats.absorb(&stats);
            if let Some(cc) = outcome? {
                return Ok(Some(BoundarySolution {
                    coclustering: cc,
                    boundary,
                }));
            }
        }
    }
}
