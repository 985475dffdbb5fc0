//! Strategy dispatch, cost optimization and the lower/upper bound scheme.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::budget::{SearchContext, SearchStats};
use crate::error::{invalid, Error, Result};
use crate::fpt::solve_k2_cost1;
use crate::instance::{candidate_costs, check_shape, cost, Instance};
use crate::matrix::IntMatrix;
use crate::oracle::brute_force_decide;
use crate::partition::{CoClustering, Partition};
use crate::rescale::{rescale, RealInstance, RealMatrix};
use crate::sat::{
    build_full_cnf, check_boundary_budget, decode_assignment, solve_cnf, solve_via_boundary_enumeration,
    BoundaryOptions, Cnf, Lit,
};
use crate::special::{
    solve_2x2_counted, solve_binary, solve_cost_zero, solve_k2_ternary_counted, solve_one_row_block,
    trivial_coclustering,
};

/// How [`decide`] picks its method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// The most specialised applicable solver.
    #[default]
    Auto,
    FullCnf,
    Boundary,
    Oracle,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "full-cnf" => Ok(Strategy::FullCnf),
            "boundary" => Ok(Strategy::Boundary),
            "oracle" => Ok(Strategy::Oracle),
            _ => Err(invalid(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::FullCnf => "full-cnf",
            Strategy::Boundary => "boundary",
            Strategy::Oracle => "oracle",
        })
    }
}

/// The solver that produced an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// `c` covers the whole alphabet.
    Trivial,
    /// `c` is below every gap between alphabet values.
    CostZero,
    Binary,
    OneRowBlock,
    TwoByTwo,
    Ternary,
    K2Cost1,
    Boundary,
    FullCnf,
    Oracle,
    Consecutive,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Trivial => "trivial",
            Route::CostZero => "cost-zero",
            Route::Binary => "binary",
            Route::OneRowBlock => "one-row-block",
            Route::TwoByTwo => "two-by-two",
            Route::Ternary => "ternary",
            Route::K2Cost1 => "k2-cost1",
            Route::Boundary => "boundary",
            Route::FullCnf => "full-cnf",
            Route::Oracle => "oracle",
            Route::Consecutive => "consecutive",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub route: Route,
    /// The solver ran on the transposed matrix.
    pub transposed: bool,
    /// Why the first choice was abandoned, if it was.
    pub fallback: Option<String>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub solution: Option<CoClustering>,
    pub trace: Trace,
}

impl Decision {
    pub fn is_feasible(&self) -> bool {
        self.solution.is_some()
    }
}

fn min_gap(values: &[i64]) -> Option<i64> {
    values.windows(2).map(|w| w[1] - w[0]).min()
}

/// Every route that can decide `instance`, most specialised first. The
/// general routes `Boundary`, `FullCnf` and `Oracle` always apply, subject to
/// their budgets.
pub fn applicable_routes(instance: &Instance) -> Vec<Route> {
    let sigma = instance.matrix().alphabet();
    let (k, l, c) = (instance.k(), instance.l(), instance.c());
    let mut out = Vec::new();
    if c >= sigma.span() {
        out.push(Route::Trivial);
    }
    if min_gap(sigma.values()).is_none_or(|g| c < g) {
        out.push(Route::CostZero);
    }
    if sigma.len() <= 2 {
        out.push(Route::Binary);
    }
    if k == 1 || l == 1 {
        out.push(Route::OneRowBlock);
    }
    if k == 2 && l == 2 {
        out.push(Route::TwoByTwo);
    }
    if (k == 2 || l == 2) && sigma.len() == 3 {
        out.push(Route::Ternary);
    }
    if (k == 2 || l == 2) && c == 1 {
        out.push(Route::K2Cost1);
    }
    out.extend([Route::Boundary, Route::FullCnf, Route::Oracle]);
    out
}

/// Runs one solver on `instance`, transposing when the solver needs the
/// smaller block count first. Returns the solution and whether the matrix was
/// transposed.
pub fn run_route(instance: &Instance, route: Route, ctx: &mut SearchContext) -> Result<(Option<CoClustering>, bool)> {
    if route != Route::Consecutive && !applicable_routes(instance).contains(&route) {
        return Err(invalid(format!("route {route} does not apply to this instance")));
    }
    let a = instance.matrix();
    let (k, l, c) = (instance.k(), instance.l(), instance.c());
    // Routes for two row blocks run on the transpose when only `l` is two.
    let flip = k != 2 && l == 2;
    let (t, kk, ll) = if flip { (a.transpose(), l, k) } else { (a.clone(), k, l) };
    let back = |cc: Option<CoClustering>| cc.map(|x| if flip { x.transpose() } else { x });
    let out = match route {
        Route::Trivial => (Some(trivial_coclustering(a, k, l)?), false),
        Route::CostZero => (solve_cost_zero(a, k, l)?, false),
        Route::Binary => (solve_binary(instance)?, false),
        Route::OneRowBlock if k == 1 => {
            let cols = solve_one_row_block(a, l, c)?;
            (cols.map(|(p, _)| CoClustering::new(Partition::whole(a.rows()), p)), false)
        }
        Route::OneRowBlock => {
            let rows = solve_one_row_block(&a.transpose(), k, c)?;
            (rows.map(|(p, _)| CoClustering::new(p, Partition::whole(a.cols()))), true)
        }
        Route::TwoByTwo => (solve_2x2_counted(a, c, &mut ctx.stats)?, false),
        Route::Ternary => (back(solve_k2_ternary_counted(&t, ll, c, &mut ctx.stats)?), flip),
        Route::K2Cost1 => (back(solve_k2_cost1(&t, ll, ctx)?), flip),
        Route::Boundary => {
            let found = solve_via_boundary_enumeration(instance, BoundaryOptions::pruned(), ctx)?;
            (found.map(|s| s.coclustering), false)
        }
        Route::FullCnf => (solve_full_cnf(instance, ctx)?, false),
        Route::Oracle => (brute_force_decide(instance, ctx)?, false),
        Route::Consecutive => {
            let cuts = crate::consecutive::solve_consecutive(a, k, l, c, ctx)?;
            let cc = cuts
                .map(|x| crate::consecutive::cutset_to_coclustering(&x, a.rows(), a.cols()))
                .transpose()?;
            (cc, false)
        }
    };
    debug_assert!(kk * ll == k * l);
    Ok(out)
}

fn solve_full_cnf(instance: &Instance, ctx: &mut SearchContext) -> Result<Option<CoClustering>> {
    let (cnf, vm) = build_full_cnf(instance, ctx.budget.max_clauses)?;
    let result = solve_cnf(&cnf, ctx.budget.max_decisions)?;
    ctx.stats.sat_calls += 1;
    ctx.stats.sat_decisions += result.decisions;
    result.assignment.map(|x| decode_assignment(&x, &vm)).transpose()
}

fn is_budget(e: &Error) -> bool {
    matches!(e, Error::BudgetExhausted(_) | Error::TooLarge(_))
}

/// Decides `instance` with `strategy`. The auto strategy takes the first of
/// [`applicable_routes`]; when that is the boundary enumeration and its cap
/// is exceeded it falls back to the full encoding.
pub fn decide(instance: &Instance, strategy: Strategy, ctx: &mut SearchContext) -> Result<Decision> {
    let outer = std::mem::take(&mut ctx.stats);
    let result = decide_inner(instance, strategy, ctx);
    let stats = std::mem::replace(&mut ctx.stats, outer);
    ctx.stats.absorb(&stats);
    let (solution, route, transposed, fallback) = result?;
    if let Some(cc) = &solution {
        let got = cost(instance.matrix(), cc)?;
        if got > instance.c() || cc.shape() != (instance.k(), instance.l()) {
            return Err(Error::Internal(format!(
                "route {route} returned a {:?} co-clustering of cost {got}",
                cc.shape()
            )));
        }
    }
    Ok(Decision {
        solution,
        trace: Trace {
            route,
            transposed,
            fallback,
            stats,
        },
    })
}

type Inner = (Option<CoClustering>, Route, bool, Option<String>);

fn decide_inner(instance: &Instance, strategy: Strategy, ctx: &mut SearchContext) -> Result<Inner> {
    let route = match strategy {
        Strategy::FullCnf => Route::FullCnf,
        Strategy::Boundary => Route::Boundary,
        Strategy::Oracle => Route::Oracle,
        Strategy::Auto => applicable_routes(instance)[0],
    };
    if strategy == Strategy::Auto && route == Route::Boundary {
        let a = instance.matrix();
        let sigma = a.alphabet().len();
        if let Err(e) = check_boundary_budget(sigma, a.rows(), a.cols(), instance.k(), instance.l(), ctx) {
            let reason = e.to_string();
            return match solve_full_cnf(instance, ctx) {
                Ok(sol) => Ok((sol, Route::FullCnf, false, Some(reason))),
                Err(e2) if is_budget(&e2) => Err(Error::BudgetExhausted(format!("{reason}; {e2}"))),
                Err(e2) => Err(e2),
            };
        }
    }
    let (sol, transposed) = run_route(instance, route, ctx)?;
    Ok((sol, route, transposed, None))
}

/// Optimum of one side of the bound scheme: rows into `k` blocks with every
/// column its own block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideBound {
    /// Every row partition into `k` blocks costs at least this.
    pub lower: i64,
    /// Cost of `partition`.
    pub upper: i64,
    #[serde(skip)]
    pub partition: Partition,
}

impl SideBound {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `max(c1, c2)` when both sides are exact; otherwise what was proven.
    pub lower: i64,
    /// `c1 + c2` for the sides' best known partitions.
    pub upper: i64,
    pub rows: SideBound,
    pub cols: SideBound,
    /// Row partition of the first side combined with the column partition of the second.
    #[serde(skip)]
    pub witness: CoClustering,
    pub witness_cost: i64,
}

impl Bounds {
    /// Both sub-problems were solved exactly.
    pub fn is_tight(&self) -> bool {
        self.rows.is_exact() && self.cols.is_exact()
    }
}

/// Maximum-norm distances between all pairs of rows.
fn row_distances(a: &IntMatrix) -> Vec<Vec<i64>> {
    let m = a.rows();
    let mut d = vec![vec![0; m]; m];
    for i in 0..m {
        for t in i + 1..m {
            let x = a.row(i).iter().zip(a.row(t)).map(|(p, q)| (p - q).abs()).max().unwrap_or(0);
            d[i][t] = x;
            d[t][i] = x;
        }
    }
    d
}

fn diameter_cost(d: &[Vec<i64>], labels: &[usize]) -> i64 {
    let mut worst = 0;
    for i in 0..labels.len() {
        for t in i + 1..labels.len() {
            if labels[i] == labels[t] {
                worst = worst.max(d[i][t]);
            }
        }
    }
    worst
}

/// Farthest-first seeds, every row joining its nearest seed.
fn greedy_rows(d: &[Vec<i64>], k: usize) -> Vec<usize> {
    let m = d.len();
    let mut seeds = vec![0];
    let mut near: Vec<i64> = d[0].clone();
    while seeds.len() < k.min(m) {
        let far = (0..m).max_by_key(|&i| (near[i], std::cmp::Reverse(i))).unwrap();
        if near[far] == 0 {
            break;
        }
        seeds.push(far);
        for i in 0..m {
            near[i] = near[i].min(d[far][i]);
        }
    }
    (0..m)
        .map(|i| (0..seeds.len()).min_by_key(|&s| (d[seeds[s]][i], s)).unwrap())
        .collect()
}

/// Rows coloured with `k` colours so that rows further apart than `c` differ.
/// `Ok(None)` if impossible, `Err` if over budget.
fn color_rows(d: &[Vec<i64>], k: usize, c: i64, ctx: &mut SearchContext) -> Result<Option<Vec<usize>>> {
    let m = d.len();
    let var = |i: usize, r: usize| (i * k + r + 1) as u32;
    let edges: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |t| (i, t)))
        .filter(|&(i, t)| d[i][t] > c)
        .collect();
    let clauses = (edges.len() as u64).saturating_mul(k as u64).saturating_add(m as u64 + 1);
    if clauses > ctx.budget.max_clauses {
        return Err(Error::TooLarge(format!("colouring formula with {clauses} clauses")));
    }
    let mut cnf = Cnf::new((m * k) as u32);
    for i in 0..m {
        cnf.add_clause(&(0..k).map(|r| Lit::pos(var(i, r))).collect::<Vec<_>>())?;
    }
    // Colour names are interchangeable, so the first row takes colour 0.
    cnf.add_clause(&[Lit::pos(var(0, 0))])?;
    for &(i, t) in &edges {
        for r in 0..k {
            cnf.add_clause(&[Lit::neg(var(i, r)), Lit::neg(var(t, r))])?;
        }
    }
    let result = solve_cnf(&cnf, ctx.budget.max_decisions.min(BOUND_DECISIONS))?;
    ctx.stats.sat_calls += 1;
    ctx.stats.sat_decisions += result.decisions;
    Ok(result
        .assignment
        .map(|x| (0..m).map(|i| (0..k).find(|&r| x.value(var(i, r))).unwrap_or(0)).collect()))
}

/// Decision cap for each colouring sub-solve of the bound scheme.
const BOUND_DECISIONS: u64 = 200_000;

/// Best row partition into at most `k` blocks with singleton columns, by
/// binary search over the pairwise row distances. Exact unless a colouring
/// sub-solve runs over budget, in which case the bracket found so far is
/// reported.
pub fn side_bound(matrix: &IntMatrix, k: usize, ctx: &mut SearchContext) -> Result<SideBound> {
    let m = matrix.rows();
    if k == 0 || k > m {
        return Err(invalid(format!("block count {k} must lie in 1..={m}")));
    }
    let d = row_distances(matrix);
    let mut cands: Vec<i64> = d.iter().flatten().copied().collect();
    cands.push(0);
    cands.sort_unstable();
    cands.dedup();
    let mut best = greedy_rows(&d, k);
    let mut best_cost = diameter_cost(&d, &best);
    let (mut lo, mut hi) = (0, cands.binary_search(&best_cost).expect("diameter is a distance"));
    while lo < hi {
        let mid = (lo + hi) / 2;
        match color_rows(&d, k, cands[mid], ctx) {
            Ok(Some(labels)) => {
                best_cost = diameter_cost(&d, &labels);
                best = labels;
                hi = cands.binary_search(&best_cost).expect("diameter is a distance");
            }
            Ok(None) => lo = mid + 1,
            Err(e) if is_budget(&e) => break,
            Err(e) => return Err(e),
        }
    }
    let partition = Partition::from_labels(&best).split_to(k)?;
    Ok(SideBound {
        lower: cands[lo],
        upper: best_cost,
        partition,
    })
}

/// `c1` is the optimum with singleton columns, `c2` with singleton rows. Both
/// refine a `(k, l)` co-clustering, so `max(c1, c2)` is a lower bound; joining
/// the row partition of the first with the column partition of the second
/// costs at most `c1 + c2` by the triangle inequality.
pub fn bounds(matrix: &IntMatrix, k: usize, l: usize, ctx: &mut SearchContext) -> Result<Bounds> {
    check_shape(matrix, k, l)?;
    let rows = side_bound(matrix, k, ctx)?;
    let cols = side_bound(&matrix.transpose(), l, ctx)?;
    let witness = CoClustering::new(rows.partition.clone(), cols.partition.clone());
    let witness_cost = cost(matrix, &witness)?;
    Ok(Bounds {
        lower: rows.lower.max(cols.lower),
        upper: rows.upper + cols.upper,
        rows,
        cols,
        witness,
        witness_cost,
    })
}

/// One decision made during an optimization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Probe {
    pub c: i64,
    pub feasible: bool,
    pub route: Route,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub cost: i64,
    pub coclustering: CoClustering,
    pub bounds: Bounds,
    pub probes: Vec<Probe>,
    pub stats: SearchStats,
}

/// Minimum cost of a `(k, l)`-co-clustering. Binary search over the candidate
/// costs between the bounds, starting from the bound witness.
pub fn optimize(matrix: &IntMatrix, k: usize, l: usize, strategy: Strategy, ctx: &mut SearchContext) -> Result<Optimum> {
    let before = ctx.stats;
    let b = bounds(matrix, k, l, ctx)?;
    let costs = candidate_costs(matrix);
    let mut lo = costs.partition_point(|&x| x < b.lower);
    let mut hi = costs.partition_point(|&x| x < b.witness_cost);
    let mut best = b.witness.clone();
    let mut probes = Vec::new();
    while lo < hi {
        let mid = (lo + hi) / 2;
        let inst = Instance::new(matrix.clone(), k, l, costs[mid])?;
        let d = decide(&inst, strategy, ctx)?;
        probes.push(Probe {
            c: costs[mid],
            feasible: d.is_feasible(),
            route: d.trace.route,
        });
        match d.solution {
            Some(cc) => {
                // The witness may beat the probed budget.
                hi = costs.partition_point(|&x| x < cost(matrix, &cc).expect("checked by decide"));
                best = cc;
            }
            None => lo = mid + 1,
        }
    }
    let mut stats = ctx.stats;
    stats.boundaries -= before.boundaries;
    stats.sat_calls -= before.sat_calls;
    stats.sat_decisions -= before.sat_decisions;
    stats.partitions -= before.partitions;
    stats.cut_sets -= before.cut_sets;
    stats.fpt_nodes -= before.fpt_nodes;
    Ok(Optimum {
        cost: costs[hi],
        coclustering: best,
        bounds: b,
        probes,
        stats,
    })
}

/// Decides a real-valued instance through an equivalent integer instance.
pub fn decide_real(instance: &RealInstance, strategy: Strategy, ctx: &mut SearchContext) -> Result<Decision> {
    let (inst, _) = rescale(instance)?;
    decide(&inst, strategy, ctx)
}

/// `{0}` and all positive differences of the alphabet, increasing.
pub fn real_candidate_costs(matrix: &RealMatrix) -> Vec<f64> {
    let sigma = matrix.alphabet();
    let mut out = vec![0.0];
    for i in 0..sigma.len() {
        for t in i + 1..sigma.len() {
            out.push(sigma[t] - sigma[i]);
        }
    }
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealOptimum {
    pub cost: f64,
    pub coclustering: CoClustering,
    pub probes: usize,
}

/// Minimum cost over real entries, deciding each probe with `solve` on the
/// rescaled instance.
pub fn optimize_real_with(
    matrix: &RealMatrix,
    k: usize,
    l: usize,
    ctx: &mut SearchContext,
    mut solve: impl FnMut(&Instance, &mut SearchContext) -> Result<Option<CoClustering>>,
) -> Result<RealOptimum> {
    let costs = real_candidate_costs(matrix);
    let (mut lo, mut hi) = (0, costs.len() - 1);
    let span = RealInstance::new(matrix.clone(), k, l, costs[hi])?;
    let mut best = trivial_coclustering(&rescale(&span)?.0.into_parts().0, k, l)?;
    let mut probes = 0;
    while lo < hi {
        let mid = (lo + hi) / 2;
        let (inst, _) = rescale(&RealInstance::new(matrix.clone(), k, l, costs[mid])?)?;
        probes += 1;
        match solve(&inst, ctx)? {
            Some(cc) => {
                let got = matrix.cost(&cc)?;
                hi = costs.partition_point(|&x| x < got);
                best = cc;
            }
            None => lo = mid + 1,
        }
    }
    Ok(RealOptimum {
        cost: costs[hi],
        coclustering: best,
        probes,
    })
}

pub fn optimize_real(matrix: &RealMatrix, k: usize, l: usize, strategy: Strategy, ctx: &mut SearchContext) -> Result<RealOptimum> {
    optimize_real_with(matrix, k, l, ctx, |inst, ctx| Ok(decide(inst, strategy, ctx)?.solution))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::oracle::brute_force_optimal;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn small() -> IntMatrix {
        IntMatrix::new(vec![vec![0, 4, 3, 0], vec![2, 2, 1, 3], vec![1, 3, 4, 1]]).unwrap()
    }

    fn random(rng: &mut ChaCha8Rng, m: usize, n: usize, sigma: i64) -> IntMatrix {
        let data = (0..m * n).map(|_| rng.gen_range(0..sigma)).collect();
        IntMatrix::from_row_major(m, n, data).unwrap()
    }

    #[test]
    fn strategy_names() {
        for s in [Strategy::Auto, Strategy::FullCnf, Strategy::Boundary, Strategy::Oracle] {
            assert_eq!(s.to_string().parse::<Strategy>().unwrap(), s);
        }
        assert!("fast".parse::<Strategy>().is_err());
    }

    #[test]
    fn routing() {
        let mut ctx = SearchContext::default();
        let d = decide(&Instance::new(small(), 2, 2, 1).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert!(d.is_feasible());
        assert_eq!(d.trace.route, Route::TwoByTwo);

        let row = IntMatrix::new(vec![vec![0, 5, 1, 6]]).unwrap();
        let d = decide(&Instance::new(row.clone(), 1, 2, 1).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert_eq!((d.trace.route, d.is_feasible()), (Route::OneRowBlock, true));
        let d = decide(&Instance::new(row.transpose(), 2, 1, 1).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert_eq!((d.trace.route, d.trace.transposed), (Route::OneRowBlock, true));

        let d = decide(&Instance::new(small(), 2, 2, 4).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert_eq!(d.trace.route, Route::Trivial);
        let d = decide(&Instance::new(small(), 2, 2, 0).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert_eq!((d.trace.route, d.is_feasible()), (Route::CostZero, false));

        let tern = IntMatrix::new(vec![vec![0, 1, 2], vec![2, 1, 0], vec![1, 1, 1]]).unwrap();
        let d = decide(&Instance::new(tern.clone(), 3, 2, 1).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert_eq!((d.trace.route, d.trace.transposed), (Route::Ternary, true));
        let d = decide(&Instance::new(tern, 3, 3, 1).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert_eq!(d.trace.route, Route::Boundary);

        let wide = IntMatrix::new(vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0], vec![1, 3, 0, 2]]).unwrap();
        let d = decide(&Instance::new(wide, 2, 3, 1).unwrap(), Strategy::Auto, &mut ctx).unwrap();
        assert_eq!(d.trace.route, Route::K2Cost1);
    }

    #[test]
    fn inapplicable_route() {
        let inst = Instance::new(small(), 2, 2, 1).unwrap();
        assert!(run_route(&inst, Route::Binary, &mut SearchContext::default()).is_err());
    }

    #[test]
    fn routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let (m, n) = (rng.gen_range(1..5), rng.gen_range(1..5));
            let sigma = rng.gen_range(1..5);
            let a = random(&mut rng, m, n, sigma);
            let (k, l) = (rng.gen_range(1..=m.min(3)), rng.gen_range(1..=n.min(3)));
            let inst = Instance::new(a, k, l, rng.gen_range(0..4)).unwrap();
            let mut ctx = SearchContext::default();
            let truth = brute_force_decide(&inst, &mut ctx).unwrap().is_some();
            for route in applicable_routes(&inst) {
                let (sol, _) = run_route(&inst, route, &mut ctx).unwrap();
                assert_eq!(sol.is_some(), truth, "{route} on {inst:?}");
            }
        }
    }

    #[test]
    fn fallback_to_full_encoding() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random(&mut rng, 4, 4, 4);
        let inst = Instance::new(a, 3, 3, 1).unwrap();
        let budget = Budget {
            max_boundaries: 10,
            ..Budget::default()
        };
        let mut ctx = SearchContext::new(budget.clone());
        let d = decide(&inst, Strategy::Auto, &mut ctx).unwrap();
        assert_eq!(d.trace.route, Route::FullCnf);
        assert!(d.trace.fallback.is_some());
        let truth = brute_force_decide(&inst, &mut SearchContext::default()).unwrap().is_some();
        assert_eq!(d.is_feasible(), truth);

        let tight = Budget {
            max_boundaries: 10,
            max_clauses: 10,
            ..Budget::default()
        };
        let err = decide(&inst, Strategy::Auto, &mut SearchContext::new(tight)).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted(_)));
    }

    #[test]
    fn trace_stats_are_per_call() {
        let mut ctx = SearchContext::default();
        let inst = Instance::new(small(), 2, 2, 1).unwrap();
        let d1 = decide(&inst, Strategy::Boundary, &mut ctx).unwrap();
        let d2 = decide(&inst, Strategy::Boundary, &mut ctx).unwrap();
        assert_eq!(d1.trace.stats, d2.trace.stats);
        assert_eq!(ctx.stats.boundaries, 2 * d1.trace.stats.boundaries);
    }

    #[test]
    fn optimize_examples() {
        let mut ctx = SearchContext::default();
        let o = optimize(&small(), 2, 2, Strategy::Auto, &mut ctx).unwrap();
        assert_eq!(o.cost, 1);
        assert_eq!(cost(&small(), &o.coclustering).unwrap(), 1);
        assert!(o.bounds.lower <= 1 && 1 <= o.bounds.upper);

        let c = IntMatrix::constant(3, 4, 7).unwrap();
        let o = optimize(&c, 2, 2, Strategy::Auto, &mut ctx).unwrap();
        assert_eq!((o.cost, o.bounds.lower, o.bounds.upper, o.bounds.witness_cost), (0, 0, 0, 0));
    }

    #[test]
    fn optimize_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let (m, n) = (rng.gen_range(1..5), rng.gen_range(1..5));
            let a = random(&mut rng, m, n, 4);
            let (k, l) = (rng.gen_range(1..=m), rng.gen_range(1..=n));
            let mut ctx = SearchContext::default();
            let want = brute_force_optimal(&a, k, l, &mut ctx).unwrap().0;
            let o = optimize(&a, k, l, Strategy::Auto, &mut ctx).unwrap();
            assert_eq!(o.cost, want, "{a:?} {k} {l}");
            assert!(o.bounds.is_tight());
            assert!(o.bounds.lower <= want && want <= o.bounds.upper);
            assert!(o.bounds.witness_cost <= o.bounds.upper);
        }
    }

    #[test]
    fn side_bounds() {
        let mut ctx = SearchContext::default();
        // Rows 0 and 2 are close, row 1 is far from both.
        let a = IntMatrix::new(vec![vec![0, 0], vec![5, 9], vec![1, 0]]).unwrap();
        let s = side_bound(&a, 2, &mut ctx).unwrap();
        assert_eq!((s.lower, s.upper), (1, 1));
        let s = side_bound(&a, 1, &mut ctx).unwrap();
        assert_eq!(s.upper, 9);
        let s = side_bound(&a, 3, &mut ctx).unwrap();
        assert_eq!(s.upper, 0);
    }

    #[test]
    fn real_entries() {
        let r = RealMatrix::new(vec![vec![0.0, 0.4, 3.0], vec![0.2, 2.5, 2.9]]).unwrap();
        let mut ctx = SearchContext::default();
        let o = optimize_real(&r, 1, 2, Strategy::Auto, &mut ctx).unwrap();
        // Columns {0, 1} and {2}.
        assert!((o.cost - 2.5).abs() < 1e-12, "{o:?}");
        assert!((r.cost(&o.coclustering).unwrap() - 2.5).abs() < 1e-12);
        let inst = RealInstance::new(r, 1, 2, 2.45).unwrap();
        assert!(!decide_real(&inst, Strategy::Auto, &mut ctx).unwrap().is_feasible());
        assert_eq!(real_candidate_costs(&RealMatrix::new(vec![vec![1.0, 1.5]]).unwrap()), vec![0.0, 0.5]);
    }
}
