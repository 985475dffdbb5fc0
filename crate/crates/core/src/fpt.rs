//! Exact algorithms for a fixed row partition and for two row blocks at cost 1.

use std::collections::HashSet;

use crate::budget::SearchContext;
use crate::error::{invalid, Error, Result};
use crate::matrix::IntMatrix;
use crate::oracle::partition_labelings;
use crate::partition::{CoClustering, Partition};
use crate::sat::{solve_two_sat, ClusterBoundary, Cnf, Lit, VarMap};
use crate::special::solve_one_row_block;

fn tick(ctx: &mut SearchContext) -> Result<()> {
    ctx.stats.fpt_nodes += 1;
    if ctx.stats.fpt_nodes > ctx.budget.max_fpt_nodes {
        return Err(Error::BudgetExhausted(format!(
            "exact search exceeded {} nodes",
            ctx.budget.max_fpt_nodes
        )));
    }
    Ok(())
}

/// Per column and row block, the admissible lower bounds `[max - c, min]`.
struct Windows {
    k: usize,
    /// `lo[j * k + r]..=hi[j * k + r]`; empty when the column spans more than `c`.
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl Windows {
    fn new(matrix: &IntMatrix, row_labels: &[usize], k: usize, cols: &[usize], c: i64) -> Windows {
        let mut lo = vec![i64::MIN; cols.len() * k];
        let mut hi = vec![i64::MAX; cols.len() * k];
        for (x, &j) in cols.iter().enumerate() {
            for (i, &r) in row_labels.iter().enumerate() {
                let a = matrix.get(i, j);
                lo[x * k + r] = lo[x * k + r].max(a - c);
                hi[x * k + r] = hi[x * k + r].min(a);
            }
        }
        Windows { k, lo, hi }
    }

    fn fits(&self, x: usize, u: &[i64]) -> bool {
        let base = x * self.k;
        u.iter()
            .enumerate()
            .all(|(r, &v)| self.lo[base + r] <= v && v <= self.hi[base + r])
    }
}

/// Column grouping for a fixed row partition over the given columns, as labels
/// below `l`, or `None` if no cluster boundary admits all columns.
fn fixed_rows_on(
    matrix: &IntMatrix,
    row_labels: &[usize],
    k: usize,
    cols: &[usize],
    l: usize,
    c: i64,
    ctx: &mut SearchContext,
) -> Result<Option<Vec<usize>>> {
    let windows = Windows::new(matrix, row_labels, k, cols, c);
    let sigma = matrix.alphabet();
    let values = sigma.values();
    // Boundary columns admitting column `x`: all of Σ^k inside its windows.
    let candidates = |x: usize| -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for r in 0..k {
            let (lo, hi) = (windows.lo[x * k + r], windows.hi[x * k + r]);
            let start = values.partition_point(|&v| v < lo);
            let end = values.partition_point(|&v| v <= hi);
            let mut next = Vec::new();
            for prefix in &out {
                for &v in &values[start..end] {
                    let mut p = prefix.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    };
    if (0..cols.len()).any(|x| (0..k).any(|r| windows.lo[x * k + r] > windows.hi[x * k + r])) {
        return Ok(None);
    }

    // Set cover by branching on the first uncovered column.
    fn search(
        windows: &Windows,
        candidates: &dyn Fn(usize) -> Vec<Vec<i64>>,
        covered: &mut Vec<usize>,
        chosen: &mut Vec<Vec<i64>>,
        left: usize,
        ctx: &mut SearchContext,
    ) -> Result<bool> {
        tick(ctx)?;
        let Some(first) = covered.iter().position(|&c| c == 0) else {
            return Ok(true);
        };
        if left == 0 {
            return Ok(false);
        }
        let options = candidates(first);
        let reach: Vec<Vec<usize>> = options
            .iter()
            .map(|u| {
                (0..covered.len())
                    .filter(|&x| covered[x] == 0 && windows.fits(x, u))
                    .collect()
            })
            .collect();
        for (o, u) in options.iter().enumerate() {
            // Skip options whose reach another option strictly extends, or
            // equals with a lower position.
            let dominated = reach.iter().enumerate().any(|(p, other)| {
                p != o
                    && other.len() >= reach[o].len()
                    && (other.len() > reach[o].len() || p < o)
                    && reach[o].iter().all(|x| other.contains(x))
            });
            if dominated {
                continue;
            }
            for &x in &reach[o] {
                covered[x] += 1;
            }
            chosen.push(u.clone());
            if search(windows, candidates, covered, chosen, left - 1, ctx)? {
                return Ok(true);
            }
            chosen.pop();
            for &x in &reach[o] {
                covered[x] -= 1;
            }
        }
        Ok(false)
    }

    let mut covered = vec![0; cols.len()];
    let mut chosen = Vec::new();
    if !search(&windows, &candidates, &mut covered, &mut chosen, l, ctx)? {
        return Ok(None);
    }
    let labels = (0..cols.len())
        .map(|x| {
            chosen
                .iter()
                .position(|u| windows.fits(x, u))
                .expect("every column is covered")
        })
        .collect();
    Ok(Some(labels))
}

/// Decides whether the columns can be split into `l` blocks so that, together
/// with the given row partition, every cluster spans at most `c`.
///
/// Column `j` fits a boundary column `(u_1, ..., u_k)` when every entry of `j`
/// in row block `r` lies in `[u_r, u_r + c]`. The search picks at most `l`
/// boundary columns covering all matrix columns, branching over the boundary
/// columns that admit the first uncovered column. Each column then joins the
/// first chosen boundary column it fits.
pub fn solve_fixed_row_partition(
    matrix: &IntMatrix,
    rows: &Partition,
    l: usize,
    c: i64,
    ctx: &mut SearchContext,
) -> Result<Option<Partition>> {
    if rows.ground_size() != matrix.rows() {
        return Err(invalid(format!(
            "row partition covers {} rows, matrix has {}",
            rows.ground_size(),
            matrix.rows()
        )));
    }
    crate::instance::check_shape(matrix, rows.len(), l)?;
    let cols: Vec<usize> = (0..matrix.cols()).collect();
    let labels = fixed_rows_on(matrix, &rows.labels(), rows.len(), &cols, l, c, ctx)?;
    labels
        .map(|labels| Partition::from_labels(&labels).split_to(l))
        .transpose()
}

/// Occurrence counts of one column against a `2 x l` boundary with `c = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitWitness {
    pub column: usize,
    /// Whether the column fits each column block.
    pub fits: Vec<bool>,
    /// `(value, occurrences)` for every value present in the column, ascending.
    pub occurrences: Vec<(i64, usize)>,
}

/// `(α, β, γ)` of a block with bounds `(u_1, u_2)`, `|u_1 - u_2| = 1`: `α` lies
/// only in the first window, `β` in both, `γ` only in the second.
fn roles(u1: i64, u2: i64) -> (i64, i64, i64) {
    if u2 == u1 + 1 {
        (u1, u1 + 1, u1 + 2)
    } else {
        (u1 + 1, u1, u1 - 1)
    }
}

fn occurrences(column: &[i64]) -> Vec<(i64, usize)> {
    let mut v = column.to_vec();
    v.sort_unstable();
    let mut out: Vec<(i64, usize)> = Vec::new();
    for a in v {
        match out.last_mut() {
            Some((b, n)) if *b == a => *n += 1,
            _ => out.push((a, 1)),
        }
    }
    out
}

fn fits_block(occ: &[(i64, usize)], (u1, u2): (i64, i64), h1: usize, h2: usize) -> bool {
    let (alpha, beta, gamma) = roles(u1, u2);
    occ.iter().all(|&(a, n)| {
        (a == beta) || (a == alpha && n <= h1) || (a == gamma && n <= h2)
    })
}

fn check_pairs(pairs: &[(i64, i64)]) -> Result<()> {
    for (s, &(u1, u2)) in pairs.iter().enumerate() {
        if (u1 - u2).abs() != 1 {
            return Err(invalid(format!("block {} has bounds {u1}, {u2} that are not adjacent", s + 1)));
        }
        if pairs[..s].contains(&(u1, u2)) {
            return Err(invalid(format!("block {} repeats an earlier boundary column", s + 1)));
        }
    }
    Ok(())
}

/// Candidate blocks for one column, given as values; see [`two_candidate_blocks`].
fn candidates_for(column: &[i64], pairs: &[(i64, i64)], h1: usize) -> Option<(usize, usize)> {
    let m = column.len();
    let h2 = m - h1;
    let occ = occurrences(column);
    let a = occ[0].0;
    let b = occ[occ.len() - 1].0;
    let find = |target: (i64, i64)| {
        pairs
            .iter()
            .position(|&p| p == target)
            .filter(|&s| fits_block(&occ, pairs[s], h1, h2))
    };
    let pick = |x: Option<usize>, y: Option<usize>| match (x, y) {
        (Some(x), Some(y)) => Some((x, y)),
        (Some(x), None) | (None, Some(x)) => Some((x, x)),
        (None, None) => None,
    };
    match b - a {
        0 => pick(find((a - 1, a)), find((a, a - 1))),
        1 => {
            let first = find((a - 1, a)).or_else(|| find((a, b)));
            let second = find((a, a - 1)).or_else(|| find((b, a)));
            pick(first, second)
        }
        2 => pick(find((a, a + 1)), find((a + 1, a))),
        _ => None,
    }
}

/// Occurrence counts and fit flags of column `j` against `boundary`.
pub fn fit_witness(matrix: &IntMatrix, j: usize, boundary: &ClusterBoundary, h1: usize) -> Result<FitWitness> {
    let pairs = two_row_pairs(matrix, j, boundary, h1)?;
    let column: Vec<i64> = matrix.column(j).collect();
    let occ = occurrences(&column);
    let h2 = matrix.rows() - h1;
    Ok(FitWitness {
        column: j,
        fits: pairs.iter().map(|&p| fits_block(&occ, p, h1, h2)).collect(),
        occurrences: occ,
    })
}

fn two_row_pairs(matrix: &IntMatrix, j: usize, boundary: &ClusterBoundary, h1: usize) -> Result<Vec<(i64, i64)>> {
    if boundary.k() != 2 {
        return Err(invalid("candidate blocks need a boundary with two rows"));
    }
    if j >= matrix.cols() {
        return Err(invalid(format!("column {j} out of range")));
    }
    if h1 == 0 || h1 >= matrix.rows() {
        return Err(invalid(format!("height {h1} must lie strictly between 0 and {}", matrix.rows())));
    }
    let pairs: Vec<(i64, i64)> = (0..boundary.l()).map(|s| (boundary.get(0, s), boundary.get(1, s))).collect();
    check_pairs(&pairs)?;
    Ok(pairs)
}

/// At most two column blocks (0-based, possibly equal) to which column `j` can
/// be restricted when the first row block has `h1` rows, for `c = 1` and a
/// boundary whose columns are distinct and whose two bounds differ by one.
/// `None` if the column fits no block.
pub fn two_candidate_blocks(
    matrix: &IntMatrix,
    j: usize,
    boundary: &ClusterBoundary,
    h1: usize,
) -> Result<Option<(usize, usize)>> {
    let pairs = two_row_pairs(matrix, j, boundary, h1)?;
    let column: Vec<i64> = matrix.column(j).collect();
    Ok(candidates_for(&column, &pairs, h1))
}

/// Switches for [`solve_k2_cost1_with`], used to exercise individual branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K2Cost1Options {
    /// Enumerate all row bipartitions when `2^m < |Σ|^l`.
    pub allow_row_enumeration: bool,
    /// Try a column block with equal windows.
    pub equal_bounds: bool,
    /// Try a column block with disjoint windows.
    pub non_overlapping: bool,
}

impl Default for K2Cost1Options {
    fn default() -> Self {
        K2Cost1Options {
            allow_row_enumeration: true,
            equal_bounds: true,
            non_overlapping: true,
        }
    }
}

/// Two row blocks, `l` column blocks, cost 1.
pub fn solve_k2_cost1(matrix: &IntMatrix, l: usize, ctx: &mut SearchContext) -> Result<Option<CoClustering>> {
    solve_k2_cost1_with(matrix, l, K2Cost1Options::default(), ctx)
}

/// [`solve_k2_cost1`] with explicit options.
///
/// Works by induction on `l` with "at most" block counts, splitting at the end:
/// one column block is the transposed greedy; when row bipartitions are few
/// they are all tried; otherwise some solution has a column block whose two
/// windows are equal (strip the columns it can take and recurse), disjoint
/// (one of its columns fixes the rows), or only properly overlapping (a 2-SAT
/// formula per boundary and first-block height).
pub fn solve_k2_cost1_with(
    matrix: &IntMatrix,
    l: usize,
    options: K2Cost1Options,
    ctx: &mut SearchContext,
) -> Result<Option<CoClustering>> {
    crate::instance::check_shape(matrix, 2, l)?;
    let cols: Vec<usize> = (0..matrix.cols()).collect();
    let Some((rows, col_labels)) = k2_rec(matrix, &cols, l, options, ctx)? else {
        return Ok(None);
    };
    Ok(Some(CoClustering::new(
        Partition::from_labels(&rows).split_to(2)?,
        Partition::from_labels(&col_labels).split_to(l)?,
    )))
}

type Labels = (Vec<usize>, Vec<usize>);

fn k2_rec(
    a: &IntMatrix,
    cols: &[usize],
    l: usize,
    options: K2Cost1Options,
    ctx: &mut SearchContext,
) -> Result<Option<Labels>> {
    tick(ctx)?;
    let m = a.rows();
    if cols.is_empty() {
        return Ok(Some((vec![0; m], Vec::new())));
    }
    if l == 0 {
        return Ok(None);
    }
    let sub = a.select_columns(cols)?;
    if l == 1 {
        return Ok(solve_one_row_block(&sub.transpose(), 2, 1)?
            .map(|(rows, _)| (rows.labels(), vec![0; cols.len()])));
    }
    let sigma = sub.alphabet();
    let values = sigma.values();

    // Few row bipartitions: try them all.
    let row_parts = 1u128.checked_shl(m as u32).unwrap_or(u128::MAX);
    let boundaries = (values.len() as u128).saturating_pow(l as u32);
    if options.allow_row_enumeration && row_parts < boundaries {
        for rows in partition_labelings(m, 2).filter(|r| r.contains(&1)) {
            if let Some(labels) = fixed_rows_on(&sub, &rows, 2, &(0..cols.len()).collect::<Vec<_>>(), l, 1, ctx)? {
                return Ok(Some((rows, labels)));
            }
        }
        return Ok(None);
    }

    // A block with equal windows [u, u+1] takes every column inside them.
    let mut tried = HashSet::new();
    for &u in values.iter().filter(|_| options.equal_bounds) {
        let (inside, outside): (Vec<usize>, Vec<usize>) = cols.iter().partition(|&&j| {
            let (lo, hi) = a.column_range(j);
            u <= lo && hi <= u + 1
        });
        if inside.is_empty() || !tried.insert(inside.clone()) {
            continue;
        }
        if let Some((rows, sub_labels)) = k2_rec(a, &outside, l - 1, options, ctx)? {
            let mut labels = vec![l - 1; cols.len()];
            let mut it = sub_labels.into_iter();
            for (x, j) in cols.iter().enumerate() {
                if outside.contains(j) {
                    labels[x] = it.next().expect("one label per outside column");
                }
            }
            return Ok(Some((rows, labels)));
        }
    }

    // A block with disjoint windows: its lower window ends below u, the
    // upper one starts at u, so any of its columns splits the rows at u.
    let all: Vec<usize> = (0..cols.len()).collect();
    let mut seen = HashSet::new();
    for &u in values.iter().filter(|_| options.non_overlapping) {
        for x in 0..cols.len() {
            let rows: Vec<usize> = (0..m).map(|i| usize::from(sub.get(i, x) >= u)).collect();
            if !rows.contains(&0) || !rows.contains(&1) || !seen.insert(rows.clone()) {
                continue;
            }
            if let Some(labels) = fixed_rows_on(&sub, &rows, 2, &all, l, 1, ctx)? {
                return Ok(Some((rows, labels)));
            }
        }
    }

    // Only properly overlapping blocks: distinct bound pairs differing by one.
    let pairs: Vec<(i64, i64)> = values
        .iter()
        .flat_map(|&u1| values.iter().map(move |&u2| (u1, u2)))
        .filter(|&(u1, u2)| (u1 - u2).abs() == 1)
        .collect();
    let width = l.min(pairs.len());
    if width == 0 {
        return Ok(None);
    }
    let mut combo: Vec<usize> = (0..width).collect();
    loop {
        let chosen: Vec<(i64, i64)> = combo.iter().map(|&p| pairs[p]).collect();
        for h1 in 1..m {
            tick(ctx)?;
            if let Some(found) = overlapping_formula(&sub, &chosen, h1)? {
                return Ok(Some(found));
            }
        }
        if !next_combination(&mut combo, pairs.len()) {
            return Ok(None);
        }
    }
}

/// Advances a strictly increasing index vector to the next combination.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let w = combo.len();
    for i in (0..w).rev() {
        if combo[i] < n - w + i {
            combo[i] += 1;
            for t in i + 1..w {
                combo[t] = combo[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The restricted 2-SAT formula for one boundary and height; decodes a model.
fn overlapping_formula(sub: &IntMatrix, pairs: &[(i64, i64)], h1: usize) -> Result<Option<Labels>> {
    let (m, n, w) = (sub.rows(), sub.cols(), pairs.len());
    let mut allowed = Vec::with_capacity(n);
    for j in 0..n {
        let column: Vec<i64> = sub.column(j).collect();
        match candidates_for(&column, pairs, h1) {
            Some(c) => allowed.push(c),
            None => return Ok(None),
        }
    }
    let vm = VarMap::new(m, n, 2, w);
    let mut cnf = Cnf::new(vm.num_vars());
    for i in 0..m {
        cnf.push_binary(Lit::pos(vm.row_var(i, 0)), Lit::pos(vm.row_var(i, 1)));
    }
    for (j, &(s1, s2)) in allowed.iter().enumerate() {
        cnf.push_binary(Lit::pos(vm.col_var(j, s1)), Lit::pos(vm.col_var(j, s2)));
    }
    for i in 0..m {
        for j in 0..n {
            let x = sub.get(i, j);
            for (s, &(u1, u2)) in pairs.iter().enumerate() {
                for (r, u) in [(0, u1), (1, u2)] {
                    if x < u || x > u + 1 {
                        cnf.push_binary(Lit::neg(vm.row_var(i, r)), Lit::neg(vm.col_var(j, s)));
                    }
                }
            }
        }
    }
    let Some(model) = solve_two_sat(&cnf)? else {
        return Ok(None);
    };
    let rows = (0..m)
        .map(|i| usize::from(!model.value(vm.row_var(i, 0))))
        .collect();
    let cols = (0..n)
        .map(|j| {
            (0..w)
                .find(|&s| model.value(vm.col_var(j, s)))
                .ok_or_else(|| Error::Internal(format!("column {} has no block", j + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some((rows, cols)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{cost, Instance};
    use crate::oracle::brute_force_decide;

    fn mat(rows: Vec<Vec<i64>>) -> IntMatrix {
        IntMatrix::new(rows).unwrap()
    }

    fn small() -> IntMatrix {
        mat(vec![vec![0, 4, 3, 0], vec![2, 2, 1, 3], vec![1, 3, 4, 1]])
    }

    #[test]
    fn fixed_rows_examples() {
        let mut ctx = SearchContext::default();
        let rows = Partition::from_one_based(3, &[vec![2], vec![1, 3]]).unwrap();
        let cols = solve_fixed_row_partition(&small(), &rows, 2, 1, &mut ctx).unwrap().unwrap();
        assert_eq!(cols.to_one_based(), vec![vec![1, 4], vec![2, 3]]);

        let constant = IntMatrix::constant(3, 4, 2).unwrap();
        let rows = Partition::from_one_based(3, &[vec![1, 3], vec![2]]).unwrap();
        let cols = solve_fixed_row_partition(&constant, &rows, 1, 0, &mut ctx).unwrap().unwrap();
        assert_eq!(cols.len(), 1);

        let pair = mat(vec![vec![0, 2]]);
        let rows = Partition::whole(1);
        assert!(solve_fixed_row_partition(&pair, &rows, 1, 1, &mut ctx).unwrap().is_none());
    }

    #[test]
    fn candidate_examples() {
        // Column (0,2,2), blocks (0,1) and (1,0), h1 = 1.
        let a = mat(vec![vec![0], vec![2], vec![2]]);
        let b = ClusterBoundary::new(vec![vec![0, 1, 5], vec![1, 0, 4]]).unwrap();
        // With h1 = 1 block (1,0) would need both 2s in the first row block.
        assert_eq!(two_candidate_blocks(&a, 0, &b, 1).unwrap(), Some((0, 0)));
        let w = fit_witness(&a, 0, &b, 1).unwrap();
        assert_eq!(w.occurrences, vec![(0, 1), (2, 2)]);
        assert_eq!(w.fits, vec![true, false, false]);
        assert_eq!(two_candidate_blocks(&a, 0, &b, 2).unwrap(), Some((1, 1)));
        let four = mat(vec![vec![0], vec![2], vec![2], vec![0]]);
        assert_eq!(two_candidate_blocks(&four, 0, &b, 2).unwrap(), Some((0, 1)));

        let fives = mat(vec![vec![5], vec![5], vec![5]]);
        let b = ClusterBoundary::new(vec![vec![0, 5], vec![1, 6]]).unwrap();
        assert_eq!(two_candidate_blocks(&fives, 0, &b, 1).unwrap(), None);

        let wide = mat(vec![vec![0], vec![3]]);
        let b = ClusterBoundary::new(vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert_eq!(two_candidate_blocks(&wide, 0, &b, 1).unwrap(), None);
    }

    #[test]
    fn candidate_preconditions() {
        let a = mat(vec![vec![0], vec![1]]);
        let not_adjacent = ClusterBoundary::new(vec![vec![0], vec![2]]).unwrap();
        assert!(two_candidate_blocks(&a, 0, &not_adjacent, 1).is_err());
        let repeated = ClusterBoundary::new(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert!(two_candidate_blocks(&a, 0, &repeated, 1).is_err());
        let ok = ClusterBoundary::new(vec![vec![0], vec![1]]).unwrap();
        assert!(two_candidate_blocks(&a, 0, &ok, 0).is_err());
        assert!(two_candidate_blocks(&a, 0, &ok, 2).is_err());
    }

    #[test]
    fn spread_one_prefers_the_lower_pair() {
        // Values {1, 2}: s1 = (0,1), s2 = (1,0), s3 = (1,2), s4 = (2,1).
        let a = mat(vec![vec![1], vec![2], vec![2]]);
        let b = ClusterBoundary::new(vec![vec![1, 2, 0, 1], vec![2, 1, 1, 0]]).unwrap();
        // h1 = 1: s1 needs occ_2 <= 2, s2 needs occ_2 <= 1 (fails), s4 needs occ_1 <= 2.
        assert_eq!(two_candidate_blocks(&a, 0, &b, 1).unwrap(), Some((2, 1)));
    }

    #[test]
    fn k2_cost1_examples() {
        let mut ctx = SearchContext::default();
        let cc = solve_k2_cost1(&small(), 2, &mut ctx).unwrap().unwrap();
        assert!(cost(&small(), &cc).unwrap() <= 1);
        assert_eq!(cc.shape(), (2, 2));

        let x = mat(vec![vec![0, 1, 2], vec![2, 1, 0]]);
        let expected = brute_force_decide(&Instance::new(x.clone(), 2, 2, 1).unwrap(), &mut ctx)
            .unwrap()
            .is_some();
        assert_eq!(solve_k2_cost1(&x, 2, &mut ctx).unwrap().is_some(), expected);

        let constant = IntMatrix::constant(2, 3, 4).unwrap();
        assert!(solve_k2_cost1(&constant, 1, &mut ctx).unwrap().is_some());
    }

    #[test]
    fn combinations() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }
}
