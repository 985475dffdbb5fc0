//! Polynomial-time special cases: cost zero, binary alphabets, a single row
//! block, two row and two column blocks, and ternary alphabets with two row
//! blocks.

use std::collections::{HashMap, HashSet};

use crate::budget::SearchStats;
use crate::error::{invalid, Result};
use crate::instance::{check_shape, Instance};
use crate::matrix::IntMatrix;
use crate::partition::{CoClustering, Partition};
use crate::sat::{boundary_cnf_unchecked, decode_assignment, solve_cnf, ClusterBoundary};

/// Balanced contiguous blocks; the witness whenever `c` covers the whole alphabet.
pub fn trivial_coclustering(matrix: &IntMatrix, k: usize, l: usize) -> Result<CoClustering> {
    check_shape(matrix, k, l)?;
    Ok(CoClustering::new(
        Partition::balanced(matrix.rows(), k)?,
        Partition::balanced(matrix.cols(), l)?,
    ))
}

fn group_identical<'a>(lines: impl Iterator<Item = Vec<i64>> + 'a) -> Vec<usize> {
    let mut ids: HashMap<Vec<i64>, usize> = HashMap::new();
    lines
        .map(|line| {
            let next = ids.len();
            *ids.entry(line).or_insert(next)
        })
        .collect()
}

/// A cost-0 co-clustering exists iff there are at most `k` distinct rows and
/// at most `l` distinct columns. Identical lines share a block; blocks are then
/// split to reach exactly `k` and `l`.
pub fn solve_cost_zero(matrix: &IntMatrix, k: usize, l: usize) -> Result<Option<CoClustering>> {
    check_shape(matrix, k, l)?;
    let row_ids = group_identical((0..matrix.rows()).map(|i| matrix.row(i).to_vec()));
    let col_ids = group_identical((0..matrix.cols()).map(|j| matrix.column(j).collect()));
    let distinct_rows = row_ids.iter().max().map_or(0, |&x| x + 1);
    let distinct_cols = col_ids.iter().max().map_or(0, |&x| x + 1);
    if distinct_rows > k || distinct_cols > l {
        return Ok(None);
    }
    Ok(Some(CoClustering::new(
        Partition::from_labels(&row_ids).split_to(k)?,
        Partition::from_labels(&col_ids).split_to(l)?,
    )))
}

/// Alphabets of size at most two: either `c` covers both values or the answer
/// is the cost-zero one.
pub fn solve_binary(instance: &Instance) -> Result<Option<CoClustering>> {
    let a = instance.matrix();
    let sigma = a.alphabet();
    if sigma.len() > 2 {
        return Err(invalid(format!(
            "binary solver needs at most two distinct values, found {}",
            sigma.len()
        )));
    }
    if instance.c() >= sigma.span() {
        return trivial_coclustering(a, instance.k(), instance.l()).map(Some);
    }
    solve_cost_zero(a, instance.k(), instance.l())
}

/// One row block: the greedy column grouping.
///
/// Columns are seeded in order of their minimum (lowest index on ties); each
/// seed absorbs every unassigned column whose maximum is within `c` of the
/// seed's minimum. Returns the partition split to exactly `l` blocks, together
/// with the number of blocks the greedy needed, or `None` if that exceeds `l`
/// or some column alone spans more than `c`.
pub fn solve_one_row_block(matrix: &IntMatrix, l: usize, c: i64) -> Result<Option<(Partition, usize)>> {
    check_shape(matrix, 1, l)?;
    let n = matrix.cols();
    let ranges: Vec<(i64, i64)> = (0..n).map(|j| matrix.column_range(j)).collect();
    if ranges.iter().any(|&(lo, hi)| hi - lo > c) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| (ranges[j].0, j));
    let mut label = vec![usize::MAX; n];
    let mut blocks = 0;
    for &seed in &order {
        if label[seed] != usize::MAX {
            continue;
        }
        if blocks == l {
            return Ok(None);
        }
        let limit = ranges[seed].0 + c;
        for j in 0..n {
            if label[j] == usize::MAX && ranges[j].1 <= limit {
                label[j] = blocks;
            }
        }
        blocks += 1;
    }
    Ok(Some((Partition::from_labels(&label).split_to(l)?, blocks)))
}

/// Tries boundaries in order; the first satisfiable boundary formula wins.
/// Decoded partitions are split to `k` and `l` blocks.
pub(crate) fn first_satisfiable_boundary(
    matrix: &IntMatrix,
    k: usize,
    l: usize,
    c: i64,
    boundaries: impl IntoIterator<Item = ClusterBoundary>,
    stats: &mut SearchStats,
) -> Result<Option<CoClustering>> {
    for boundary in boundaries {
        let (cnf, vm) = boundary_cnf_unchecked(matrix, boundary.k(), boundary.l(), c, &boundary);
        let result = solve_cnf(&cnf, u64::MAX)?;
        stats.boundaries += 1;
        stats.sat_calls += 1;
        stats.sat_decisions += result.decisions;
        if let Some(model) = result.assignment {
            let cc = decode_assignment(&model, &vm)?;
            return Ok(Some(CoClustering::new(cc.rows.split_to(k)?, cc.cols.split_to(l)?)));
        }
    }
    Ok(None)
}

/// Boundaries of a 2x2 instance that contain both `min Σ` and
/// `u* = min {a ∈ Σ : a >= max Σ - c}`: the forced values are placed first,
/// then the remaining cells run through Σ in row-major order.
fn forced_2x2_boundaries(sigma: &[i64], c: i64) -> Vec<ClusterBoundary> {
    let forced = crate::sat::forced_values(sigma, c);
    let mut placements: Vec<Vec<Option<i64>>> = Vec::new();
    for p in 0..4 {
        if forced.len() == 1 {
            let mut cells = vec![None; 4];
            cells[p] = Some(forced[0]);
            placements.push(cells);
            continue;
        }
        for q in (0..4).filter(|&q| q != p) {
            let mut cells = vec![None; 4];
            cells[p] = Some(forced[0]);
            cells[q] = Some(forced[1]);
            placements.push(cells);
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for cells in placements {
        let free: Vec<usize> = (0..4).filter(|&x| cells[x].is_none()).collect();
        let combos = sigma.len().pow(free.len() as u32);
        for code in 0..combos {
            let mut values: Vec<i64> = cells.iter().map(|v| v.unwrap_or(0)).collect();
            let mut rest = code;
            for &x in free.iter().rev() {
                values[x] = sigma[rest % sigma.len()];
                rest /= sigma.len();
            }
            if seen.insert(values.clone()) {
                out.push(ClusterBoundary::from_row_major(2, 2, values).expect("2x2"));
            }
        }
    }
    out
}

/// Two row blocks and two column blocks: at most `12 |Σ|²` boundaries, each a
/// formula with only binary clauses.
pub fn solve_2x2(matrix: &IntMatrix, c: i64) -> Result<Option<CoClustering>> {
    solve_2x2_counted(matrix, c, &mut SearchStats::default())
}

pub(crate) fn solve_2x2_counted(matrix: &IntMatrix, c: i64, stats: &mut SearchStats) -> Result<Option<CoClustering>> {
    check_shape(matrix, 2, 2)?;
    if c < 0 {
        return Err(invalid("cost budget must be non-negative"));
    }
    let sigma = matrix.alphabet();
    let boundaries = forced_2x2_boundaries(sigma.values(), c);
    first_satisfiable_boundary(matrix, 2, 2, c, boundaries, stats)
}

/// Two row blocks over a three-letter alphabet `α < β < γ`.
///
/// * `c >= γ - α`: anything works.
/// * `c` below both gaps: cost zero.
/// * `c` below one gap only: the pair with the larger gap must be separated as
///   well as `(α, γ)`, so after merging the middle value into its close
///   neighbour the question becomes one of cost zero.
/// * `c` at least both gaps but below `γ - α`: only `(α, γ)` must be
///   separated. With one column block the transposed greedy decides, with two
///   the 2x2 solver does. With more, every cluster lies in `[α, β]` or
///   `[β, γ]`, so a column block has one of four window types and merging
///   blocks of equal type keeps the cost. Hence at most `min(l, 4)` blocks are
///   needed, and the `{α, β}`-valued boundaries of that shape are tried.
pub fn solve_k2_ternary(matrix: &IntMatrix, l: usize, c: i64) -> Result<Option<CoClustering>> {
    solve_k2_ternary_counted(matrix, l, c, &mut SearchStats::default())
}

pub(crate) fn solve_k2_ternary_counted(
    matrix: &IntMatrix,
    l: usize,
    c: i64,
    stats: &mut SearchStats,
) -> Result<Option<CoClustering>> {
    check_shape(matrix, 2, l)?;
    let sigma = matrix.alphabet();
    let &[alpha, beta, gamma] = sigma.values() else {
        return Err(invalid(format!(
            "ternary solver needs exactly three distinct values, found {}",
            sigma.len()
        )));
    };
    let (low_gap, high_gap) = (beta - alpha, gamma - beta);
    if c >= gamma - alpha {
        return trivial_coclustering(matrix, 2, l).map(Some);
    }
    if c < low_gap.min(high_gap) {
        return solve_cost_zero(matrix, 2, l);
    }
    if c < low_gap.max(high_gap) {
        let relabeled = if low_gap > c {
            matrix.map(|a| i64::from(a != alpha))
        } else {
            matrix.map(|a| i64::from(a == gamma))
        };
        return solve_cost_zero(&relabeled, 2, l);
    }
    match l {
        1 => Ok(solve_one_row_block(&matrix.transpose(), 2, c)?
            .map(|(rows, _)| CoClustering::new(rows, Partition::whole(matrix.cols())))),
        2 => solve_2x2_counted(matrix, c, stats),
        _ => {
            let width = l.min(4);
            let cells = 2 * width;
            let boundaries = (0u32..1 << cells).map(|mask| {
                let values = (0..cells)
                    .map(|x| if mask >> (cells - 1 - x) & 1 == 1 { beta } else { alpha })
                    .collect();
                ClusterBoundary::from_row_major(2, width, values).expect("2 x width")
            });
            first_satisfiable_boundary(matrix, 2, l, c, boundaries, stats)
        }
    }
}
