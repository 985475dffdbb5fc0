//! Brute-force reference solver for small instances.

use crate::budget::SearchContext;
use crate::error::{Error, Result};
use crate::instance::{check_shape, Instance};
use crate::matrix::IntMatrix;
use crate::partition::{CoClustering, Partition};

/// Set partitions of `0..n` with at most `max_blocks` blocks, as restricted
/// growth strings in lexicographic order.
#[derive(Debug, Clone)]
pub struct RgsPartitions {
    labels: Vec<usize>,
    max_blocks: usize,
    done: bool,
}

impl RgsPartitions {
    /// The current restricted growth string.
    fn advance(&mut self) {
        let n = self.labels.len();
        // prefix_max[i] = max(labels[..i]) + 1, the label bound at position i.
        let mut prefix = vec![0; n];
        let mut top = 0;
        for i in 0..n {
            prefix[i] = top;
            top = top.max(self.labels[i] + 1);
        }
        for i in (1..n).rev() {
            if self.labels[i] < prefix[i] && self.labels[i] + 1 < self.max_blocks {
                self.labels[i] += 1;
                for x in &mut self.labels[i + 1..] {
                    *x = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for RgsPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.labels.clone();
        self.advance();
        Some(current)
    }
}

/// Labelings of `0..n` with between one and `max_blocks` blocks, each set
/// partition exactly once.
pub fn partition_labelings(n: usize, max_blocks: usize) -> RgsPartitions {
    RgsPartitions {
        labels: vec![0; n],
        max_blocks: max_blocks.max(1),
        done: n == 0,
    }
}

/// Every set partition of `0..n` into at most `max_blocks` non-empty blocks.
pub fn enumerate_partitions(n: usize, max_blocks: usize) -> impl Iterator<Item = Partition> {
    partition_labelings(n, max_blocks).map(|labels| Partition::from_labels(&labels))
}

/// Partitions with exactly `blocks` blocks, as label vectors.
fn exact_labelings(n: usize, blocks: usize) -> impl Iterator<Item = Vec<usize>> {
    partition_labelings(n, blocks).filter(move |l| l.iter().max().map_or(0, |&x| x + 1) == blocks)
}

/// Stirling number of the second kind, saturating at `u128::MAX`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = (j as u128).saturating_mul(row[j]).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

fn check_space(m: usize, n: usize, k: usize, l: usize, ctx: &SearchContext) -> Result<()> {
    let space = stirling2(m, k).saturating_mul(stirling2(n, l));
    if space > u128::from(ctx.budget.max_oracle_space) {
        return Err(Error::TooLarge(format!(
            "oracle ({space} partition pairs exceed the cap of {})",
            ctx.budget.max_oracle_space
        )));
    }
    Ok(())
}

/// Calls `visit` with every exact-count co-clustering and its cost, stopping
/// early when `visit` returns true.
fn scan(
    a: &IntMatrix,
    k: usize,
    l: usize,
    ctx: &mut SearchContext,
    mut visit: impl FnMut(&[usize], &[usize], i64) -> bool,
) -> Result<()> {
    check_shape(a, k, l)?;
    check_space(a.rows(), a.cols(), k, l, ctx)?;
    let (m, n) = (a.rows(), a.cols());
    let col_parts: Vec<Vec<usize>> = exact_labelings(n, l).collect();
    let mut lo = vec![0i64; k * n];
    let mut hi = vec![0i64; k * n];
    for rows in exact_labelings(m, k) {
        // Column ranges restricted to each row block.
        lo.fill(i64::MAX);
        hi.fill(i64::MIN);
        for i in 0..m {
            let base = rows[i] * n;
            for (j, &x) in a.row(i).iter().enumerate() {
                lo[base + j] = lo[base + j].min(x);
                hi[base + j] = hi[base + j].max(x);
            }
        }
        let mut clo = vec![0i64; k * l];
        let mut chi = vec![0i64; k * l];
        for cols in &col_parts {
            ctx.stats.partitions += 1;
            clo.fill(i64::MAX);
            chi.fill(i64::MIN);
            for r in 0..k {
                for j in 0..n {
                    let cell = r * l + cols[j];
                    clo[cell] = clo[cell].min(lo[r * n + j]);
                    chi[cell] = chi[cell].max(hi[r * n + j]);
                }
            }
            let cost = clo.iter().zip(&chi).map(|(&x, &y)| y - x).max().unwrap_or(0);
            if visit(&rows, cols, cost) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn from_labels(rows: &[usize], cols: &[usize]) -> CoClustering {
    CoClustering::new(Partition::from_labels(rows), Partition::from_labels(cols))
}

/// Exhaustive decision over all partitions with exactly `k` and `l` blocks.
/// Returns the first feasible co-clustering in enumeration order.
pub fn brute_force_decide(instance: &Instance, ctx: &mut SearchContext) -> Result<Option<CoClustering>> {
    let mut found = None;
    scan(instance.matrix(), instance.k(), instance.l(), ctx, |rows, cols, cost| {
        if cost <= instance.c() {
            found = Some(from_labels(rows, cols));
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

/// Exhaustive minimum cost over all `(k, l)`-co-clusterings, with a witness.
pub fn brute_force_optimal(
    matrix: &IntMatrix,
    k: usize,
    l: usize,
    ctx: &mut SearchContext,
) -> Result<(i64, CoClustering)> {
    let mut best: Option<(i64, Vec<usize>, Vec<usize>)> = None;
    scan(matrix, k, l, ctx, |rows, cols, cost| {
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, rows.to_vec(), cols.to_vec()));
        }
        cost == 0
    })?;
    let (cost, rows, cols) = best.ok_or_else(|| Error::Internal("no co-clustering enumerated".into()))?;
    Ok((cost, from_labels(&rows, &cols)))
}
