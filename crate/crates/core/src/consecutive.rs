//! Consecutive co-clustering: row and column blocks are contiguous ranges.

use serde::{Deserialize, Serialize};

use crate::budget::SearchContext;
use crate::error::{invalid, Error, Result};
use crate::instance::{candidate_costs, check_shape};
use crate::matrix::IntMatrix;
use crate::partition::{CoClustering, Partition};

/// Cut positions of a consecutive co-clustering. Each cut is the 0-based index
/// of the first line of a new block, so `rows = [1]` splits row 0 from the rest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CutSet {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

fn check_cuts(cuts: &[usize], size: usize, what: &str) -> Result<()> {
    if cuts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid(format!("{what} cuts must be strictly increasing")));
    }
    if cuts.iter().any(|&x| x == 0 || x >= size) {
        return Err(invalid(format!("{what} cuts must lie in 1..{size}")));
    }
    Ok(())
}

impl CutSet {
    pub fn new(m: usize, n: usize, rows: Vec<usize>, cols: Vec<usize>) -> Result<CutSet> {
        check_cuts(&rows, m, "row")?;
        check_cuts(&cols, n, "column")?;
        Ok(CutSet { rows, cols })
    }

    /// Cuts given as 1-based first lines of blocks, each in `2..=m` (`2..=n`).
    pub fn from_one_based(m: usize, n: usize, rows: &[usize], cols: &[usize]) -> Result<CutSet> {
        let down = |v: &[usize]| v.iter().map(|&x| x.checked_sub(1).unwrap_or(usize::MAX)).collect();
        CutSet::new(m, n, down(rows), down(cols))
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn to_one_based(&self) -> (Vec<usize>, Vec<usize>) {
        let up = |v: &[usize]| v.iter().map(|x| x + 1).collect();
        (up(&self.rows), up(&self.cols))
    }

    pub fn block_counts(&self) -> (usize, usize) {
        (self.rows.len() + 1, self.cols.len() + 1)
    }
}

fn ranges(cuts: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(0);
    bounds.extend_from_slice(cuts);
    bounds.push(size);
    bounds.windows(2).map(|w| (w[0]..w[1]).collect()).collect()
}

/// The contiguous co-clustering induced by `cuts` on an `m x n` matrix.
pub fn cutset_to_coclustering(cuts: &CutSet, m: usize, n: usize) -> Result<CoClustering> {
    check_cuts(&cuts.rows, m, "row")?;
    check_cuts(&cuts.cols, n, "column")?;
    Ok(CoClustering::new(
        Partition::new(m, ranges(&cuts.rows, m))?,
        Partition::new(n, ranges(&cuts.cols, n))?,
    ))
}

/// Range min/max over the columns of a fixed horizontal strip.
#[derive(Debug, Clone)]
pub struct StripTable {
    lo: Vec<Vec<i64>>,
    hi: Vec<Vec<i64>>,
}

impl StripTable {
    /// Table for rows `top..bottom` of `matrix`.
    pub fn new(matrix: &IntMatrix, top: usize, bottom: usize) -> StripTable {
        assert!(top < bottom && bottom <= matrix.rows());
        let n = matrix.cols();
        let mut lo0 = matrix.row(top).to_vec();
        let mut hi0 = lo0.clone();
        for i in top + 1..bottom {
            for (j, &x) in matrix.row(i).iter().enumerate() {
                lo0[j] = lo0[j].min(x);
                hi0[j] = hi0[j].max(x);
            }
        }
        let (mut lo, mut hi) = (vec![lo0], vec![hi0]);
        let mut width = 1;
        while 2 * width <= n {
            let (pl, ph) = (lo.last().unwrap(), hi.last().unwrap());
            let nl = (0..=n - 2 * width).map(|j| pl[j].min(pl[j + width])).collect();
            let nh = (0..=n - 2 * width).map(|j| ph[j].max(ph[j + width])).collect();
            lo.push(nl);
            hi.push(nh);
            width *= 2;
        }
        StripTable { lo, hi }
    }

    /// `(min, max)` over columns `left..right` of the strip.
    pub fn range(&self, left: usize, right: usize) -> (i64, i64) {
        debug_assert!(left < right);
        let level = (usize::BITS - 1 - (right - left).leading_zeros()) as usize;
        let far = right - (1 << level);
        (
            self.lo[level][left].min(self.lo[level][far]),
            self.hi[level][left].max(self.hi[level][far]),
        )
    }

    pub fn spread(&self, left: usize, right: usize) -> i64 {
        let (lo, hi) = self.range(left, right);
        hi - lo
    }
}

/// Binomial coefficient, saturating.
pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Advances `c` to the next `r`-subset of `1..size` in lexicographic order.
fn next_cuts(c: &mut [usize], size: usize) -> bool {
    let r = c.len();
    for i in (0..r).rev() {
        // Largest value position i may take is size - (r - i).
        if c[i] < size - (r - i) {
            c[i] += 1;
            for t in i + 1..r {
                c[t] = c[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn first_cuts(r: usize) -> Vec<usize> {
    (1..=r).collect()
}

/// Exhaustive search for a consecutive `(k, l)`-co-clustering of cost at most
/// `c`. Row cut sets are the outer loop and column cut sets the inner loop, both
/// in lexicographic order; the first feasible cut set is returned.
pub fn solve_consecutive(
    matrix: &IntMatrix,
    k: usize,
    l: usize,
    c: i64,
    ctx: &mut SearchContext,
) -> Result<Option<CutSet>> {
    check_shape(matrix, k, l)?;
    let (m, n) = (matrix.rows(), matrix.cols());
    let row_sets = binomial(m - 1, k - 1);
    let col_sets = binomial(n - 1, l - 1);
    let total = row_sets.saturating_mul(col_sets);
    if total > ctx.budget.max_cut_sets {
        return Err(Error::BudgetExhausted(format!(
            "{total} consecutive cut sets exceed the cap of {}",
            ctx.budget.max_cut_sets
        )));
    }
    let mut rcuts = first_cuts(k - 1);
    loop {
        let mut bounds = vec![0];
        bounds.extend_from_slice(&rcuts);
        bounds.push(m);
        let strips: Vec<StripTable> = bounds.windows(2).map(|w| StripTable::new(matrix, w[0], w[1])).collect();
        let mut ccuts = first_cuts(l - 1);
        loop {
            ctx.stats.cut_sets += 1;
            let mut left = 0;
            let ok = ccuts.iter().chain(std::iter::once(&n)).all(|&right| {
                let fine = strips.iter().all(|s| s.spread(left, right) <= c);
                left = right;
                fine
            });
            if ok {
                return Ok(Some(CutSet {
                    rows: rcuts,
                    cols: ccuts,
                }));
            }
            if !next_cuts(&mut ccuts, n) {
                break;
            }
        }
        if !next_cuts(&mut rcuts, m) {
            return Ok(None);
        }
    }
}

/// Minimum consecutive cost and a witness, by binary search over the candidate costs.
pub fn optimize_consecutive(
    matrix: &IntMatrix,
    k: usize,
    l: usize,
    ctx: &mut SearchContext,
) -> Result<(i64, CutSet)> {
    check_shape(matrix, k, l)?;
    let costs = candidate_costs(matrix);
    // The largest candidate is the span, which every cut set meets.
    let (mut lo, mut hi) = (0, costs.len() - 1);
    let mut best = solve_consecutive(matrix, k, l, costs[hi], ctx)?
        .ok_or_else(|| Error::Internal("span cost infeasible".into()))?;
    while lo < hi {
        let mid = (lo + hi) / 2;
        match solve_consecutive(matrix, k, l, costs[mid], ctx)? {
            Some(cuts) => {
                best = cuts;
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    Ok((costs[hi], best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::instance::cost;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn separation() -> IntMatrix {
        IntMatrix::new(vec![
            vec![0, 1, 0, 1, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 2, 1, 1, 0],
            vec![0, 1, 1, 1, 1, 0, 1, 1],
            vec![1, 2, 1, 1, 1, 1, 2, 1],
            vec![0, 1, 2, 1, 1, 0, 1, 1],
        ])
        .unwrap()
    }

    #[test]
    fn cut_translation() {
        let none = CutSet::new(3, 4, vec![], vec![]).unwrap();
        let cc = cutset_to_coclustering(&none, 3, 4).unwrap().to_one_based();
        assert_eq!(cc.row_blocks, vec![vec![1, 2, 3]]);
        assert_eq!(cc.col_blocks, vec![vec![1, 2, 3, 4]]);

        let one = CutSet::from_one_based(3, 4, &[2], &[3]).unwrap();
        let cc = cutset_to_coclustering(&one, 3, 4).unwrap().to_one_based();
        assert_eq!(cc.row_blocks, vec![vec![1], vec![2, 3]]);
        assert_eq!(cc.col_blocks, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(one.to_one_based(), (vec![2], vec![3]));

        let all = CutSet::from_one_based(3, 1, &[2, 3], &[]).unwrap();
        let cc = cutset_to_coclustering(&all, 3, 1).unwrap().to_one_based();
        assert_eq!(cc.row_blocks, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn bad_cuts() {
        assert!(CutSet::new(3, 3, vec![2, 1], vec![]).is_err());
        assert!(CutSet::new(3, 3, vec![0], vec![]).is_err());
        assert!(CutSet::new(3, 3, vec![], vec![3]).is_err());
        assert!(CutSet::from_one_based(3, 3, &[1], &[]).is_err());
        assert!(CutSet::from_one_based(3, 3, &[0], &[]).is_err());
    }

    #[test]
    fn strip_table_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (m, n) = (rng.gen_range(1..7), rng.gen_range(1..12));
            let data = (0..m * n).map(|_| rng.gen_range(-5..20)).collect();
            let a = IntMatrix::from_row_major(m, n, data).unwrap();
            let top = rng.gen_range(0..m);
            let bottom = rng.gen_range(top + 1..=m);
            let t = StripTable::new(&a, top, bottom);
            for left in 0..n {
                for right in left + 1..=n {
                    let vals: Vec<i64> = (top..bottom)
                        .flat_map(|i| (left..right).map(move |j| (i, j)))
                        .map(|(i, j)| a.get(i, j))
                        .collect();
                    let naive = (*vals.iter().min().unwrap(), *vals.iter().max().unwrap());
                    assert_eq!(t.range(left, right), naive);
                }
            }
        }
    }

    #[test]
    fn lexicographic_cut_order() {
        let mut c = first_cuts(2);
        let mut seen = vec![c.clone()];
        while next_cuts(&mut c, 5) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        let mut empty = first_cuts(0);
        assert!(!next_cuts(&mut empty, 3));
    }

    #[test]
    fn separation_example_consecutive() {
        let a = separation();
        let mut ctx = SearchContext::default();
        let cuts = solve_consecutive(&a, 2, 4, 1, &mut ctx).unwrap().unwrap();
        let cc = cutset_to_coclustering(&cuts, 5, 8).unwrap();
        assert!(cost(&a, &cc).unwrap() <= 1);
        // Frozen from the enumerator: first feasible cut set in lexicographic order.
        assert_eq!(cuts.to_one_based(), (vec![3], vec![2, 4, 7]));

        let mut ctx = SearchContext::default();
        assert!(solve_consecutive(&a, 2, 4, 0, &mut ctx).unwrap().is_none());
        assert_eq!(ctx.stats.cut_sets, binomial(4, 1) * binomial(7, 3));

        let (best, cuts) = optimize_consecutive(&a, 2, 4, &mut SearchContext::default()).unwrap();
        assert_eq!(best, 1);
        assert_eq!(cost(&a, &cutset_to_coclustering(&cuts, 5, 8).unwrap()).unwrap(), 1);
    }

    #[test]
    fn singletons_always_work() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let (m, n) = (rng.gen_range(1..5), rng.gen_range(1..5));
            let data = (0..m * n).map(|_| rng.gen_range(0..9)).collect();
            let a = IntMatrix::from_row_major(m, n, data).unwrap();
            let cuts = solve_consecutive(&a, m, n, 0, &mut SearchContext::default()).unwrap().unwrap();
            assert_eq!(cuts.rows(), (1..m).collect::<Vec<_>>());
            assert_eq!(cuts.cols(), (1..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn optimize_small_cases() {
        let mut ctx = SearchContext::default();
        let c = IntMatrix::constant(4, 5, 3).unwrap();
        assert_eq!(optimize_consecutive(&c, 2, 3, &mut ctx).unwrap().0, 0);
        let x = IntMatrix::new(vec![vec![0, 2], vec![2, 0]]).unwrap();
        assert_eq!(optimize_consecutive(&x, 1, 1, &mut ctx).unwrap().0, 2);
    }

    #[test]
    fn consecutive_is_a_restriction() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let (m, n) = (rng.gen_range(1..5), rng.gen_range(1..5));
            let (k, l) = (rng.gen_range(1..=m), rng.gen_range(1..=n));
            let data = (0..m * n).map(|_| rng.gen_range(0..4)).collect();
            let a = IntMatrix::from_row_major(m, n, data).unwrap();
            let mut ctx = SearchContext::default();
            let (best, cuts) = optimize_consecutive(&a, k, l, &mut ctx).unwrap();
            let cc = cutset_to_coclustering(&cuts, m, n).unwrap();
            assert_eq!(cc.shape(), (k, l));
            assert_eq!(cost(&a, &cc).unwrap(), best);
            let general = crate::oracle::brute_force_optimal(&a, k, l, &mut ctx).unwrap().0;
            assert!(general <= best);
        }
    }

    #[test]
    fn budget_cap() {
        let a = IntMatrix::constant(30, 30, 0).unwrap();
        let budget = Budget {
            max_cut_sets: 1000,
            ..Budget::default()
        };
        let err = solve_consecutive(&a, 4, 4, 0, &mut SearchContext::new(budget)).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted(_)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }
}
