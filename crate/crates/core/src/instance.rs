//! Problem instances and the maximum-norm cost.

use crate::error::{invalid, Result};
use crate::matrix::IntMatrix;
use crate::partition::CoClustering;

/// A decision instance: can the rows of `matrix` be split into `k` blocks and
/// its columns into `l` blocks so that every cluster spans at most `c`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    matrix: IntMatrix,
    k: usize,
    l: usize,
    c: i64,
}

impl Instance {
    pub fn new(matrix: IntMatrix, k: usize, l: usize, c: i64) -> Result<Self> {
        check_shape(&matrix, k, l)?;
        if c < 0 {
            return Err(invalid(format!("cost budget must be non-negative, got {c}")));
        }
        Ok(Instance { matrix, k, l, c })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn with_cost(&self, c: i64) -> Result<Instance> {
        Instance::new(self.matrix.clone(), self.k, self.l, c)
    }

    /// The `(l, k)` instance on the transposed matrix.
    pub fn transpose(&self) -> Instance {
        Instance {
            matrix: self.matrix.transpose(),
            k: self.l,
            l: self.k,
            c: self.c,
        }
    }

    pub fn into_parts(self) -> (IntMatrix, usize, usize, i64) {
        (self.matrix, self.k, self.l, self.c)
    }
}

/// Checks `1 <= k <= m` and `1 <= l <= n`; blocks must be non-empty.
pub fn check_shape(matrix: &IntMatrix, k: usize, l: usize) -> Result<()> {
    if k == 0 || k > matrix.rows() {
        return Err(invalid(format!(
            "row block count k={k} must lie in 1..={}",
            matrix.rows()
        )));
    }
    if l == 0 || l > matrix.cols() {
        return Err(invalid(format!(
            "column block count l={l} must lie in 1..={}",
            matrix.cols()
        )));
    }
    Ok(())
}

/// Largest `max - min` over all clusters of `cc`.
pub fn cost(matrix: &IntMatrix, cc: &CoClustering) -> Result<i64> {
    if cc.rows.ground_size() != matrix.rows() || cc.cols.ground_size() != matrix.cols() {
        return Err(invalid(format!(
            "co-clustering over {}x{} does not match a {}x{} matrix",
            cc.rows.ground_size(),
            cc.cols.ground_size(),
            matrix.rows(),
            matrix.cols()
        )));
    }
    let (k, l) = cc.shape();
    let row_label = cc.rows.labels();
    let col_label = cc.cols.labels();
    let mut lo = vec![i64::MAX; k * l];
    let mut hi = vec![i64::MIN; k * l];
    for i in 0..matrix.rows() {
        let base = row_label[i] * l;
        for (j, &a) in matrix.row(i).iter().enumerate() {
            let cell = base + col_label[j];
            lo[cell] = lo[cell].min(a);
            hi[cell] = hi[cell].max(a);
        }
    }
    Ok(lo
        .iter()
        .zip(&hi)
        .map(|(&a, &b)| b - a)
        .max()
        .unwrap_or(0))
}

/// Every value the optimal cost can take: `0` and all positive differences of
/// two alphabet values, sorted ascending.
pub fn candidate_costs(matrix: &IntMatrix) -> Vec<i64> {
    let sigma = matrix.alphabet();
    let values = sigma.values();
    let mut out = vec![0];
    for (x, &a) in values.iter().enumerate() {
        for &b in &values[x + 1..] {
            out.push(b - a);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
