//! Replacing real-valued instances by equivalent integer ones.
//!
//! With budget `c`, two values may share a cluster exactly when they differ by
//! at most `c`. Only this compatibility relation matters, so any strictly
//! increasing relabelling `σ ↦ σ'` together with a new budget `c'` that keeps
//! the relation intact yields an equivalent instance. We look for one with
//! `σ' ∈ [0, |Σ|²]` and `c' ≤ |Σ|`.
//!
//! For sorted values `σ_0 < … < σ_{N-1}` let `first[i]` be the smallest index
//! compatible with `i`. The relabelling must satisfy
//!
//! * `σ'_i ≥ σ'_{i-1} + 1` (strictly increasing),
//! * `σ'_i ≤ σ'_{first[i]} + c'` (compatible pairs stay compatible),
//! * `σ'_i ≥ σ'_{first[i]-1} + c' + 1` (conflicting pairs stay in conflict),
//!
//! a system of difference constraints. For each `c' = 0, 1, …, N` we compute its
//! least solution by longest paths (Bellman–Ford) and keep the first feasible
//! one. The post-condition is then re-checked over all pairs.

use crate::error::{invalid, Error, Result};
use crate::instance::{check_shape, Instance};
use crate::matrix::IntMatrix;
use crate::partition::CoClustering;

/// A rectangular, non-empty matrix of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(invalid("matrix must be non-empty"));
        }
        let mut data = Vec::with_capacity(m * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(invalid(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            if let Some(x) = row.iter().find(|x| !x.is_finite()) {
                return Err(invalid(format!("non-finite entry {x} in row {}", i + 1)));
            }
            data.extend(row);
        }
        Ok(RealMatrix { rows: m, cols: n, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    /// Sorted distinct entries.
    pub fn alphabet(&self) -> Vec<f64> {
        let mut v = self.data.clone();
        v.sort_by(f64::total_cmp);
        v.dedup();
        v
    }

    /// Largest cluster spread of `cc`, which must match the matrix dimensions.
    pub fn cost(&self, cc: &CoClustering) -> Result<f64> {
        if cc.rows.ground_size() != self.rows || cc.cols.ground_size() != self.cols {
            return Err(invalid("co-clustering does not match the matrix dimensions"));
        }
        let (rl, cl) = (cc.rows.labels(), cc.cols.labels());
        let l = cc.cols.len();
        let mut lo = vec![f64::INFINITY; cc.rows.len() * l];
        let mut hi = vec![f64::NEG_INFINITY; cc.rows.len() * l];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let cell = rl[i] * l + cl[j];
                let x = self.get(i, j);
                lo[cell] = lo[cell].min(x);
                hi[cell] = hi[cell].max(x);
            }
        }
        Ok(lo.iter().zip(&hi).map(|(a, b)| b - a).fold(0.0, f64::max))
    }

    /// `Some` if every entry is an integer representable as `i64`.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|&x| as_integer(x))
            .collect::<Option<Vec<_>>>()?;
        IntMatrix::from_row_major(self.rows, self.cols, data).ok()
    }
}

impl From<&IntMatrix> for RealMatrix {
    fn from(a: &IntMatrix) -> Self {
        RealMatrix {
            rows: a.rows(),
            cols: a.cols(),
            data: a.entries().iter().map(|&x| x as f64).collect(),
        }
    }
}

fn as_integer(x: f64) -> Option<i64> {
    // 2^53: beyond this not every integer is representable, keep away from it.
    (x.fract() == 0.0 && x.abs() <= 9.007_199_254_740_992e15).then_some(x as i64)
}

/// A real-valued decision instance.
#[derive(Debug, Clone, PartialEq)]
pub struct RealInstance {
    pub matrix: RealMatrix,
    pub k: usize,
    pub l: usize,
    pub c: f64,
}

impl RealInstance {
    pub fn new(matrix: RealMatrix, k: usize, l: usize, c: f64) -> Result<Self> {
        if k == 0 || k > matrix.rows() || l == 0 || l > matrix.cols() {
            return Err(invalid(format!(
                "block counts ({k}, {l}) must lie in 1..={} and 1..={}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !c.is_finite() || c < 0.0 {
            return Err(invalid(format!("cost budget must be finite and non-negative, got {c}")));
        }
        Ok(RealInstance { matrix, k, l, c })
    }
}

/// Strictly increasing map from the original real alphabet to integers.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueMap {
    pairs: Vec<(f64, i64)>,
}

impl ValueMap {
    pub fn pairs(&self) -> &[(f64, i64)] {
        &self.pairs
    }

    pub fn get(&self, x: f64) -> Option<i64> {
        self.pairs
            .binary_search_by(|(s, _)| s.total_cmp(&x))
            .ok()
            .map(|idx| self.pairs[idx].1)
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|&(s, t)| s == t as f64)
    }
}

/// Two values conflict under budget `c` when they differ by more than `c`.
/// Evaluated with plain `f64` subtraction, which is monotone, so the relation
/// is the same wherever it is evaluated.
#[inline]
fn compatible(lo: f64, hi: f64, c: f64) -> bool {
    hi - lo <= c
}

/// Builds an equivalent integer instance. Integral inputs are returned unchanged.
pub fn rescale(instance: &RealInstance) -> Result<(Instance, ValueMap)> {
    let sigma = instance.matrix.alphabet();
    if let (Some(int_matrix), Some(c)) = (instance.matrix.to_int(), as_integer(instance.c)) {
        let pairs = sigma.iter().map(|&s| (s, s as i64)).collect();
        let inst = Instance::new(int_matrix, instance.k, instance.l, c)?;
        return Ok((inst, ValueMap { pairs }));
    }

    let (labels, c_prime) = embed(&sigma, instance.c)?;
    let map = ValueMap {
        pairs: sigma.iter().copied().zip(labels.iter().copied()).collect(),
    };
    let m = instance.matrix.rows();
    let n = instance.matrix.cols();
    let mut data = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            data.push(map.get(instance.matrix.get(i, j)).expect("entry is in its alphabet"));
        }
    }
    let matrix = IntMatrix::from_row_major(m, n, data)?;
    check_shape(&matrix, instance.k, instance.l)?;
    Ok((Instance::new(matrix, instance.k, instance.l, c_prime)?, map))
}

/// Integer labels and budget reproducing the compatibility relation of the
/// sorted, distinct `sigma` under budget `c`.
pub fn embed(sigma: &[f64], c: f64) -> Result<(Vec<i64>, i64)> {
    let n = sigma.len();
    if n == 0 {
        return Err(invalid("alphabet must be non-empty"));
    }
    if sigma.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("alphabet must be strictly increasing"));
    }
    let first: Vec<usize> = (0..n)
        .map(|i| (0..=i).find(|&j| compatible(sigma[j], sigma[i], c)).expect("i is compatible with itself"))
        .collect();

    for c_prime in 0..=n as i64 {
        if let Some(labels) = least_solution(&first, c_prime) {
            verify_embedding(sigma, c, &labels, c_prime)?;
            return Ok((labels, c_prime));
        }
    }
    Err(Error::Internal(format!(
        "no integer embedding with budget <= {n} found for {n} values"
    )))
}

/// Least solution of the difference constraints for a fixed `c'`, or `None`
/// when they contain a positive cycle.
fn least_solution(first: &[usize], c_prime: i64) -> Option<Vec<i64>> {
    let n = first.len();
    // Edge (from, to, w) encodes x[to] >= x[from] + w.
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..n {
        edges.push((i - 1, i, 1));
    }
    for (i, &f) in first.iter().enumerate() {
        if f >= 1 {
            edges.push((f - 1, i, c_prime + 1));
        }
        if f < i {
            edges.push((i, f, -c_prime));
        }
    }
    let mut x = vec![i64::MIN; n];
    x[0] = 0;
    for round in 0..=n {
        let mut changed = false;
        for &(from, to, w) in &edges {
            if x[from] != i64::MIN && x[from] + w > x[to] {
                x[to] = x[from] + w;
                changed = true;
            }
        }
        if !changed {
            return Some(x);
        }
        if round == n {
            break;
        }
    }
    None
}

fn verify_embedding(sigma: &[f64], c: f64, labels: &[i64], c_prime: i64) -> Result<()> {
    let n = sigma.len() as i64;
    if labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Internal("embedding is not strictly increasing".into()));
    }
    if labels[0] < 0 || *labels.last().unwrap() > n * n || c_prime > n {
        return Err(Error::Internal("embedding exceeds its range bounds".into()));
    }
    for i in 0..sigma.len() {
        for j in 0..i {
            let before = compatible(sigma[j], sigma[i], c);
            let after = labels[i] - labels[j] <= c_prime;
            if before != after {
                return Err(Error::Internal(format!(
                    "embedding breaks compatibility of {} and {}",
                    sigma[j], sigma[i]
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive pairwise check of the rescaling contract.
    fn preserves_relation(sigma: &[f64], c: f64, labels: &[i64], c_prime: i64) -> bool {
        (0..sigma.len()).all(|i| {
            (0..sigma.len()).all(|j| {
                ((sigma[i] - sigma[j]).abs() <= c) == ((labels[i] - labels[j]).abs() <= c_prime)
            })
        })
    }

    #[test]
    fn integral_input_is_unchanged() {
        let m = RealMatrix::new(vec![vec![0.0, 1.0], vec![2.0, 1.0]]).unwrap();
        let inst = RealInstance::new(m, 1, 2, 1.0).unwrap();
        let (out, map) = rescale(&inst).unwrap();
        assert_eq!(out.c(), 1);
        assert_eq!(out.matrix().to_rows(), vec![vec![0, 1], vec![2, 1]]);
        assert!(map.is_identity());
    }

    #[test]
    fn small_real_alphabets() {
        let sigma = [0.5, 1.0, 2.6];
        let (labels, cp) = embed(&sigma, 1.0).unwrap();
        assert!(preserves_relation(&sigma, 1.0, &labels, cp));
        // 0.5~1.0 compatible, 1.0~2.6 and 0.5~2.6 not
        assert!(labels[1] - labels[0] <= cp && labels[2] - labels[1] > cp);

        let sigma = [0.0, 10.0];
        let (labels, cp) = embed(&sigma, 0.5).unwrap();
        assert!(labels[1] - labels[0] > cp);
        assert!(preserves_relation(&sigma, 0.5, &labels, cp));
    }

    #[test]
    fn greedy_leftmost_placement_counterexample_is_handled() {
        // Placing every value as far left as possible fails here; the
        // constraint solver does not.
        let sigma = [0.0, 1.0, 1.5, 1.8];
        let (labels, cp) = embed(&sigma, 1.0).unwrap();
        assert!(preserves_relation(&sigma, 1.0, &labels, cp));
        assert!(cp <= 4 && *labels.last().unwrap() <= 16);
    }

    #[test]
    fn rescaled_instance_maps_entries() {
        let m = RealMatrix::new(vec![vec![0.5, 2.6], vec![1.0, 0.5]]).unwrap();
        let inst = RealInstance::new(m, 1, 1, 1.0).unwrap();
        let (out, map) = rescale(&inst).unwrap();
        let a = out.matrix();
        assert_eq!(a.get(0, 0), map.get(0.5).unwrap());
        assert_eq!(a.get(0, 1), map.get(2.6).unwrap());
        assert_eq!(a.get(1, 0), map.get(1.0).unwrap());
        assert!(map.get(3.0).is_none());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RealMatrix::new(vec![vec![f64::NAN]]).is_err());
        let m = RealMatrix::new(vec![vec![1.0]]).unwrap();
        assert!(RealInstance::new(m.clone(), 1, 1, -0.5).is_err());
        assert!(RealInstance::new(m, 2, 1, 0.5).is_err());
    }
}
