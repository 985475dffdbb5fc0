//! The two CNF encodings of the decision problem and model decoding.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::instance::Instance;
use crate::matrix::IntMatrix;
use crate::partition::{CoClustering, Partition};
use crate::sat::cnf::{Assignment, Cnf, Lit, VarMap};

/// Lower window bounds `u_rs`, one per cluster: cluster `(r, s)` must fit in
/// `[u_rs, u_rs + c]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClusterBoundary {
    k: usize,
    l: usize,
    data: Vec<i64>,
}

impl ClusterBoundary {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<ClusterBoundary> {
        let matrix = IntMatrix::new(rows)?;
        Ok(ClusterBoundary {
            k: matrix.rows(),
            l: matrix.cols(),
            data: matrix.entries().to_vec(),
        })
    }

    pub fn from_row_major(k: usize, l: usize, data: Vec<i64>) -> Result<ClusterBoundary> {
        if k == 0 || l == 0 || data.len() != k * l {
            return Err(invalid(format!("a {k}x{l} boundary needs {} values", k * l)));
        }
        Ok(ClusterBoundary { k, l, data })
    }

    /// The boundary `u_rs = min A_rs` induced by a co-clustering.
    pub fn of_coclustering(matrix: &IntMatrix, cc: &CoClustering) -> ClusterBoundary {
        let (k, l) = cc.shape();
        let row_label = cc.rows.labels();
        let col_label = cc.cols.labels();
        let mut data = vec![i64::MAX; k * l];
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                let cell = row_label[i] * l + col_label[j];
                data[cell] = data[cell].min(matrix.get(i, j));
            }
        }
        ClusterBoundary { k, l, data }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    #[inline]
    pub fn get(&self, r: usize, s: usize) -> i64 {
        self.data[r * self.l + s]
    }

    pub fn values(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.l).map(<[i64]>::to_vec).collect()
    }
}

impl fmt::Debug for ClusterBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.l)).finish()
    }
}

/// `"2,1;0,3"`: rows separated by `;`, entries by `,`.
impl fmt::Display for ClusterBoundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.data.chunks(self.l).enumerate() {
            if r > 0 {
                f.write_str(";")?;
            }
            for (s, u) in row.iter().enumerate() {
                if s > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{u}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ClusterBoundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClusterBoundary> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|_| invalid(format!("invalid boundary value {:?}", x.trim())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ClusterBoundary::new(rows)
    }
}

/// Number of unordered cell pairs whose values differ by more than `c`.
pub fn count_conflicting_pairs(matrix: &IntMatrix, c: i64) -> u64 {
    let mut values = matrix.entries().to_vec();
    values.sort_unstable();
    let mut hi = 0;
    let mut total = 0u64;
    for (lo, &a) in values.iter().enumerate() {
        hi = hi.max(lo);
        while hi < values.len() && values[hi] - a <= c {
            hi += 1;
        }
        total += (values.len() - hi) as u64;
    }
    total
}

fn coverage_clauses(cnf: &mut Cnf, vm: &VarMap) {
    let (m, n, k, l) = vm.dims();
    let mut clause = Vec::with_capacity(k.max(l));
    for i in 0..m {
        clause.clear();
        clause.extend((0..k).map(|r| Lit::pos(vm.row_var(i, r))));
        cnf.push_clause(&clause);
    }
    for j in 0..n {
        clause.clear();
        clause.extend((0..l).map(|s| Lit::pos(vm.col_var(j, s))));
        cnf.push_clause(&clause);
    }
}

/// The direct encoding: coverage clauses `R_i`, `C_j`, and for every pair of
/// cells whose values differ by more than `c` and every cluster `(r, s)`, the
/// clause forbidding both cells in that cluster.
///
/// Literals repeated within a clause (cells sharing a row or column) are
/// written once. Fails with [`Error::TooLarge`] when the clause count would
/// exceed `max_clauses`.
pub fn build_full_cnf(instance: &Instance, max_clauses: u64) -> Result<(Cnf, VarMap)> {
    let a = instance.matrix();
    let (m, n, k, l, c) = (a.rows(), a.cols(), instance.k(), instance.l(), instance.c());
    let vm = VarMap::new(m, n, k, l);
    let pairs = count_conflicting_pairs(a, c);
    let clauses = pairs
        .saturating_mul((k * l) as u64)
        .saturating_add((m + n) as u64);
    if clauses > max_clauses {
        return Err(Error::TooLarge(format!(
            "full encoding ({clauses} clauses exceed the cap of {max_clauses})"
        )));
    }
    let mut cnf = Cnf::with_capacity(vm.num_vars(), clauses as usize, 4 * clauses as usize);
    coverage_clauses(&mut cnf, &vm);
    let cells = m * n;
    for p in 0..cells {
        let (i, j) = (p / n, p % n);
        let ap = a.get(i, j);
        for q in p + 1..cells {
            let (i2, j2) = (q / n, q % n);
            if (a.get(i2, j2) - ap).abs() <= c {
                continue;
            }
            for r in 0..k {
                for s in 0..l {
                    cnf.push_clause(&[
                        Lit::neg(vm.row_var(i, r)),
                        Lit::neg(vm.row_var(i2, r)),
                        Lit::neg(vm.col_var(j, s)),
                        Lit::neg(vm.col_var(j2, s)),
                    ]);
                }
            }
        }
    }
    Ok((cnf, vm))
}

/// The boundary encoding: `R_i`, `C_j` and a binary clause
/// `!x_{i,r} | !y_{j,s}` for every entry outside the window of cluster `(r, s)`.
///
/// Every boundary value must occur in the matrix.
pub fn build_boundary_cnf(instance: &Instance, boundary: &ClusterBoundary) -> Result<(Cnf, VarMap)> {
    let a = instance.matrix();
    let (k, l, c) = (instance.k(), instance.l(), instance.c());
    if boundary.k() != k || boundary.l() != l {
        return Err(invalid(format!(
            "boundary is {}x{}, instance needs {k}x{l}",
            boundary.k(),
            boundary.l()
        )));
    }
    let sigma = a.alphabet();
    if let Some(u) = boundary.values().iter().find(|&&u| !sigma.contains(u)) {
        return Err(invalid(format!("boundary value {u} does not occur in the matrix")));
    }
    Ok(boundary_cnf_unchecked(a, k, l, c, boundary))
}

pub(crate) fn boundary_cnf_unchecked(
    a: &IntMatrix,
    k: usize,
    l: usize,
    c: i64,
    boundary: &ClusterBoundary,
) -> (Cnf, VarMap) {
    let (m, n) = (a.rows(), a.cols());
    let vm = VarMap::new(m, n, k, l);
    let mut cnf = Cnf::with_capacity(vm.num_vars(), m + n + m * n, (m + n) * k.max(l) + 2 * m * n);
    coverage_clauses(&mut cnf, &vm);
    for i in 0..m {
        for (j, &x) in a.row(i).iter().enumerate() {
            for r in 0..k {
                for s in 0..l {
                    let u = boundary.get(r, s);
                    if x < u || x > u + c {
                        cnf.push_binary(Lit::neg(vm.row_var(i, r)), Lit::neg(vm.col_var(j, s)));
                    }
                }
            }
        }
    }
    (cnf, vm)
}

/// Reads a co-clustering off a model: every line goes to the lowest block whose
/// variable is true, then missing blocks are created by splitting.
pub fn decode_assignment(assignment: &Assignment, vm: &VarMap) -> Result<CoClustering> {
    let (m, n, k, l) = vm.dims();
    if assignment.len() != vm.num_vars() as usize {
        return Err(invalid(format!(
            "assignment has {} variables, expected {}",
            assignment.len(),
            vm.num_vars()
        )));
    }
    let row_labels = (0..m)
        .map(|i| {
            (0..k)
                .find(|&r| assignment.value(vm.row_var(i, r)))
                .ok_or_else(|| Error::Internal(format!("row {} has no block", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let col_labels = (0..n)
        .map(|j| {
            (0..l)
                .find(|&s| assignment.value(vm.col_var(j, s)))
                .ok_or_else(|| Error::Internal(format!("column {} has no block", j + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoClustering::new(
        Partition::from_labels(&row_labels).split_to(k)?,
        Partition::from_labels(&col_labels).split_to(l)?,
    ))
}
