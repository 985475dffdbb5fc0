//! Dense integer matrices and their alphabets.

use std::fmt;

use crate::error::{invalid, Result};

/// A rectangular, non-empty matrix of integer levels, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    /// Builds a matrix from its rows. Fails on ragged or empty input.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(invalid("matrix must have at least one row"));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(invalid("matrix must have at least one column"));
        }
        let mut data = Vec::with_capacity(m * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(invalid(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(IntMatrix { rows: m, cols: n, data })
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(invalid("matrix dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(invalid(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// An `rows x cols` matrix with every entry equal to `value`.
    pub fn constant(rows: usize, cols: usize, value: i64) -> Result<Self> {
        Self::from_row_major(rows, cols, vec![value; rows * cols])
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = i64> + '_ {
        (0..self.rows).map(move |i| self.get(i, j))
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            data.extend(self.column(j));
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<IntMatrix> {
        if cols.is_empty() {
            return Err(invalid("column selection must be non-empty"));
        }
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                data.push(self.get(i, j));
            }
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        })
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(i64) -> i64) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f(a)).collect(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::from_values(self.data.iter().copied())
    }

    /// Minimum and maximum of column `j`.
    pub fn column_range(&self, j: usize) -> (i64, i64) {
        self.column(j)
            .fold((i64::MAX, i64::MIN), |(lo, hi), a| (lo.min(a), hi.max(a)))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

/// The strictly increasing list of distinct values occurring in a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<i64>);

impl Alphabet {
    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Alphabet {
        let mut v: Vec<i64> = values.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Alphabet(v)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> i64 {
        self.0[0]
    }

    pub fn max(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// `max - min`: the largest possible cluster spread.
    pub fn span(&self) -> i64 {
        self.max() - self.min()
    }

    pub fn contains(&self, value: i64) -> bool {
        self.0.binary_search(&value).is_ok()
    }

    /// Smallest value `>= threshold`, if any.
    pub fn ceiling(&self, threshold: i64) -> Option<i64> {
        let idx = self.0.partition_point(|&a| a < threshold);
        self.0.get(idx).copied()
    }
}
