use std::fmt;

use crate::error::{invalid, Error, Result};

/// A literal in DIMACS convention: `+v` or `-v` for a 1-based variable `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(i32);

impl Lit {
    pub fn pos(var: u32) -> Lit {
        debug_assert!(var >= 1);
        Lit(var as i32)
    }

    pub fn neg(var: u32) -> Lit {
        debug_assert!(var >= 1);
        Lit(-(var as i32))
    }

    pub fn from_dimacs(x: i32) -> Option<Lit> {
        (x != 0).then_some(Lit(x))
    }

    pub fn dimacs(self) -> i32 {
        self.0
    }

    /// 1-based variable.
    pub fn var(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn negated(self) -> Lit {
        Lit(-self.0)
    }

    /// Dense index `2 * (var - 1) + is_negative`.
    #[inline]
    pub(crate) fn code(self) -> usize {
        2 * (self.var() as usize - 1) + usize::from(self.0 < 0)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A formula in conjunctive normal form with clauses stored back to back.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cnf {
    num_vars: u32,
    lits: Vec<Lit>,
    starts: Vec<usize>,
}

impl Cnf {
    pub fn new(num_vars: u32) -> Cnf {
        Cnf {
            num_vars,
            lits: Vec::new(),
            starts: vec![0],
        }
    }

    pub fn with_capacity(num_vars: u32, clauses: usize, lits: usize) -> Cnf {
        let mut starts = Vec::with_capacity(clauses + 1);
        starts.push(0);
        Cnf {
            num_vars,
            lits: Vec::with_capacity(lits),
            starts,
        }
    }

    /// Adds a clause. Duplicate literals are dropped; empty clauses and
    /// out-of-range variables are rejected.
    pub fn add_clause(&mut self, clause: &[Lit]) -> Result<()> {
        if clause.is_empty() {
            return Err(invalid("empty clause"));
        }
        if let Some(bad) = clause.iter().find(|l| l.var() == 0 || l.var() > self.num_vars) {
            return Err(invalid(format!(
                "literal {} references a variable outside 1..={}",
                bad.dimacs(),
                self.num_vars
            )));
        }
        self.push_clause(clause);
        Ok(())
    }

    /// Unchecked variant used by the encoders, which produce valid literals.
    pub(crate) fn push_clause(&mut self, clause: &[Lit]) {
        let start = self.lits.len();
        for &lit in clause {
            if !self.lits[start..].contains(&lit) {
                self.lits.push(lit);
            }
        }
        self.starts.push(self.lits.len());
    }

    pub(crate) fn push_binary(&mut self, a: Lit, b: Lit) {
        self.lits.push(a);
        if a != b {
            self.lits.push(b);
        }
        self.starts.push(self.lits.len());
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.starts.len() - 1
    }

    pub fn clause(&self, idx: usize) -> &[Lit] {
        &self.lits[self.starts[idx]..self.starts[idx + 1]]
    }

    pub fn clauses(&self) -> impl ExactSizeIterator<Item = &[Lit]> + '_ {
        self.starts.windows(2).map(move |w| &self.lits[w[0]..w[1]])
    }

    pub fn max_clause_len(&self) -> usize {
        self.clauses().map(<[Lit]>::len).max().unwrap_or(0)
    }

    /// True if every clause has at most two literals.
    pub fn is_two_cnf(&self) -> bool {
        self.clauses().all(|c| c.len() <= 2)
    }

    pub fn is_satisfied_by(&self, assignment: &Assignment) -> bool {
        assignment.len() == self.num_vars as usize
            && self.clauses().all(|c| c.iter().any(|&l| assignment.lit(l)))
    }
}

/// A total truth assignment, indexed by 1-based variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Assignment {
        Assignment(values)
    }

    pub fn all_false(num_vars: u32) -> Assignment {
        Assignment(vec![false; num_vars as usize])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn value(&self, var: u32) -> bool {
        self.0[var as usize - 1]
    }

    pub fn set(&mut self, var: u32, value: bool) {
        self.0[var as usize - 1] = value;
    }

    pub fn lit(&self, lit: Lit) -> bool {
        self.value(lit.var()) == lit.is_positive()
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }
}

/// Which matrix line and block a variable stands for (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarRef {
    /// Row `row` is placed in row block `block`.
    Row { row: usize, block: usize },
    /// Column `col` is placed in column block `block`.
    Col { col: usize, block: usize },
}

/// Numbering of the placement variables.
///
/// Row variables come first: row `i` in block `r` is `i * k + r + 1`; column
/// `j` in block `s` is `m * k + j * l + s + 1` (all indices 0-based). In 1-based
/// terms these are `(i-1)k + r` and `mk + (j-1)l + s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarMap {
    m: usize,
    n: usize,
    k: usize,
    l: usize,
}

impl VarMap {
    pub fn new(m: usize, n: usize, k: usize, l: usize) -> VarMap {
        VarMap { m, n, k, l }
    }

    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.m, self.n, self.k, self.l)
    }

    pub fn num_vars(&self) -> u32 {
        (self.k * self.m + self.l * self.n) as u32
    }

    #[inline]
    pub fn row_var(&self, row: usize, block: usize) -> u32 {
        debug_assert!(row < self.m && block < self.k);
        (row * self.k + block + 1) as u32
    }

    #[inline]
    pub fn col_var(&self, col: usize, block: usize) -> u32 {
        debug_assert!(col < self.n && block < self.l);
        (self.m * self.k + col * self.l + block + 1) as u32
    }

    pub fn decode(&self, var: u32) -> Result<VarRef> {
        if var == 0 || var > self.num_vars() {
            return Err(Error::InvalidArgument(format!("variable {var} out of range")));
        }
        let idx = var as usize - 1;
        let rows = self.m * self.k;
        Ok(if idx < rows {
            VarRef::Row {
                row: idx / self.k,
                block: idx % self.k,
            }
        } else {
            let idx = idx - rows;
            VarRef::Col {
                col: idx / self.l,
                block: idx % self.l,
            }
        })
    }
}
