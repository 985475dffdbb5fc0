//! Complete SAT solving: implication-graph 2-SAT for formulas whose clauses
//! have at most two literals, chronological DPLL with watched literals for
//! everything else. Both are deterministic.

use crate::error::{invalid, Error, Result};
use crate::sat::cnf::{Assignment, Cnf, Lit};

/// Outcome of one SAT call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatResult {
    /// A model, or `None` when the formula is unsatisfiable.
    pub assignment: Option<Assignment>,
    /// Branching decisions made (always 0 on the 2-SAT path).
    pub decisions: u64,
    pub used_two_sat: bool,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        self.assignment.is_some()
    }
}

/// Solves `cnf`, picking the 2-SAT path whenever every clause is short enough.
pub fn solve_cnf(cnf: &Cnf, max_decisions: u64) -> Result<SatResult> {
    if cnf.is_two_cnf() {
        Ok(SatResult {
            assignment: solve_two_sat(cnf)?,
            decisions: 0,
            used_two_sat: true,
        })
    } else {
        solve_dpll(cnf, max_decisions)
    }
}

/// Decides a formula with clauses of length at most two in linear time.
///
/// Builds the implication graph over the `2V` literals, computes strongly
/// connected components with an iterative Tarjan pass and reads off the model:
/// `x` is true iff its component comes after that of `!x` in topological order.
pub fn solve_two_sat(cnf: &Cnf) -> Result<Option<Assignment>> {
    let nv = cnf.num_vars() as usize;
    let nodes = 2 * nv;
    let mut degree = vec![0usize; nodes + 1];
    for clause in cnf.clauses() {
        match *clause {
            [a] => degree[a.negated().code()] += 1,
            [a, b] => {
                degree[a.negated().code()] += 1;
                degree[b.negated().code()] += 1;
            }
            _ => return Err(invalid("2-SAT path called on a clause longer than two literals")),
        }
    }
    // Compressed adjacency: edges of node v live in adj[head[v]..head[v+1]].
    let mut head = vec![0usize; nodes + 1];
    for v in 0..nodes {
        head[v + 1] = head[v] + degree[v];
    }
    let mut fill = head.clone();
    let mut adj = vec![0usize; head[nodes]];
    let mut edge = |from: Lit, to: Lit| {
        adj[fill[from.code()]] = to.code();
        fill[from.code()] += 1;
    };
    for clause in cnf.clauses() {
        match *clause {
            [a] => edge(a.negated(), a),
            [a, b] => {
                edge(a.negated(), b);
                edge(b.negated(), a);
            }
            _ => unreachable!(),
        }
    }

    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; nodes];
    let mut low = vec![0usize; nodes];
    let mut comp = vec![UNSEEN; nodes];
    let mut on_stack = vec![false; nodes];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    for root in 0..nodes {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, head[root]));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < head[v + 1] {
                let w = adj[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, head[w]));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }

    // Tarjan numbers components in reverse topological order.
    let mut values = Vec::with_capacity(nv);
    for var in 0..nv {
        let (pos, neg) = (comp[2 * var], comp[2 * var + 1]);
        if pos == neg {
            return Ok(None);
        }
        values.push(pos < neg);
    }
    Ok(Some(Assignment::new(values)))
}

/// Backtracking search with unit propagation over two watched literals.
///
/// Branches on the lowest unassigned variable, true first, and backtracks
/// chronologically. Exceeding `max_decisions` is reported as
/// [`Error::BudgetExhausted`], never as unsatisfiability.
pub fn solve_dpll(cnf: &Cnf, max_decisions: u64) -> Result<SatResult> {
    let mut dpll = Dpll::new(cnf);
    let assignment = dpll.run(max_decisions)?;
    Ok(SatResult {
        assignment,
        decisions: dpll.decisions,
        used_two_sat: false,
    })
}

const UNDEF: i8 = 0;

struct Dpll {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
    /// Clause indices watching each literal, keyed by `Lit::code`.
    watches: Vec<Vec<usize>>,
    units: Vec<Lit>,
    trivially_unsat: bool,
    value: Vec<i8>,
    trail: Vec<Lit>,
    levels: Vec<usize>,
    /// Decision literal per level and whether it is already the flipped branch.
    decided: Vec<(Lit, bool)>,
    qhead: usize,
    next_var: usize,
    decisions: u64,
}

impl Dpll {
    fn new(cnf: &Cnf) -> Dpll {
        let num_vars = cnf.num_vars() as usize;
        let mut watches = vec![Vec::new(); 2 * num_vars];
        let mut clauses = Vec::new();
        let mut units = Vec::new();
        let mut trivially_unsat = false;
        for clause in cnf.clauses() {
            let mut lits: Vec<Lit> = Vec::with_capacity(clause.len());
            let mut tautology = false;
            for &l in clause {
                if lits.contains(&l.negated()) {
                    tautology = true;
                    break;
                }
                if !lits.contains(&l) {
                    lits.push(l);
                }
            }
            if tautology {
                continue;
            }
            match lits.len() {
                0 => trivially_unsat = true,
                1 => units.push(lits[0]),
                _ => {
                    let idx = clauses.len();
                    watches[lits[0].code()].push(idx);
                    watches[lits[1].code()].push(idx);
                    clauses.push(lits);
                }
            }
        }
        Dpll {
            num_vars,
            clauses,
            watches,
            units,
            trivially_unsat,
            value: vec![UNDEF; num_vars],
            trail: Vec::with_capacity(num_vars),
            levels: Vec::new(),
            decided: Vec::new(),
            qhead: 0,
            next_var: 0,
            decisions: 0,
        }
    }

    #[inline]
    fn lit_value(&self, l: Lit) -> i8 {
        let v = self.value[l.var() as usize - 1];
        if l.is_positive() {
            v
        } else {
            -v
        }
    }

    /// Assigns `l` true; returns false if it is already false.
    fn enqueue(&mut self, l: Lit) -> bool {
        match self.lit_value(l) {
            1 => true,
            -1 => false,
            _ => {
                self.value[l.var() as usize - 1] = if l.is_positive() { 1 } else { -1 };
                self.trail.push(l);
                true
            }
        }
    }

    /// Returns false on conflict.
    fn propagate(&mut self) -> bool {
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            let false_lit = p.negated();
            let mut watching = std::mem::take(&mut self.watches[false_lit.code()]);
            let mut keep = 0;
            let mut conflict = false;
            let mut idx = 0;
            while idx < watching.len() {
                let ci = watching[idx];
                idx += 1;
                if conflict {
                    watching[keep] = ci;
                    keep += 1;
                    continue;
                }
                let clause = &mut self.clauses[ci];
                if clause[0] == false_lit {
                    clause.swap(0, 1);
                }
                let first = clause[0];
                if lit_value(&self.value, first) == 1 {
                    watching[keep] = ci;
                    keep += 1;
                    continue;
                }
                let mut moved = false;
                for t in 2..clause.len() {
                    if lit_value(&self.value, clause[t]) != -1 {
                        clause.swap(1, t);
                        let new_watch = clause[1];
                        self.watches[new_watch.code()].push(ci);
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                watching[keep] = ci;
                keep += 1;
                if !self.enqueue(first) {
                    conflict = true;
                }
            }
            watching.truncate(keep);
            // Clauses may have started watching `false_lit` while we held the list.
            let added = std::mem::replace(&mut self.watches[false_lit.code()], watching);
            self.watches[false_lit.code()].extend(added);
            if conflict {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let l = self.trail.pop().expect("trail shorter than target");
            let var = l.var() as usize - 1;
            self.value[var] = UNDEF;
            self.next_var = self.next_var.min(var);
        }
        self.qhead = len;
    }

    /// Backtracks to the most recent unflipped decision and flips it.
    /// Returns false when the search space is exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some((lit, flipped)) = self.decided.pop() {
            let start = self.levels.pop().expect("level without start");
            self.undo_to(start);
            if !flipped {
                self.levels.push(self.trail.len());
                self.decided.push((lit.negated(), true));
                self.enqueue(lit.negated());
                return true;
            }
        }
        false
    }

    fn run(&mut self, max_decisions: u64) -> Result<Option<Assignment>> {
        if self.trivially_unsat {
            return Ok(None);
        }
        for l in std::mem::take(&mut self.units) {
            if !self.enqueue(l) {
                return Ok(None);
            }
        }
        loop {
            if !self.propagate() {
                if !self.backtrack() {
                    return Ok(None);
                }
                continue;
            }
            while self.next_var < self.num_vars && self.value[self.next_var] != UNDEF {
                self.next_var += 1;
            }
            if self.next_var == self.num_vars {
                let values = self.value.iter().map(|&v| v == 1).collect();
                return Ok(Some(Assignment::new(values)));
            }
            if self.decisions >= max_decisions {
                return Err(Error::BudgetExhausted(format!(
                    "SAT search exceeded {max_decisions} decisions"
                )));
            }
            self.decisions += 1;
            let lit = Lit::pos(self.next_var as u32 + 1);
            self.levels.push(self.trail.len());
            self.decided.push((lit, false));
            self.enqueue(lit);
        }
    }
}

#[inline]
fn lit_value(values: &[i8], l: Lit) -> i8 {
    let v = values[l.var() as usize - 1];
    if l.is_positive() {
        v
    } else {
        -v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cnf(num_vars: u32, clauses: &[&[i32]]) -> Cnf {
        let mut f = Cnf::new(num_vars);
        for c in clauses {
            let lits: Vec<Lit> = c.iter().map(|&x| Lit::from_dimacs(x).unwrap()).collect();
            f.add_clause(&lits).unwrap();
        }
        f
    }

    fn brute_force(f: &Cnf) -> bool {
        let n = f.num_vars();
        (0u32..1 << n).any(|mask| {
            let a = Assignment::new((0..n).map(|v| mask >> v & 1 == 1).collect());
            f.is_satisfied_by(&a)
        })
    }

    #[test]
    fn spec_examples() {
        let empty = cnf(1, &[]);
        assert!(solve_cnf(&empty, 10).unwrap().is_sat());
        let contradiction = cnf(1, &[&[1], &[-1]]);
        assert!(!solve_cnf(&contradiction, 10).unwrap().is_sat());
        let all_four = cnf(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]);
        let r = solve_cnf(&all_four, 10).unwrap();
        assert!(r.used_two_sat && !r.is_sat());
        assert!(!solve_dpll(&all_four, 10).unwrap().is_sat());
    }

    #[test]
    fn dpll_finds_models_of_longer_clauses() {
        let f = cnf(3, &[&[1, 2, 3], &[-1], &[-2], &[-3, 1, 2]]);
        assert!(!solve_cnf(&f, 100).unwrap().is_sat());
        let g = cnf(4, &[&[1, 2, 3], &[-1, -2], &[-1, -3], &[-2, -3], &[4, -1, 2]]);
        let r = solve_cnf(&g, 100).unwrap();
        assert!(!r.used_two_sat);
        assert!(g.is_satisfied_by(r.assignment.as_ref().unwrap()));
    }

    #[test]
    fn decision_budget_is_not_unsat() {
        // Pigeonhole 4 into 3 needs several decisions.
        let mut f = Cnf::new(12);
        let var = |p: u32, h: u32| p * 3 + h + 1;
        for p in 0..4 {
            f.add_clause(&[Lit::pos(var(p, 0)), Lit::pos(var(p, 1)), Lit::pos(var(p, 2))])
                .unwrap();
        }
        for h in 0..3 {
            for p in 0..4 {
                for q in p + 1..4 {
                    f.add_clause(&[Lit::neg(var(p, h)), Lit::neg(var(q, h))]).unwrap();
                }
            }
        }
        assert!(matches!(solve_dpll(&f, 1), Err(Error::BudgetExhausted(_))));
        assert!(!solve_dpll(&f, 1_000).unwrap().is_sat());
    }

    #[test]
    fn agrees_with_exhaustive_search_on_small_formulas() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for round in 0..3000 {
            let n = rng.gen_range(1..=8u32);
            let max_len = if round % 2 == 0 { 2 } else { 4 };
            let mut f = Cnf::new(n);
            for _ in 0..rng.gen_range(0..=3 * n) {
                let len = rng.gen_range(1..=max_len);
                let lits: Vec<Lit> = (0..len)
                    .map(|_| {
                        let v = rng.gen_range(1..=n);
                        if rng.gen_bool(0.5) {
                            Lit::pos(v)
                        } else {
                            Lit::neg(v)
                        }
                    })
                    .collect();
                f.add_clause(&lits).unwrap();
            }
            let expected = brute_force(&f);
            let d = solve_dpll(&f, u64::MAX).unwrap();
            assert_eq!(d.is_sat(), expected, "{f:?}");
            if let Some(a) = &d.assignment {
                assert!(f.is_satisfied_by(a));
            }
            if f.is_two_cnf() {
                let t = solve_two_sat(&f).unwrap();
                assert_eq!(t.is_some(), expected, "{f:?}");
                if let Some(a) = &t {
                    assert!(f.is_satisfied_by(a));
                }
            }
        }
    }
}
