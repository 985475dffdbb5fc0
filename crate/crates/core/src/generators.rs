//! Instance generators: the three hardness reductions and random matrices.
//!
//! Each reduction comes with a translator mapping a solution back to the
//! source problem, so the reverse direction can be checked on small inputs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::consecutive::CutSet;
use crate::error::{invalid, Result};
use crate::instance::Instance;
use crate::matrix::IntMatrix;
use crate::partition::CoClustering;

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Edges are stored as `(smaller, larger)` in input order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(invalid(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(SimpleGraph { n, edges: out })
    }

    /// Same as [`SimpleGraph::new`] with vertices numbered from 1.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let shifted: Result<Vec<_>> = edges
            .iter()
            .map(|&(u, v)| match (u.checked_sub(1), v.checked_sub(1)) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(invalid("vertex 0 in a 1-based edge list")),
            })
            .collect();
        SimpleGraph::new(n, &shifted?)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Whether `colors` (one per vertex) gives distinct colours to adjacent vertices.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n && self.edges.iter().all(|&(u, v)| colors[u] != colors[v])
    }
}

/// Edge-by-vertex matrix with 0 at the smaller endpoint, 2 at the larger and 1
/// elsewhere; the graph is 3-colourable iff the instance at `(3, 3, 1)` is a
/// yes-instance. Block counts are capped by the matrix size, which keeps the
/// equivalence for graphs with fewer than three edges or vertices.
pub fn from_3coloring(g: &SimpleGraph) -> Result<Instance> {
    if g.edges.is_empty() {
        return Err(invalid("graph needs at least one edge"));
    }
    let n = g.n;
    let mut data = vec![1; g.edges.len() * n];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        data[i * n + u] = 0;
        data[i * n + v] = 2;
    }
    let a = IntMatrix::from_row_major(g.edges.len(), n, data)?;
    let (k, l) = (3.min(a.rows()), 3.min(n));
    Instance::new(a, k, l, 1)
}

/// Vertex colouring read off the column blocks.
pub fn coloring_from_coclustering(cc: &CoClustering) -> Vec<usize> {
    cc.cols.labels()
}

/// Finite integer point set in the plane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet2D {
    pub points: Vec<(i64, i64)>,
}

impl PointSet2D {
    pub fn new(points: Vec<(i64, i64)>) -> PointSet2D {
        PointSet2D { points }
    }
}

/// Two-row matrix with the points as columns; the instance at `(2, l, 2)` is a
/// yes-instance iff `l` axis-parallel squares of side 2 cover the points.
pub fn from_box_cover(points: &PointSet2D, l: usize) -> Result<Instance> {
    let p = &points.points;
    if p.is_empty() {
        return Err(invalid("point set is empty"));
    }
    let a = IntMatrix::new(vec![p.iter().map(|q| q.0).collect(), p.iter().map(|q| q.1).collect()])?;
    if l == 0 {
        return Err(invalid("need at least one square"));
    }
    Instance::new(a, 2, l.min(p.len()), 2)
}

/// Lower-left corners of side-2 squares covering each column block's points.
/// Valid whenever the co-clustering has cost at most 2.
pub fn squares_from_coclustering(points: &PointSet2D, cc: &CoClustering) -> Vec<(i64, i64)> {
    cc.cols
        .blocks()
        .iter()
        .map(|b| {
            let x = b.iter().map(|&j| points.points[j].0).min().unwrap_or(0);
            let y = b.iter().map(|&j| points.points[j].1).min().unwrap_or(0);
            (x, y)
        })
        .collect()
}

/// Black and white integer points, disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredPointSet {
    black: Vec<(i64, i64)>,
    white: Vec<(i64, i64)>,
}

impl ColoredPointSet {
    pub fn new(black: Vec<(i64, i64)>, white: Vec<(i64, i64)>) -> Result<ColoredPointSet> {
        let b: HashSet<_> = black.iter().collect();
        if let Some(p) = white.iter().find(|p| b.contains(p)) {
            return Err(invalid(format!("point {p:?} is both black and white")));
        }
        Ok(ColoredPointSet { black, white })
    }

    pub fn black(&self) -> &[(i64, i64)] {
        &self.black
    }

    pub fn white(&self) -> &[(i64, i64)] {
        &self.white
    }

    fn all(&self) -> impl Iterator<Item = &(i64, i64)> {
        self.black.iter().chain(&self.white)
    }
}

/// Which coordinates index the rows and columns of the discretization matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum GridMode {
    /// Only coordinates that occur in the point set.
    #[default]
    DistinctCoordinates,
    /// Every integer between the smallest and largest coordinate.
    IntegerRange,
}

/// Consecutive instance built from a coloured point set, with the coordinate
/// behind every row and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discretization {
    pub instance: Instance,
    /// y-coordinate of each row, increasing.
    pub ys: Vec<i64>,
    /// x-coordinate of each column, increasing.
    pub xs: Vec<i64>,
}

fn grid(coords: impl Iterator<Item = i64>, mode: GridMode) -> Vec<i64> {
    let mut v: Vec<i64> = coords.collect();
    v.sort_unstable();
    v.dedup();
    match mode {
        GridMode::DistinctCoordinates => v,
        GridMode::IntegerRange => (v[0]..=v[v.len() - 1]).collect(),
    }
}

/// Matrix with 0 at white points, 2 at black points and 1 elsewhere, targeted
/// at consecutive `(k + 1, l + 1, 1)`: `k` horizontal and `l` vertical lines
/// separate the colours iff the consecutive instance is feasible.
pub fn from_optimal_discretization(s: &ColoredPointSet, k: usize, l: usize, mode: GridMode) -> Result<Discretization> {
    if s.black.is_empty() || s.white.is_empty() {
        return Err(invalid("need at least one black and one white point"));
    }
    let ys = grid(s.all().map(|p| p.1), mode);
    let xs = grid(s.all().map(|p| p.0), mode);
    let (m, n) = (ys.len(), xs.len());
    let mut data = vec![1; m * n];
    let pos = |v: &[i64], x: i64| v.binary_search(&x).expect("coordinate on grid");
    for &(x, y) in &s.white {
        data[pos(&ys, y) * n + pos(&xs, x)] = 0;
    }
    for &(x, y) in &s.black {
        data[pos(&ys, y) * n + pos(&xs, x)] = 2;
    }
    let a = IntMatrix::from_row_major(m, n, data)?;
    let instance = Instance::new(a, k + 1, l + 1, 1)?;
    Ok(Discretization { instance, ys, xs })
}

/// Horizontal and vertical separating lines for a consecutive solution, each
/// halfway between the coordinates on either side of a cut.
pub fn lines_from_cutset(d: &Discretization, cuts: &CutSet) -> (Vec<f64>, Vec<f64>) {
    let mid = |v: &[i64], t: usize| (v[t - 1] + v[t]) as f64 / 2.0;
    (
        cuts.rows().iter().map(|&t| mid(&d.ys, t)).collect(),
        cuts.cols().iter().map(|&t| mid(&d.xs, t)).collect(),
    )
}

/// Whether the lines leave no grid cell with points of both colours.
pub fn lines_are_consistent(s: &ColoredPointSet, horizontal: &[f64], vertical: &[f64]) -> bool {
    let cell = |&(x, y): &(i64, i64)| {
        (
            horizontal.iter().filter(|&&h| h < y as f64).count(),
            vertical.iter().filter(|&&v| v < x as f64).count(),
        )
    };
    let black: HashSet<_> = s.black.iter().map(cell).collect();
    s.white.iter().all(|p| !black.contains(&cell(p)))
}

/// Uniform entries from `0..alphabet_size`, reproducible from `seed`.
pub fn random_instance(m: usize, n: usize, alphabet_size: usize, seed: u64) -> Result<IntMatrix> {
    if alphabet_size == 0 {
        return Err(invalid("alphabet size must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..m * n).map(|_| rng.gen_range(0..alphabet_size as i64)).collect();
    IntMatrix::from_row_major(m, n, data)
}
