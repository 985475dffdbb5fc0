//! Brute-force checks for the source problems of the reductions.
#![allow(dead_code)]

use coclust::generators::{ColoredPointSet, PointSet2D, SimpleGraph};

/// Tries all `3^n` colourings.
pub fn three_colorable(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    loop {
        if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < 3 {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Every simple graph on `n` labelled vertices, as edge lists.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            SimpleGraph::new(n, &edges).unwrap()
        })
        .collect()
}

fn covers(sq: (i64, i64), p: (i64, i64)) -> bool {
    sq.0 <= p.0 && p.0 <= sq.0 + 2 && sq.1 <= p.1 && p.1 <= sq.1 + 2
}

/// Can `l` closed side-2 squares cover the points? Some square of any cover
/// can be shifted so its lower-left corner sits at a point offset by 0, -1 or
/// -2 in each axis, so those corners suffice.
pub fn box_cover_possible(points: &PointSet2D, l: usize) -> bool {
    fn rec(points: &[(i64, i64)], squares: &mut Vec<(i64, i64)>, l: usize) -> bool {
        let Some(&p) = points.iter().find(|&&p| !squares.iter().any(|&s| covers(s, p))) else {
            return true;
        };
        if squares.len() == l {
            return false;
        }
        for dx in [0, -1, -2] {
            for dy in [0, -1, -2] {
                squares.push((p.0 + dx, p.1 + dy));
                let ok = rec(points, squares, l);
                squares.pop();
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(&points.points, &mut Vec::new(), l)
}

fn subsets(size: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![vec![]];
    }
    (0u32..1 << size)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (0..size).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Can `k` horizontal and `l` vertical lines, placed between distinct
/// occurring coordinates, leave every cell single-coloured?
pub fn lines_possible(s: &ColoredPointSet, k: usize, l: usize) -> bool {
    let mut ys: Vec<i64> = s.black().iter().chain(s.white()).map(|p| p.1).collect();
    let mut xs: Vec<i64> = s.black().iter().chain(s.white()).map(|p| p.0).collect();
    ys.sort_unstable();
    ys.dedup();
    xs.sort_unstable();
    xs.dedup();
    // Gap t lies between coordinates t and t + 1; a line there separates them.
    for h in subsets(ys.len() - 1, k) {
        for v in subsets(xs.len() - 1, l) {
            let cell = |p: &(i64, i64)| {
                let row = h.iter().filter(|&&t| ys[t] < p.1).count();
                let col = v.iter().filter(|&&t| xs[t] < p.0).count();
                (row, col)
            };
            let black: Vec<_> = s.black().iter().map(cell).collect();
            if s.white().iter().all(|p| !black.contains(&cell(p))) {
                return true;
            }
        }
    }
    false
}
