mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coclust::consecutive::solve_consecutive;
use coclust::engine::{decide, Strategy};
use coclust::generators::{
    coloring_from_coclustering, from_3coloring, from_box_cover, from_optimal_discretization, lines_are_consistent,
    lines_from_cutset, squares_from_coclustering, ColoredPointSet, GridMode, PointSet2D,
};
use coclust::oracle::brute_force_decide;
use coclust::{cost, SearchContext};

#[test]
fn three_coloring_small_graphs_oracle() {
    let mut ctx = SearchContext::default();
    for n in 2..=4 {
        for g in common::all_graphs(n).into_iter().filter(|g| !g.edges().is_empty()) {
            let inst = from_3coloring(&g).unwrap();
            let got = brute_force_decide(&inst, &mut ctx).unwrap();
            assert_eq!(got.is_some(), common::three_colorable(&g), "{:?}", g.edges());
        }
    }
}

#[test]
fn three_coloring_five_vertices_engine() {
    let mut ctx = SearchContext::default();
    let mut yes = 0;
    let graphs = common::all_graphs(5);
    for g in graphs.iter().filter(|g| !g.edges().is_empty()) {
        let inst = from_3coloring(g).unwrap();
        let d = decide(&inst, Strategy::Auto, &mut ctx).unwrap();
        assert_eq!(d.is_feasible(), common::three_colorable(g), "{:?}", g.edges());
        if let Some(cc) = d.solution {
            yes += 1;
            assert!(cost(inst.matrix(), &cc).unwrap() <= 1);
            if inst.l() == 3 {
                assert!(g.is_proper_coloring(&coloring_from_coclustering(&cc)), "{:?}", g.edges());
            }
        }
    }
    // K5 minus at most two edges still contains a K4.
    assert!(yes > 0 && yes < graphs.len() - 1);
}

#[test]
fn box_cover_random_point_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut ctx = SearchContext::default();
    let (mut yes, mut no) = (0, 0);
    for _ in 0..300 {
        let size = rng.gen_range(1..=5);
        let pts = PointSet2D::new((0..size).map(|_| (rng.gen_range(0..6), rng.gen_range(0..6))).collect());
        for l in 1..=3 {
            let inst = from_box_cover(&pts, l).unwrap();
            let want = common::box_cover_possible(&pts, l);
            let d = decide(&inst, Strategy::Auto, &mut ctx).unwrap();
            assert_eq!(d.is_feasible(), want, "{pts:?} l={l}");
            assert_eq!(brute_force_decide(&inst, &mut ctx).unwrap().is_some(), want);
            match d.solution {
                Some(cc) => {
                    yes += 1;
                    let squares = squares_from_coclustering(&pts, &cc);
                    assert!(pts.points.iter().all(|p| squares
                        .iter()
                        .any(|s| s.0 <= p.0 && p.0 <= s.0 + 2 && s.1 <= p.1 && p.1 <= s.1 + 2)));
                }
                None => no += 1,
            }
        }
    }
    assert!(yes > 50 && no > 50, "yes {yes} no {no}");
}

#[test]
fn discretization_random_point_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    let mut ctx = SearchContext::default();
    let (mut yes, mut no) = (0, 0);
    for _ in 0..400 {
        let mut cells: Vec<(i64, i64)> = (0..rng.gen_range(2..=7))
            .map(|_| (rng.gen_range(0..4) * 2, rng.gen_range(0..4) * 3))
            .collect();
        cells.sort_unstable();
        cells.dedup();
        if cells.len() < 2 {
            continue;
        }
        let split = rng.gen_range(1..cells.len());
        let white = cells.split_off(split);
        let s = ColoredPointSet::new(cells, white).unwrap();
        let d = from_optimal_discretization(&s, 0, 0, GridMode::DistinctCoordinates).unwrap();
        let (m, n) = (d.ys.len(), d.xs.len());
        for k in 0..m {
            for l in 0..n {
                let want = common::lines_possible(&s, k, l);
                for mode in [GridMode::DistinctCoordinates, GridMode::IntegerRange] {
                    let d = from_optimal_discretization(&s, k, l, mode).unwrap();
                    let a = d.instance.matrix();
                    let got = solve_consecutive(a, k + 1, l + 1, 1, &mut ctx).unwrap();
                    assert_eq!(got.is_some(), want, "{s:?} k={k} l={l} {mode:?}");
                    if let Some(cuts) = got {
                        let (h, v) = lines_from_cutset(&d, &cuts);
                        assert!(lines_are_consistent(&s, &h, &v));
                    }
                }
                if want {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
        }
    }
    assert!(yes > 100 && no > 100, "yes {yes} no {no}");
}
