use coclust::fpt::{solve_fixed_row_partition, solve_k2_cost1_with, K2Cost1Options};
use coclust::oracle::{brute_force_decide, enumerate_partitions};
use coclust::{cost, Instance, IntMatrix, SearchContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check_k2(a: &IntMatrix, l: usize, ctx: &mut SearchContext) {
    let inst = Instance::new(a.clone(), 2, l, 1).unwrap();
    let expected = brute_force_decide(&inst, ctx).unwrap().is_some();
    for allow in [true, false] {
        let options = K2Cost1Options {
            allow_row_enumeration: allow,
            ..K2Cost1Options::default()
        };
        let got = solve_k2_cost1_with(a, l, options, ctx).unwrap();
        assert_eq!(got.is_some(), expected, "{a:?} l={l} enumeration={allow}");
        if let Some(cc) = got {
            assert_eq!(cc.shape(), (2, l));
            assert!(cost(a, &cc).unwrap() <= 1, "{a:?} {cc:?}");
        }
    }
}

#[test]
fn k2_cost1_matches_oracle_on_all_ternary_3x3() {
    let mut ctx = SearchContext::default();
    for code in 0..3usize.pow(9) {
        let data: Vec<i64> = (0..9).map(|x| (code / 3usize.pow(x)) as i64 % 3).collect();
        let a = IntMatrix::from_row_major(3, 3, data).unwrap();
        for l in 1..=3 {
            check_k2(&a, l, &mut ctx);
        }
    }
}

#[test]
fn k2_cost1_matches_oracle_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut ctx = SearchContext::default();
    for _ in 0..1500 {
        let m = rng.gen_range(2..=4);
        let n = rng.gen_range(1..=4);
        let data = (0..m * n).map(|_| rng.gen_range(0..4)).collect();
        let a = IntMatrix::from_row_major(m, n, data).unwrap();
        for l in 1..=n.min(3) {
            check_k2(&a, l, &mut ctx);
        }
    }
}

#[test]
fn fixed_row_partition_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ctx = SearchContext::default();
    for _ in 0..400 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=4);
        let data = (0..m * n).map(|_| rng.gen_range(0..5)).collect();
        let a = IntMatrix::from_row_major(m, n, data).unwrap();
        let c = rng.gen_range(0..=2);
        let l = rng.gen_range(1..=n);
        for rows in enumerate_partitions(m, m) {
            let got = solve_fixed_row_partition(&a, &rows, l, c, &mut ctx).unwrap();
            // Oracle: best column partition for these rows.
            let expected = enumerate_partitions(n, l).filter(|p| p.len() == l).any(|cols| {
                cost(&a, &coclust::CoClustering::new(rows.clone(), cols)).unwrap() <= c
            });
            assert_eq!(got.is_some(), expected, "{a:?} rows={rows:?} l={l} c={c}");
            if let Some(cols) = got {
                assert_eq!(cols.len(), l);
                assert!(cost(&a, &coclust::CoClustering::new(rows.clone(), cols)).unwrap() <= c);
            }
        }
    }
}

#[test]
fn overlapping_branch_alone_finds_planted_solutions() {
    let only_overlapping = K2Cost1Options {
        allow_row_enumeration: false,
        equal_bounds: false,
        non_overlapping: false,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut ctx = SearchContext::default();
    let mut planted = 0;
    while planted < 500 {
        let m = rng.gen_range(2..=5);
        let n = rng.gen_range(2..=6);
        let l = rng.gen_range(1..=n.min(3));
        // Distinct bound pairs (u, u +- 1) over values 0..=4.
        let mut pairs: Vec<(i64, i64)> = Vec::new();
        while pairs.len() < l {
            let u1 = rng.gen_range(0..4);
            let u2 = if rng.gen_bool(0.5) { u1 + 1 } else { u1 - 1 };
            if u2 >= 0 && !pairs.contains(&(u1, u2)) {
                pairs.push((u1, u2));
            }
        }
        let mut rows: Vec<usize> = (0..m).map(|_| rng.gen_range(0..2)).collect();
        rows[0] = 0;
        rows[1] = 1;
        let cols: Vec<usize> = (0..n).map(|j| if j < l { j } else { rng.gen_range(0..l) }).collect();
        let data = (0..m * n)
            .map(|x| {
                let (u1, u2) = pairs[cols[x % n]];
                let u = if rows[x / n] == 0 { u1 } else { u2 };
                u + rng.gen_range(0..=1)
            })
            .collect();
        let a = IntMatrix::from_row_major(m, n, data).unwrap();
        // Each planted cell must show both window values, so the windows lie in the alphabet.
        let mut seen = vec![(false, false); 2 * l];
        for i in 0..m {
            for j in 0..n {
                let (u1, u2) = pairs[cols[j]];
                let u = if rows[i] == 0 { u1 } else { u2 };
                let cell = &mut seen[rows[i] * l + cols[j]];
                if a.get(i, j) == u {
                    cell.0 = true;
                } else {
                    cell.1 = true;
                }
            }
        }
        if seen.iter().any(|&(x, y)| !(x && y)) {
            continue;
        }
        let got = solve_k2_cost1_with(&a, l, only_overlapping, &mut ctx).unwrap();
        let cc = got.unwrap_or_else(|| panic!("planted solution missed: {a:?} l={l}"));
        assert!(cost(&a, &cc).unwrap() <= 1);
        planted += 1;
    }
}
