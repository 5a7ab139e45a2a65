//! Library results against hand-built matrices and values worked out by hand.

mod common;

use std::collections::BTreeSet;

use num_rational::Ratio;

use king_query::constructions::{build_c, build_c_flip, build_delta, build_u, build_u_flip};
use king_query::harness::baselines::{ConstantExistKing, ConstantVertex};
use king_query::query::{leaf_audit_exist_king, leaf_audit_strong_king};
use king_query::{EdgePair, OddN};

use common::Matrix;

fn odd(n: usize) -> OddN {
    OddN::new(n).unwrap()
}

fn pairs(list: &[(usize, usize)]) -> Vec<(usize, usize)> {
    list.to_vec()
}

/// Δn from its recursive description, on a plain matrix.
#[allow(clippy::needless_range_loop)]
fn naive_delta(n: usize) -> Matrix {
    let mut a = vec![vec![false; n]; n];
    let mut m = 3;
    if n >= 3 {
        a[0][1] = true;
        a[1][2] = true;
        a[2][0] = true;
    }
    while m < n {
        let (top, pivot) = (m + 1, m);
        for v in 0..pivot {
            a[top][v] = true;
            a[v][pivot] = true;
        }
        a[pivot][top] = true;
        m += 2;
    }
    a
}

fn naive_dominating_pairs(a: &Matrix) -> BTreeSet<(usize, usize)> {
    let n = a.len();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            if (0..n).all(|u| u == x || u == y || a[x][u] || a[y][u]) {
                out.insert((x, y));
            }
        }
    }
    out
}

#[test]
fn delta_matches_recursive_description() {
    for n in (1..=15).step_by(2) {
        assert_eq!(common::matrix(&build_delta(odd(n))), naive_delta(n), "n = {n}");
    }
}

#[test]
fn u_matches_parity_rule() {
    for n in (1..=21).step_by(2) {
        assert_eq!(common::matrix(&build_u(odd(n))), common::rotational(n), "n = {n}");
    }
}

#[test]
fn c_matches_block_layout() {
    for n in [5, 7] {
        let inner = naive_delta(n);
        let left = common::rotational(n);
        let a = common::matrix(&build_c(odd(n)).unwrap());
        for u in 0..2 * n {
            for v in 0..2 * n {
                let want = match (u < n, v < n) {
                    (true, true) => left[u][v],
                    (false, false) => inner[u - n][v - n],
                    (true, false) => v == 2 * n - 1,
                    (false, true) => false,
                };
                assert_eq!(a[u][v], want, "n = {n}, ({u}, {v})");
            }
        }
        for i in 0..n {
            for j in 0..n - 1 {
                let b = common::matrix(&build_c_flip(odd(n), i, j).unwrap());
                let mut want = a.clone();
                want[i][n + j] = true;
                assert_eq!(b, want);
                assert!(common::is_king(&b, i));
            }
        }
        assert!((0..2 * n).all(|v| !common::is_king(&a, v)));
    }
}

#[test]
fn destroying_set_of_u5_vertex_0() {
    let a = common::rotational(5);
    let expected = pairs(&[(0, 1), (0, 3), (1, 2), (1, 4), (2, 4), (3, 4)]);
    assert_eq!(common::destroying(&a, 0), expected);
    let lib: Vec<(usize, usize)> = build_u(odd(5))
        .destroying_edges(0)
        .unwrap()
        .into_iter()
        .map(|e| (e.lo(), e.hi()))
        .collect();
    assert_eq!(lib, expected);
}

#[test]
fn destroying_set_sizes_by_brute_force() {
    for n in (3..=11).step_by(2) {
        let a = common::rotational(n);
        for v in 0..n {
            assert_eq!(common::destroying(&a, v).len(), (n * n - 1) / 4, "n = {n}, v = {v}");
        }
    }
}

#[test]
fn single_flips_of_u5() {
    let e = EdgePair::new(2, 4).unwrap();
    let b = common::flipped(&common::rotational(5), 2, 4);
    let naive: Vec<usize> = (0..5).filter(|&v| common::is_strong_king(&b, v)).collect();
    assert_eq!(naive, vec![1, 2]);
    assert_eq!(build_u_flip(odd(5), e).unwrap().strong_kings(), naive);

    let b = common::flipped(&common::rotational(5), 0, 2);
    assert!(common::is_strong_king(&b, 0));
    let t = build_u_flip(odd(5), EdgePair::new(0, 2).unwrap()).unwrap();
    assert!(t.is_strong_king(0).unwrap());
}

#[test]
fn delta_dominating_pairs() {
    let a = naive_delta(5);
    let want: BTreeSet<_> = [(0, 4), (1, 4), (2, 4), (3, 4)].into_iter().collect();
    assert_eq!(naive_dominating_pairs(&a), want);
    let lib: BTreeSet<_> = build_delta(odd(5))
        .dominating_pairs()
        .into_iter()
        .map(|e| (e.lo(), e.hi()))
        .collect();
    assert_eq!(lib, want);

    let d7 = build_delta(odd(7));
    assert!(!d7.is_dominating_set(&[2, 5]).unwrap());
    assert!(!naive_dominating_pairs(&naive_delta(7)).contains(&(2, 5)));
}

#[test]
fn three_cycle_every_pair_dominates() {
    let t = build_delta(odd(3));
    assert_eq!(t.dominating_pairs().len(), 3);
    assert_eq!(naive_dominating_pairs(&naive_delta(3)).len(), 3);
}

#[test]
fn constant_vertex_audit_is_destroying_share() {
    for n in [3, 5, 7, 9] {
        let a = common::rotational(n);
        let flips = (n * (n - 1) / 2) as u64;
        for v in 0..n {
            let p = ConstantVertex { order: n, vertex: v };
            let audit = leaf_audit_strong_king(&p, odd(n), 0).unwrap();
            let want = Ratio::new(common::destroying(&a, v).len() as u64, flips);
            assert_eq!(audit.bound, want, "n = {n}, v = {v}");
        }
    }
    let audit = leaf_audit_strong_king(&ConstantVertex { order: 5, vertex: 0 }, odd(5), 0).unwrap();
    assert_eq!(audit.bound, Ratio::new(3, 5));
}

#[test]
fn constant_exist_audits_are_half() {
    for n in [5, 7, 9] {
        for answer in [true, false] {
            let p = ConstantExistKing { order: 2 * n, answer };
            let audit = leaf_audit_exist_king(&p, odd(n), 0).unwrap();
            assert_eq!(audit.bound, Ratio::new(1, 2));
            assert_eq!(audit.query_count, 0);
        }
    }
}
