//! Naive reference implementations over a plain boolean matrix. These share no
//! code with the bit-matrix library paths they are used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use king_query::Digraph;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Digraph) -> Matrix {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v).unwrap()).collect())
        .collect()
}

pub fn delta(a: &Matrix, u: usize, v: usize) -> usize {
    (0..a.len()).filter(|&w| a[u][w] && a[w][v]).count()
}

pub fn is_king(a: &Matrix, v: usize) -> bool {
    (0..a.len()).all(|u| u == v || a[v][u] || (0..a.len()).any(|w| a[v][w] && a[w][u]))
}

pub fn is_strong_king(a: &Matrix, v: usize) -> bool {
    is_king(a, v) && (0..a.len()).all(|u| !a[u][v] || delta(a, v, u) > delta(a, u, v))
}

pub fn flipped(a: &Matrix, x: usize, y: usize) -> Matrix {
    let mut b = a.clone();
    let t = b[x][y];
    b[x][y] = b[y][x];
    b[y][x] = t;
    b
}

/// Pairs `(x, y)`, `x < y`, whose flip stops `v` being a strong king.
pub fn destroying(a: &Matrix, v: usize) -> Vec<(usize, usize)> {
    if !is_strong_king(a, v) {
        return Vec::new();
    }
    let n = a.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if !is_strong_king(&flipped(a, x, y), v) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Uₙ straight from its orientation rule.
pub fn rotational(n: usize) -> Matrix {
    let mut a = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if (i + j) % 2 == 1 {
                a[i][j] = true;
            } else {
                a[j][i] = true;
            }
        }
    }
    a
}
