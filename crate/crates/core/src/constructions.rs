//! The concrete graph families used by the lower-bound arguments.
//!
//! * `Δn` ([`build_delta`]): recursive balanced tournament whose only dominating
//!   pairs are those containing the top vertex `n - 1`.
//! * `Un` ([`build_u`]): rotational regular tournament, `i -> j` for `i < j`
//!   exactly when `i + j` is odd.
//! * `C` ([`build_c`]): a kingless digraph on `2n` vertices made of `Un` and a
//!   shifted copy of `Δn`, plus its one-edge perturbations `C(i, j)`.

use serde::Serialize;

use crate::graph::{Digraph, EdgePair, GraphError, Result, Tournament};

/// An odd positive vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OddN(usize);

impl OddN {
    pub fn new(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            Ok(OddN(n))
        } else {
            Err(GraphError::NotOdd(n))
        }
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Odd values in `[1, max]`.
    pub fn up_to(max: usize) -> impl Iterator<Item = OddN> {
        (1..=max).step_by(2).map(OddN)
    }
}

impl TryFrom<usize> for OddN {
    type Error = GraphError;

    fn try_from(n: usize) -> Result<Self> {
        OddN::new(n)
    }
}

/// Smallest order accepted by [`build_c`].
pub const MIN_C_ORDER: usize = 5;

pub fn build_delta(n: OddN) -> Tournament {
    let n = n.get();
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    let mut size = 3;
    while size <= n {
        let top = size - 1;
        let low = size - 2;
        for v in 0..low {
            edges.push((top, v));
            edges.push((v, low));
        }
        edges.push((low, top));
        size += 2;
    }
    let g = Digraph::from_edges(n, edges).expect("construction yields a simple digraph");
    Tournament::try_from(g).expect("construction orients every pair")
}

pub fn build_u(n: OddN) -> Tournament {
    Tournament::from_orientation(n.get(), |i, j| (i + j) % 2 == 1)
}

/// Kingless digraph on `2n` vertices: `Un` on `[0, n)`, `Δn` shifted by `n` on
/// `[n, 2n)`, and an edge from every lower vertex into `2n - 1`.
pub fn build_c(n: OddN) -> Result<Digraph> {
    let n = n.get();
    if n < MIN_C_ORDER {
        return Err(GraphError::TooSmall {
            n,
            min: MIN_C_ORDER,
        });
    }
    let upper = build_delta(OddN(n));
    let lower = build_u(OddN(n));
    let edges = lower
        .edges()
        .chain(upper.edges().map(|(u, v)| (u + n, v + n)))
        .chain((0..n).map(|i| (i, 2 * n - 1)));
    Digraph::from_edges(2 * n, edges)
}

/// `C` plus the single edge `i -> n + j`, for `i < n` and `j < n - 1`.
pub fn build_c_flip(n: OddN, i: usize, j: usize) -> Result<Digraph> {
    let order = n.get();
    if i >= order {
        return Err(GraphError::ParameterOutOfRange {
            name: "i",
            value: i,
            bound: order,
        });
    }
    if j + 1 >= order {
        return Err(GraphError::ParameterOutOfRange {
            name: "j",
            value: j,
            bound: order - 1,
        });
    }
    let c = build_c(n)?;
    Digraph::from_edges(2 * order, c.edges().chain([(i, order + j)]))
}

/// `Un` with the orientation of `e` reversed.
pub fn build_u_flip(n: OddN, e: EdgePair) -> Result<Tournament> {
    build_u(n).flip_edge(e)
}
