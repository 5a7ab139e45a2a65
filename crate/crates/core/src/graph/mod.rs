//! Dense directed graphs and tournaments.
//!
//! Adjacency is stored as a pair of bit matrices: one row per vertex for
//! out-neighbours and one for in-neighbours. Length-2 path counts and king
//! checks then reduce to word-wise AND/OR plus popcount.

mod relabel;
mod tournament;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use relabel::Relabeling;
pub use tournament::{random_tournament, Tournament};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("antiparallel edges between {0} and {1}")]
    AntiParallel(usize, usize),
    #[error("pair {{{0}, {1}}} carries no edge, so the graph is not a tournament")]
    MissingPair(usize, usize),
    #[error("a vertex pair needs two distinct endpoints, got {0} twice")]
    SameEndpoints(usize),
    #[error("relabeling is not a permutation of [0, {0})")]
    NotAPermutation(usize),
    #[error("relabeling acts on {expected} vertices but the graph has {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("order must be an odd positive integer, got {0}")]
    NotOdd(usize),
    #[error("order {n} is below the minimum {min} for this construction")]
    TooSmall { n: usize, min: usize },
    #[error("parameter {name} = {value} out of range (must be < {bound})")]
    ParameterOutOfRange {
        name: &'static str,
        value: usize,
        bound: usize,
    },
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An unordered vertex pair, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgePair {
    lo: usize,
    hi: usize,
}

impl EdgePair {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(EdgePair { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(EdgePair { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SameEndpoints(a)),
        }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn contains(self, v: usize) -> bool {
        self.lo == v || self.hi == v
    }

    /// All pairs on `[0, n)` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = EdgePair> {
        (0..n).flat_map(move |lo| (lo + 1..n).map(move |hi| EdgePair { lo, hi }))
    }

    /// Position of this pair in the lexicographic enumeration of [`EdgePair::all`].
    pub fn index(self, n: usize) -> usize {
        // Pairs with first element < lo, then offset within row lo.
        self.lo * (2 * n - self.lo - 1) / 2 + (self.hi - self.lo - 1)
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

/// A simple directed graph on `[0, n)`: no self-loops and no 2-cycles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    out_rows: Vec<u64>,
    in_rows: Vec<u64>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Digraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Digraph {
            n,
            words,
            out_rows: vec![0; n * words],
            in_rows: vec![0; n * words],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(n);
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.edge(v, u) {
                return Err(GraphError::AntiParallel(u, v));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.out_rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(u, v)` sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.row_iter(self.out_row(u)).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.edge(u, v))
    }

    pub fn out_neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok(self.row_iter(self.out_row(v)).collect())
    }

    pub fn in_neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok(self.row_iter(self.in_row(v)).collect())
    }

    pub fn out_degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.out_deg(v))
    }

    pub fn in_degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(popcount(self.in_row(v)))
    }

    /// Number of length-2 paths `u -> w -> v`.
    pub fn delta(&self, u: usize, v: usize) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SameEndpoints(u));
        }
        Ok(self.paths2(u, v))
    }

    /// Whether `v` reaches every other vertex by a path of length at most two.
    pub fn is_king(&self, v: usize) -> Result<bool> {
        self.check(v)?;
        Ok(self.king(v))
    }

    pub fn kings(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.king(v)).collect()
    }

    pub fn exists_king(&self) -> bool {
        (0..self.n).any(|v| self.king(v))
    }

    /// Whether every vertex is in `set` or has an in-neighbour in `set`.
    pub fn is_dominating_set(&self, set: &[usize]) -> Result<bool> {
        let mut covered = vec![0u64; self.words];
        for &s in set {
            self.check(s)?;
            covered[s / WORD] |= 1 << (s % WORD);
            or_into(&mut covered, self.out_row(s));
        }
        Ok(self.is_full(&covered))
    }

    /// All two-element dominating sets, in lexicographic order.
    pub fn dominating_pairs(&self) -> Vec<EdgePair> {
        EdgePair::all(self.n)
            .filter(|p| {
                self.is_dominating_set(&[p.lo, p.hi])
                    .expect("pairs are in range")
            })
            .collect()
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph> {
        for &v in vertices {
            self.check(v)?;
        }
        let mut g = Digraph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if u == v && a != b {
                    return Err(GraphError::NotAPermutation(vertices.len()));
                }
                if self.edge(u, v) {
                    g.insert(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Image of this graph under `r`: edge `r(u) -> r(v)` for every edge `u -> v`.
    pub fn relabel(&self, r: &Relabeling) -> Result<Digraph> {
        if r.len() != self.n {
            return Err(GraphError::SizeMismatch {
                expected: r.len(),
                actual: self.n,
            });
        }
        let mut g = Digraph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert(r.apply(u), r.apply(v));
        }
        Ok(g)
    }

    /// Whether every pair of distinct vertices carries exactly one edge.
    pub fn is_complete(&self) -> bool {
        self.missing_pair().is_none()
    }

    pub(crate) fn missing_pair(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.edge(u, v) && !self.edge(v, u) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub(crate) fn edge(&self, u: usize, v: usize) -> bool {
        self.out_rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    fn out_row(&self, u: usize) -> &[u64] {
        &self.out_rows[u * self.words..(u + 1) * self.words]
    }

    #[inline]
    fn in_row(&self, v: usize) -> &[u64] {
        &self.in_rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn out_deg(&self, v: usize) -> usize {
        popcount(self.out_row(v))
    }

    #[inline]
    pub(crate) fn paths2(&self, u: usize, v: usize) -> usize {
        self.out_row(u)
            .iter()
            .zip(self.in_row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub(crate) fn king(&self, v: usize) -> bool {
        let mut reach = self.out_row(v).to_vec();
        reach[v / WORD] |= 1 << (v % WORD);
        for w in self.row_iter(self.out_row(v)) {
            or_into(&mut reach, self.out_row(w));
        }
        self.is_full(&reach)
    }

    /// Strong-king test without the tournament check; callers guarantee `v < n`.
    pub(crate) fn strong_king(&self, v: usize) -> bool {
        self.king(v)
            && self
                .row_iter(self.in_row(v))
                .all(|u| self.paths2(v, u) > self.paths2(u, v))
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.out_rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.in_rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.out_rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.in_rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    fn is_full(&self, bits: &[u64]) -> bool {
        let full_words = self.n / WORD;
        if bits[..full_words].iter().any(|&w| w != u64::MAX) {
            return false;
        }
        let rem = self.n % WORD;
        rem == 0 || bits[full_words] == (1u64 << rem) - 1
    }

    fn row_iter<'a>(&self, row: &'a [u64]) -> impl Iterator<Item = usize> + 'a {
        row.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }
}

fn popcount(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

fn or_into(acc: &mut [u64], row: &[u64]) {
    for (a, b) in acc.iter_mut().zip(row) {
        *a |= b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> Digraph {
        Digraph::from_edges(2, [(0, 1)]).unwrap()
    }

    fn three_cycle() -> Digraph {
        Digraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn single_edge_accessors() {
        let g = single_edge();
        assert!(g.has_edge(0, 1).unwrap());
        assert!(!g.has_edge(1, 0).unwrap());
        assert!(!g.has_edge(1, 1).unwrap());
        assert_eq!(
            g.has_edge(0, 2),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(g.delta(0, 1).unwrap(), 0);
        assert_eq!(g.delta(0, 0), Err(GraphError::SameEndpoints(0)));
        assert!(!g.is_king(1).unwrap());
        assert!(g.is_king(0).unwrap());
    }

    #[test]
    fn rejects_loops_and_two_cycles() {
        assert_eq!(
            Digraph::from_edges(2, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Digraph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::AntiParallel(1, 0))
        );
        assert!(Digraph::from_edges(2, [(0, 5)]).is_err());
    }

    #[test]
    fn single_vertex_is_a_king_with_no_out_edges() {
        let g = Digraph::empty(1);
        assert_eq!(g.out_degree(0).unwrap(), 0);
        assert_eq!(g.kings(), vec![0]);
    }

    #[test]
    fn three_cycle_everything_dominates() {
        let g = three_cycle();
        assert_eq!(g.kings(), vec![0, 1, 2]);
        assert_eq!(g.dominating_pairs().len(), 3);
        assert!(g.is_dominating_set(&[0]).is_ok_and(|d| !d));
    }

    #[test]
    fn edges_cross_word_boundaries() {
        let n = 130;
        let edges: Vec<_> = (0..n - 1).map(|u| (u, u + 1)).collect();
        let g = Digraph::from_edges(n, edges.clone()).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), edges);
        assert_eq!(g.delta(63, 65).unwrap(), 1);
        assert_eq!(g.in_neighbors(64).unwrap(), vec![63]);
        assert!(!g.is_king(0).unwrap());
    }

    #[test]
    fn pair_index_matches_enumeration() {
        for n in 2..9 {
            for (i, p) in EdgePair::all(n).enumerate() {
                assert_eq!(p.index(n), i);
            }
        }
        assert_eq!(EdgePair::new(3, 1).unwrap(), EdgePair::new(1, 3).unwrap());
        assert!(EdgePair::new(2, 2).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_internal_edges() {
        let g = three_cycle();
        let h = g.induced(&[2, 0]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
