use std::ops::Deref;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Digraph, EdgePair, GraphError, Relabeling, Result};

/// A digraph with exactly one edge between every pair of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tournament(Digraph);

impl TryFrom<Digraph> for Tournament {
    type Error = GraphError;

    fn try_from(g: Digraph) -> Result<Self> {
        match g.missing_pair() {
            Some((u, v)) => Err(GraphError::MissingPair(u, v)),
            None => Ok(Tournament(g)),
        }
    }
}

impl Deref for Tournament {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl From<Tournament> for Digraph {
    fn from(t: Tournament) -> Digraph {
        t.0
    }
}

impl Tournament {
    /// Builds a tournament by asking `forward(u, v)` for every `u < v`:
    /// `true` orients the pair `u -> v`, `false` orients it `v -> u`.
    pub fn from_orientation(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Digraph::empty(n);
        for p in EdgePair::all(n) {
            if forward(p.lo(), p.hi()) {
                g.insert(p.lo(), p.hi());
            } else {
                g.insert(p.hi(), p.lo());
            }
        }
        Tournament(g)
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    /// A king `v` such that every in-neighbour `u` satisfies `delta(v, u) > delta(u, v)`.
    pub fn is_strong_king(&self, v: usize) -> Result<bool> {
        self.check(v)?;
        Ok(self.strong_king(v))
    }

    pub fn strong_kings(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.strong_king(v)).collect()
    }

    /// Every vertex is a king.
    pub fn is_balanced(&self) -> bool {
        (0..self.order()).all(|v| self.king(v))
    }

    pub fn is_source(&self, v: usize) -> Result<bool> {
        Ok(self.out_degree(v)? + 1 == self.order())
    }

    /// Vertex of maximum out-degree; ties go to the smallest id.
    pub fn max_out_degree_vertex(&self) -> Result<usize> {
        (0..self.order())
            .rev()
            .max_by_key(|&v| self.out_deg(v))
            .ok_or(GraphError::Empty)
    }

    /// The tournament with the orientation of `e` reversed.
    pub fn flip_edge(&self, e: EdgePair) -> Result<Tournament> {
        self.check(e.hi())?;
        let mut t = self.clone();
        t.flip_in_place(e);
        Ok(t)
    }

    /// Pairs whose single flip stops `v` from being a strong king.
    ///
    /// Found by flipping every pair and re-running the strong-king test. If `v`
    /// is not a strong king to begin with the result is empty.
    pub fn destroying_edges(&self, v: usize) -> Result<Vec<EdgePair>> {
        self.check(v)?;
        if !self.strong_king(v) {
            return Ok(Vec::new());
        }
        let mut scratch = self.clone();
        let mut out = Vec::new();
        for e in EdgePair::all(self.order()) {
            scratch.flip_in_place(e);
            if !scratch.strong_king(v) {
                out.push(e);
            }
            scratch.flip_in_place(e);
        }
        Ok(out)
    }

    pub fn relabel(&self, r: &Relabeling) -> Result<Tournament> {
        Ok(Tournament(self.0.relabel(r)?))
    }

    /// Whether the cyclic shift by `i` maps this tournament onto itself.
    pub fn rotation_is_automorphism(&self, i: i64) -> bool {
        let r = Relabeling::rotation(self.order(), i);
        self.edges().all(|(u, v)| self.edge(r.apply(u), r.apply(v)))
    }

    fn flip_in_place(&mut self, e: EdgePair) {
        let (a, b) = if self.0.edge(e.lo(), e.hi()) {
            (e.lo(), e.hi())
        } else {
            (e.hi(), e.lo())
        };
        self.0.remove(a, b);
        self.0.insert(b, a);
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }
}

/// Uniformly random tournament from a ChaCha8 stream seeded with `seed`.
///
/// Pairs are visited in lexicographic order and each draws one bit.
pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Tournament::from_orientation(n, |_, _| rng.random::<bool>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> Tournament {
        Tournament::try_from(Digraph::from_edges(2, [(0, 1)]).unwrap()).unwrap()
    }

    #[test]
    fn two_vertex_tournament() {
        let t = pair();
        assert!(t.is_strong_king(0).unwrap());
        assert!(!t.is_strong_king(1).unwrap());
        assert!(t.is_source(0).unwrap());
        assert!(!t.is_balanced());
        assert_eq!(t.max_out_degree_vertex().unwrap(), 0);
        assert_eq!(
            t.destroying_edges(0).unwrap(),
            vec![EdgePair::new(0, 1).unwrap()]
        );
        assert!(t.destroying_edges(1).unwrap().is_empty());
    }

    #[test]
    fn single_vertex_is_source() {
        let t = Tournament::from_orientation(1, |_, _| true);
        assert!(t.is_source(0).unwrap());
        assert_eq!(t.strong_kings(), vec![0]);
    }

    #[test]
    fn incomplete_digraph_is_rejected() {
        let g = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(Tournament::try_from(g), Err(GraphError::MissingPair(0, 2)));
        assert_eq!(
            Tournament::try_from(Digraph::empty(0)).unwrap().max_out_degree_vertex(),
            Err(GraphError::Empty)
        );
    }

    #[test]
    fn flip_is_an_involution() {
        let t = random_tournament(9, 3).unwrap();
        let e = EdgePair::new(2, 7).unwrap();
        let f = t.flip_edge(e).unwrap();
        assert_ne!(f, t);
        assert_eq!(f.has_edge(2, 7).unwrap(), t.has_edge(7, 2).unwrap());
        assert_eq!(f.flip_edge(e).unwrap(), t);
        assert!(t.flip_edge(EdgePair::new(2, 9).unwrap()).is_err());
    }

    #[test]
    fn random_tournament_is_reproducible() {
        assert_eq!(random_tournament(8, 11).unwrap(), random_tournament(8, 11).unwrap());
        assert_ne!(random_tournament(8, 11).unwrap(), random_tournament(8, 12).unwrap());
        assert_eq!(random_tournament(0, 1), Err(GraphError::Empty));
    }
}
