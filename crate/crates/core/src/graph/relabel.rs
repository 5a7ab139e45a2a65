use super::{GraphError, Result};

/// A permutation of `[0, n)` used to rename vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    map: Vec<usize>,
}

impl Relabeling {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &t in &map {
            if t >= n || seen[t] {
                return Err(GraphError::NotAPermutation(n));
            }
            seen[t] = true;
        }
        Ok(Relabeling { map })
    }

    pub fn identity(n: usize) -> Self {
        Relabeling {
            map: (0..n).collect(),
        }
    }

    /// The cyclic shift `v -> (v + i) mod n`. `i` may be any integer.
    pub fn rotation(n: usize, i: i64) -> Self {
        if n == 0 {
            return Relabeling { map: Vec::new() };
        }
        let shift = i.rem_euclid(n as i64) as usize;
        Relabeling {
            map: (0..n).map(|v| (v + shift) % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Image of `v`. Panics if `v` is out of range.
    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (v, &t) in self.map.iter().enumerate() {
            inv[t] = v;
        }
        Relabeling { map: inv }
    }
}
