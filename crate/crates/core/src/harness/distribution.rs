use num_rational::Ratio;
use rand::Rng;
use serde::Serialize;

use crate::constructions::{build_c, build_c_flip, build_u_flip, OddN, MIN_C_ORDER};
use crate::graph::{Digraph, EdgePair, GraphError};
use crate::query::Task;

/// Which member of a hard distribution's support a graph is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupportLabel {
    /// The kingless digraph `C`.
    Base,
    /// `C` plus the edge `i -> n + j`.
    CrossEdge { i: usize, j: usize },
    /// `Un` with one pair flipped.
    Flip(EdgePair),
}

#[derive(Debug, Clone)]
pub struct SupportPoint {
    pub label: SupportLabel,
    pub graph: Digraph,
    pub mass: Ratio<u64>,
}

/// A finitely supported distribution over graphs with exact masses.
///
/// The support is materialised up front; sampling returns an index into it.
#[derive(Debug, Clone)]
pub struct Distribution {
    task: Task,
    n: OddN,
    support: Vec<SupportPoint>,
}

impl Distribution {
    pub fn task(&self) -> Task {
        self.task
    }

    /// The construction parameter (`2n` is the input order for existence).
    pub fn parameter(&self) -> OddN {
        self.n
    }

    /// Number of vertices of every graph in the support.
    pub fn graph_order(&self) -> usize {
        match self.task {
            Task::ExistKing => 2 * self.n.get(),
            Task::StrongKing => self.n.get(),
        }
    }

    pub fn support(&self) -> &[SupportPoint] {
        &self.support
    }

    pub fn total_mass(&self) -> Ratio<u64> {
        self.support
            .iter()
            .fold(Ratio::from_integer(0), |acc, p| acc + p.mass)
    }

    /// Draws one support index using the distribution's sampling procedure.
    pub fn sample_index<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        match self.task {
            // Coin flip between C and a uniform perturbation; the support lists
            // C first, then the perturbations.
            Task::ExistKing => {
                if rng.random::<bool>() {
                    0
                } else {
                    1 + rng.random_range(0..self.support.len() - 1)
                }
            }
            Task::StrongKing => rng.random_range(0..self.support.len()),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> &SupportPoint {
        &self.support[self.sample_index(rng)]
    }
}

/// `C` with mass 1/2 and each `C(i, j)` with mass `1 / (2n(n - 1))`.
pub fn mu_exist_king(n: OddN) -> Result<Distribution, GraphError> {
    let base = build_c(n)?;
    let order = n.get();
    let each = Ratio::new(1, 2 * (order * (order - 1)) as u64);
    let mut support = vec![SupportPoint {
        label: SupportLabel::Base,
        graph: base,
        mass: Ratio::new(1, 2),
    }];
    for i in 0..order {
        for j in 0..order - 1 {
            support.push(SupportPoint {
                label: SupportLabel::CrossEdge { i, j },
                graph: build_c_flip(n, i, j)?,
                mass: each,
            });
        }
    }
    Ok(Distribution {
        task: Task::ExistKing,
        n,
        support,
    })
}

/// Uniform over the `n(n - 1)/2` single-pair flips of `Un`.
pub fn mu_strong_king(n: OddN) -> Result<Distribution, GraphError> {
    if n.get() < 3 {
        return Err(GraphError::TooSmall { n: n.get(), min: 3 });
    }
    let flips: Vec<EdgePair> = EdgePair::all(n.get()).collect();
    let each = Ratio::new(1, flips.len() as u64);
    let support = flips
        .into_iter()
        .map(|e| {
            Ok(SupportPoint {
                label: SupportLabel::Flip(e),
                graph: build_u_flip(n, e)?.into(),
                mass: each,
            })
        })
        .collect::<Result<_, GraphError>>()?;
    Ok(Distribution {
        task: Task::StrongKing,
        n,
        support,
    })
}

/// Smallest parameter accepted by [`mu_exist_king`].
pub const MIN_EXIST_KING_N: usize = MIN_C_ORDER;
