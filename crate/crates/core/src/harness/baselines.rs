//! Built-in decision procedures used as audit subjects.
//!
//! | name                    | task        | behaviour                                                      |
//! |-------------------------|-------------|----------------------------------------------------------------|
//! | `full-scan`             | both        | queries every variable, then answers exactly                   |
//! | `full-scan-exist-king`  | exist-king  | alias of `full-scan`                                           |
//! | `full-scan-strong-king` | strong-king | alias of `full-scan`; outputs the max out-degree vertex        |
//! | `constant-true/false`   | exist-king  | no queries                                                     |
//! | `constant-vertex-<v>`   | strong-king | no queries, outputs `v`                                        |
//! | `random-probe-<k>`      | both        | queries `k` distinct seeded-random variables, then guesses     |
//!
//! `random-probe` guesses "king exists" iff at least half the probed ordered
//! pairs carried an edge; for strong kings it outputs the vertex with the most
//! observed wins, smallest id on ties.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Digraph, EdgePair};
use crate::query::{Procedure, Query, Step, Task, Transcript};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown {task} procedure '{name}'", task = .task.name())]
    Unknown { task: Task, name: String },
    #[error("vertex {vertex} out of range for {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
}

pub type ExistKingProcedure = Box<dyn Procedure<Output = bool>>;
pub type StrongKingProcedure = Box<dyn Procedure<Output = usize>>;

/// A registry procedure for either task.
pub enum AnyProcedure {
    ExistKing(ExistKingProcedure),
    StrongKing(StrongKingProcedure),
}

impl AnyProcedure {
    pub fn task(&self) -> Task {
        match self {
            AnyProcedure::ExistKing(_) => Task::ExistKing,
            AnyProcedure::StrongKing(_) => Task::StrongKing,
        }
    }
}

/// Looks up `name` for `task` on inputs with `order` vertices. `seed` only
/// affects `random-probe`.
pub fn lookup(task: Task, name: &str, order: usize, seed: u64) -> Result<AnyProcedure, RegistryError> {
    let unknown = || RegistryError::Unknown {
        task,
        name: name.to_string(),
    };
    let probe_count = name
        .strip_prefix("random-probe-")
        .map(|k| k.parse::<usize>().map_err(|_| unknown()))
        .transpose()?;
    match task {
        Task::ExistKing => {
            let p: ExistKingProcedure = match name {
                "full-scan" | "full-scan-exist-king" => Box::new(FullScanExistKing { order }),
                "constant-true" => Box::new(ConstantExistKing { order, answer: true }),
                "constant-false" => Box::new(ConstantExistKing { order, answer: false }),
                _ => match probe_count {
                    Some(k) => Box::new(RandomProbeExistKing::new(order, k, seed)),
                    None => return Err(unknown()),
                },
            };
            Ok(AnyProcedure::ExistKing(p))
        }
        Task::StrongKing => {
            let p: StrongKingProcedure = match name {
                "full-scan" | "full-scan-strong-king" => Box::new(FullScanStrongKing { order }),
                _ => {
                    if let Some(k) = probe_count {
                        Box::new(RandomProbeStrongKing::new(order, k, seed))
                    } else if let Some(v) = name.strip_prefix("constant-vertex-") {
                        let vertex = v.parse::<usize>().map_err(|_| unknown())?;
                        if vertex >= order {
                            return Err(RegistryError::VertexOutOfRange { vertex, order });
                        }
                        Box::new(ConstantVertex { order, vertex })
                    } else {
                        return Err(unknown());
                    }
                }
            };
            Ok(AnyProcedure::StrongKing(p))
        }
    }
}

/// Registry names exercised by the audit suites for a given budget.
pub fn builtin_names(task: Task, order: usize, budget: usize) -> Vec<String> {
    let mut names = vec!["full-scan".to_string()];
    match task {
        Task::ExistKing => {
            names.push("constant-true".into());
            names.push("constant-false".into());
        }
        Task::StrongKing => {
            names.push("constant-vertex-0".into());
            names.push(format!("constant-vertex-{}", order - 1));
        }
    }
    names.push(format!("random-probe-{}", budget / 2));
    names.push(format!("random-probe-{budget}"));
    names
}

pub struct FullScanExistKing {
    pub order: usize,
}

impl Procedure for FullScanExistKing {
    type Output = bool;

    fn order(&self) -> usize {
        self.order
    }

    fn next(&self, t: &Transcript) -> Step<bool> {
        let n = self.order;
        let k = t.len();
        if k < n * n {
            return Step::Query(Query::ordered(k / n, k % n));
        }
        let edges = t.entries().iter().filter_map(|&(q, present)| match q {
            Query::Ordered { source, target } if present => Some((source, target)),
            _ => None,
        });
        let g = Digraph::from_edges(n, edges).expect("oracle answers come from a simple digraph");
        Step::Answer(g.exists_king())
    }
}

pub struct FullScanStrongKing {
    pub order: usize,
}

impl Procedure for FullScanStrongKing {
    type Output = usize;

    fn order(&self) -> usize {
        self.order
    }

    fn next(&self, t: &Transcript) -> Step<usize> {
        let n = self.order;
        if let Some(e) = EdgePair::all(n).nth(t.len()) {
            return Step::Query(Query::Direction(e));
        }
        Step::Answer(most_wins(n, t))
    }
}

pub struct ConstantExistKing {
    pub order: usize,
    pub answer: bool,
}

impl Procedure for ConstantExistKing {
    type Output = bool;

    fn order(&self) -> usize {
        self.order
    }

    fn next(&self, _: &Transcript) -> Step<bool> {
        Step::Answer(self.answer)
    }
}

pub struct ConstantVertex {
    pub order: usize,
    pub vertex: usize,
}

impl Procedure for ConstantVertex {
    type Output = usize;

    fn order(&self) -> usize {
        self.order
    }

    fn next(&self, _: &Transcript) -> Step<usize> {
        Step::Answer(self.vertex)
    }
}

fn probe_indices(population: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    index::sample(&mut rng, population, k.min(population)).into_vec()
}

pub struct RandomProbeExistKing {
    order: usize,
    probes: Vec<Query>,
}

impl RandomProbeExistKing {
    pub fn new(order: usize, k: usize, seed: u64) -> Self {
        // Off-diagonal ordered pairs, indexed row by row with the diagonal skipped.
        let width = order.saturating_sub(1);
        let probes = probe_indices(order * width, k, seed)
            .into_iter()
            .map(|idx| {
                let source = idx / width;
                let col = idx % width;
                let target = if col >= source { col + 1 } else { col };
                Query::ordered(source, target)
            })
            .collect();
        RandomProbeExistKing { order, probes }
    }
}

impl Procedure for RandomProbeExistKing {
    type Output = bool;

    fn order(&self) -> usize {
        self.order
    }

    fn next(&self, t: &Transcript) -> Step<bool> {
        if let Some(q) = self.probes.get(t.len()) {
            return Step::Query(*q);
        }
        let present = t.entries().iter().filter(|(_, a)| *a).count();
        Step::Answer(2 * present >= t.len())
    }
}

pub struct RandomProbeStrongKing {
    order: usize,
    probes: Vec<EdgePair>,
}

impl RandomProbeStrongKing {
    pub fn new(order: usize, k: usize, seed: u64) -> Self {
        let pairs: Vec<EdgePair> = EdgePair::all(order).collect();
        let probes = probe_indices(pairs.len(), k, seed)
            .into_iter()
            .map(|i| pairs[i])
            .collect();
        RandomProbeStrongKing { order, probes }
    }
}

impl Procedure for RandomProbeStrongKing {
    type Output = usize;

    fn order(&self) -> usize {
        self.order
    }

    fn next(&self, t: &Transcript) -> Step<usize> {
        match self.probes.get(t.len()) {
            Some(e) => Step::Query(Query::Direction(*e)),
            None => Step::Answer(most_wins(self.order, t)),
        }
    }
}

/// Vertex with the most observed wins in the transcript; smallest id on ties.
fn most_wins(n: usize, t: &Transcript) -> usize {
    let mut wins = vec![0usize; n];
    for &(q, forward) in t.entries() {
        if let Query::Direction(e) = q {
            wins[if forward { e.lo() } else { e.hi() }] += 1;
        }
    }
    (0..n).rev().max_by_key(|&v| wins[v]).unwrap_or(0)
}
