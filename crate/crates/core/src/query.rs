//! Decision-procedure execution against edge-query oracles.
//!
//! A [`Procedure`] sees only the [`Transcript`] of its own queries and answers.
//! [`run_procedure`] drives it against a truthful oracle, deduplicating repeated
//! queries and enforcing a budget on informative queries. The leaf audits replay
//! the consistent-answer path used in the adversary arguments and turn the leaf
//! reached into an exact lower bound on the procedure's error under the matching
//! hard distribution.

use std::collections::HashMap;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{build_c, build_u, OddN};
use crate::graph::{Digraph, EdgePair, GraphError};

/// How a graph is exposed as query variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueryKind {
    /// One variable per ordered pair `(u, v)`: is there an edge `u -> v`?
    DigraphOrdered,
    /// One variable per unordered pair `{u, v}`: which way does the edge point?
    TournamentDirection,
}

impl QueryKind {
    /// Number of input variables for an `n`-vertex graph.
    pub fn variable_count(self, n: usize) -> usize {
        match self {
            QueryKind::DigraphOrdered => n * n,
            QueryKind::TournamentDirection => n * n.saturating_sub(1) / 2,
        }
    }
}

/// The two search problems whose query complexity is studied here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    /// Decide whether an arbitrary digraph has a king.
    ExistKing,
    /// Output a strong king of a tournament.
    StrongKing,
}

impl Task {
    pub fn query_kind(self) -> QueryKind {
        match self {
            Task::ExistKing => QueryKind::DigraphOrdered,
            Task::StrongKing => QueryKind::TournamentDirection,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Task::ExistKing => "exist-king",
            Task::StrongKing => "strong-king",
        }
    }
}

/// Answer types a procedure can emit, and how they are judged against an input.
pub trait Verdict: Copy + Send + Sync + 'static {
    const TASK: Task;

    fn is_correct(&self, g: &Digraph) -> bool;
}

impl Verdict for bool {
    const TASK: Task = Task::ExistKing;

    fn is_correct(&self, g: &Digraph) -> bool {
        g.exists_king() == *self
    }
}

impl Verdict for usize {
    const TASK: Task = Task::StrongKing;

    fn is_correct(&self, g: &Digraph) -> bool {
        *self < g.order() && g.strong_king(*self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Query {
    /// Is `source -> target` an edge? Diagonal queries are legal and answer `false`.
    Ordered { source: usize, target: usize },
    /// Is the pair oriented `lo -> hi`?
    Direction(EdgePair),
}

impl Query {
    pub fn ordered(source: usize, target: usize) -> Self {
        Query::Ordered { source, target }
    }

    pub fn is_diagonal(self) -> bool {
        matches!(self, Query::Ordered { source, target } if source == target)
    }

    fn max_vertex(self) -> usize {
        match self {
            Query::Ordered { source, target } => source.max(target),
            Query::Direction(e) => e.hi(),
        }
    }

    fn kind(self) -> QueryKind {
        match self {
            Query::Ordered { .. } => QueryKind::DigraphOrdered,
            Query::Direction(_) => QueryKind::TournamentDirection,
        }
    }
}

/// Root-to-leaf record of distinct queries and their answers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transcript {
    entries: Vec<(Query, bool)>,
    index: HashMap<Query, bool>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Query, bool)] {
        &self.entries
    }

    pub fn answer(&self, q: &Query) -> Option<bool> {
        self.index.get(q).copied()
    }

    fn record(&mut self, q: Query, answer: bool) {
        self.entries.push((q, answer));
        self.index.insert(q, answer);
    }
}

pub enum Step<A> {
    Query(Query),
    Answer(A),
}

/// A deterministic decision procedure for inputs of a fixed order.
///
/// `next` must be a pure function of the transcript; randomised procedures carry
/// their seed as part of their state.
pub trait Procedure: Send + Sync {
    type Output: Verdict;

    fn order(&self) -> usize;

    fn next(&self, transcript: &Transcript) -> Step<Self::Output>;

    fn kind(&self) -> QueryKind {
        <Self::Output as Verdict>::TASK.query_kind()
    }
}

impl<P: Procedure + ?Sized> Procedure for Box<P> {
    type Output = P::Output;

    fn order(&self) -> usize {
        (**self).order()
    }

    fn next(&self, transcript: &Transcript) -> Step<Self::Output> {
        (**self).next(transcript)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("procedure expects {expected} vertices but the input has {actual}")]
    OrderMismatch { expected: usize, actual: usize },
    #[error("{kind:?} queries need a tournament input: {source}")]
    KindMismatch {
        kind: QueryKind,
        #[source]
        source: GraphError,
    },
    #[error("procedure fault: malformed query {query:?} on {n} vertices")]
    MalformedQuery { query: Query, n: usize },
    #[error("procedure fault: no progress after {steps} steps")]
    Stalled { steps: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Answers every query truthfully from a fixed graph.
pub struct GraphOracle<'a> {
    graph: &'a Digraph,
    kind: QueryKind,
}

impl<'a> GraphOracle<'a> {
    pub fn new(graph: &'a Digraph, kind: QueryKind) -> Result<Self, QueryError> {
        if kind == QueryKind::TournamentDirection {
            if let Some((u, v)) = graph.missing_pair() {
                return Err(QueryError::KindMismatch {
                    kind,
                    source: GraphError::MissingPair(u, v),
                });
            }
        }
        Ok(GraphOracle { graph, kind })
    }

    pub fn kind(&self) -> QueryKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Answer for a validated query.
    pub fn answer(&self, q: Query) -> bool {
        match q {
            Query::Ordered { source, target } => self.graph.edge(source, target),
            Query::Direction(e) => self.graph.edge(e.lo(), e.hi()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome<A> {
    Answered(A),
    BudgetExceeded,
}

impl<A: Copy> Outcome<A> {
    pub fn answer(&self) -> Option<A> {
        match self {
            Outcome::Answered(a) => Some(*a),
            Outcome::BudgetExceeded => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome<A> {
    pub outcome: Outcome<A>,
    pub transcript: Transcript,
    informative: usize,
}

impl<A> RunOutcome<A> {
    /// Distinct variables queried, diagonal ones included.
    pub fn query_count(&self) -> usize {
        self.transcript.len()
    }

    /// Distinct off-diagonal variables queried; this is what the budget limits.
    pub fn informative_queries(&self) -> usize {
        self.informative
    }
}

/// Runs `p` on `g` with a truthful oracle. `budget = None` means unbounded.
pub fn run_procedure<P>(
    p: &P,
    g: &Digraph,
    budget: Option<usize>,
) -> Result<RunOutcome<P::Output>, QueryError>
where
    P: Procedure + ?Sized,
{
    if p.order() != g.order() {
        return Err(QueryError::OrderMismatch {
            expected: p.order(),
            actual: g.order(),
        });
    }
    let oracle = GraphOracle::new(g, p.kind())?;
    run_with_oracle(p, &oracle, budget)
}

pub fn run_with_oracle<P>(
    p: &P,
    oracle: &GraphOracle<'_>,
    budget: Option<usize>,
) -> Result<RunOutcome<P::Output>, QueryError>
where
    P: Procedure + ?Sized,
{
    let n = oracle.order();
    // Re-asking cached variables is free, but a procedure that only ever does
    // that would spin forever.
    let step_limit = 4 * oracle.kind().variable_count(n) + 16;
    let mut transcript = Transcript::new();
    let mut informative = 0;
    for _ in 0..step_limit {
        let q = match p.next(&transcript) {
            Step::Answer(a) => {
                return Ok(RunOutcome {
                    outcome: Outcome::Answered(a),
                    transcript,
                    informative,
                })
            }
            Step::Query(q) => q,
        };
        if q.kind() != oracle.kind() || q.max_vertex() >= n {
            return Err(QueryError::MalformedQuery { query: q, n });
        }
        if transcript.answer(&q).is_some() {
            continue;
        }
        if !q.is_diagonal() {
            if budget.is_some_and(|b| informative >= b) {
                return Ok(RunOutcome {
                    outcome: Outcome::BudgetExceeded,
                    transcript,
                    informative,
                });
            }
            informative += 1;
        }
        transcript.record(q, oracle.answer(q));
    }
    Err(QueryError::Stalled { steps: step_limit })
}

/// Error lower bound certified by one consistent-answer leaf.
#[derive(Debug, Clone, Serialize)]
pub struct LeafAudit<A> {
    /// Answer at the leaf, `None` if the budget ran out first.
    pub answer: Option<A>,
    pub query_count: usize,
    /// Queried variables that could separate the base input from a perturbation.
    pub relevant_queried: usize,
    #[serde(serialize_with = "serialize_ratio")]
    pub bound: Ratio<u64>,
}

impl<A> LeafAudit<A> {
    pub fn bound_f64(&self) -> f64 {
        ratio_to_f64(self.bound)
    }

    pub fn exceeds_one_third(&self) -> bool {
        self.bound > Ratio::new(1, 3)
    }
}

pub(crate) fn ratio_to_f64(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn serialize_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Audits an existence procedure on `2n`-vertex digraphs along the path where
/// every query is answered as in `C`.
///
/// Answering "king" errs on `C` (mass 1/2). Answering "no king" errs on every
/// `C(i, j)` whose cross variable `(i, n + j)` was never queried, each of mass
/// `1 / (2n(n - 1))`. Running out of budget is scored as the larger of the two.
pub fn leaf_audit_exist_king<P>(
    p: &P,
    n: OddN,
    budget: usize,
) -> Result<LeafAudit<bool>, QueryError>
where
    P: Procedure<Output = bool> + ?Sized,
{
    let c = build_c(n)?;
    let run = run_procedure(p, &c, Some(budget))?;
    let half = n.get();
    let perturbations = (half * (half - 1)) as u64;
    let queried = run
        .transcript
        .entries()
        .iter()
        .filter(|(q, _)| match *q {
            Query::Ordered { source, target } => {
                source < half && target >= half && target < 2 * half - 1
            }
            Query::Direction(_) => false,
        })
        .count() as u64;
    let c_mass = Ratio::new(1, 2);
    let unqueried_mass = Ratio::new(perturbations - queried, 2 * perturbations);
    let bound = match run.outcome {
        Outcome::Answered(true) => c_mass,
        Outcome::Answered(false) => unqueried_mass,
        Outcome::BudgetExceeded => c_mass.max(unqueried_mass),
    };
    Ok(LeafAudit {
        answer: run.outcome.answer(),
        query_count: run.query_count(),
        relevant_queried: queried as usize,
        bound,
    })
}

/// Audits a strong-king procedure along the path answered as in `Un`.
///
/// Every flip `Un^e` with `e` unqueried reaches the same leaf; the output `v` is
/// wrong on those with `e` in the destroying set of `v`. Mass is uniform over the
/// `n(n-1)/2` flips. Running out of budget is scored as the best vertex.
pub fn leaf_audit_strong_king<P>(
    p: &P,
    n: OddN,
    budget: usize,
) -> Result<LeafAudit<usize>, QueryError>
where
    P: Procedure<Output = usize> + ?Sized,
{
    let u = build_u(n);
    let run = run_procedure(p, &u, Some(budget))?;
    let queried: Vec<EdgePair> = run
        .transcript
        .entries()
        .iter()
        .filter_map(|(q, _)| match q {
            Query::Direction(e) => Some(*e),
            Query::Ordered { .. } => None,
        })
        .collect();
    let wrong_unqueried = |v: usize| -> Result<u64, GraphError> {
        Ok(u.destroying_edges(v)?
            .into_iter()
            .filter(|e| !queried.contains(e))
            .count() as u64)
    };
    let count = match run.outcome {
        Outcome::Answered(v) if v < n.get() => wrong_unqueried(v)?,
        // An out-of-range vertex is wrong on every input reaching the leaf.
        Outcome::Answered(_) => (EdgePair::all(n.get()).count() - queried.len()) as u64,
        Outcome::BudgetExceeded => {
            let mut best = 0;
            for v in 0..n.get() {
                best = best.max(wrong_unqueried(v)?);
            }
            best
        }
    };
    let flips = QueryKind::TournamentDirection.variable_count(n.get()) as u64;
    Ok(LeafAudit {
        answer: run.outcome.answer(),
        query_count: run.query_count(),
        relevant_queried: queried.len(),
        bound: Ratio::new(count, flips.max(1)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_u;

    /// Asks a fixed list of queries, then answers.
    struct Script<A> {
        n: usize,
        queries: Vec<Query>,
        answer: A,
    }

    impl<A: Verdict> Procedure for Script<A> {
        type Output = A;

        fn order(&self) -> usize {
            self.n
        }

        fn next(&self, t: &Transcript) -> Step<A> {
            // Position is tracked through the transcript, so repeats are skipped
            // by looking for the first unanswered query.
            match self.queries.iter().find(|q| t.answer(q).is_none()) {
                Some(q) => Step::Query(*q),
                None => Step::Answer(self.answer),
            }
        }
    }

    struct Spinner;

    impl Procedure for Spinner {
        type Output = bool;

        fn order(&self) -> usize {
            3
        }

        fn next(&self, _: &Transcript) -> Step<bool> {
            Step::Query(Query::ordered(0, 1))
        }
    }

    fn odd(n: usize) -> OddN {
        OddN::new(n).unwrap()
    }

    fn pair(a: usize, b: usize) -> EdgePair {
        EdgePair::new(a, b).unwrap()
    }

    #[test]
    fn variable_counts() {
        assert_eq!(QueryKind::DigraphOrdered.variable_count(10), 100);
        assert_eq!(QueryKind::TournamentDirection.variable_count(5), 10);
        assert_eq!(QueryKind::TournamentDirection.variable_count(0), 0);
    }

    #[test]
    fn zero_query_procedure() {
        let p = Script {
            n: 5,
            queries: vec![],
            answer: 3usize,
        };
        let run = run_procedure(&p, &build_u(odd(5)), Some(0)).unwrap();
        assert_eq!(run.query_count(), 0);
        assert_eq!(run.outcome, Outcome::Answered(3));
    }

    #[test]
    fn diagonal_queries_are_free_and_false() {
        let g = Digraph::from_edges(3, [(0, 1)]).unwrap();
        let p = Script {
            n: 3,
            queries: vec![Query::ordered(1, 1), Query::ordered(0, 1)],
            answer: false,
        };
        let run = run_procedure(&p, &g, Some(1)).unwrap();
        assert_eq!(run.outcome, Outcome::Answered(false));
        assert_eq!(run.query_count(), 2);
        assert_eq!(run.informative_queries(), 1);
        assert_eq!(run.transcript.entries()[0], (Query::ordered(1, 1), false));
        assert_eq!(run.transcript.entries()[1], (Query::ordered(0, 1), true));
    }

    #[test]
    fn budget_stops_at_the_extra_query() {
        let p = Script {
            n: 5,
            queries: vec![
                Query::Direction(pair(0, 1)),
                Query::Direction(pair(0, 2)),
                Query::Direction(pair(0, 3)),
            ],
            answer: 0usize,
        };
        let u = build_u(odd(5));
        let run = run_procedure(&p, &u, Some(2)).unwrap();
        assert_eq!(run.outcome, Outcome::BudgetExceeded);
        assert_eq!(run.query_count(), 2);
        let run = run_procedure(&p, &u, Some(3)).unwrap();
        assert_eq!(run.outcome, Outcome::Answered(0));
        // Direction {0,2} is oriented 2 -> 0 in U5.
        assert_eq!(run.transcript.answer(&Query::Direction(pair(0, 2))), Some(false));
    }

    #[test]
    fn faults_are_distinct_from_budget() {
        let bad = Script {
            n: 5,
            queries: vec![Query::ordered(0, 1)],
            answer: 0usize,
        };
        assert!(matches!(
            run_procedure(&bad, &build_u(odd(5)), None),
            Err(QueryError::MalformedQuery { .. })
        ));
        let out_of_range = Script {
            n: 5,
            queries: vec![Query::Direction(pair(0, 7))],
            answer: 0usize,
        };
        assert!(matches!(
            run_procedure(&out_of_range, &build_u(odd(5)), None),
            Err(QueryError::MalformedQuery { .. })
        ));
        let g = Digraph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            run_procedure(&Spinner, &g, None),
            Err(QueryError::Stalled { .. })
        ));
    }

    #[test]
    fn tournament_queries_need_a_tournament() {
        let p = Script {
            n: 3,
            queries: vec![],
            answer: 0usize,
        };
        let g = Digraph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            run_procedure(&p, &g, None),
            Err(QueryError::KindMismatch { .. })
        ));
        assert!(matches!(
            run_procedure(&p, &build_u(odd(5)), None),
            Err(QueryError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn exist_king_audit_zero_query_answers() {
        for answer in [false, true] {
            let p = Script {
                n: 10,
                queries: vec![],
                answer,
            };
            let audit = leaf_audit_exist_king(&p, odd(5), 0).unwrap();
            assert_eq!(audit.bound, Ratio::new(1, 2));
            assert_eq!(audit.relevant_queried, 0);
        }
    }

    #[test]
    fn exist_king_audit_counts_only_cross_variables() {
        // (0,5) is a cross variable; (0,9) targets 2n-1; (5,0) points the wrong way.
        let p = Script {
            n: 10,
            queries: vec![Query::ordered(0, 5), Query::ordered(0, 9), Query::ordered(5, 0)],
            answer: false,
        };
        let audit = leaf_audit_exist_king(&p, odd(5), 10).unwrap();
        assert_eq!(audit.relevant_queried, 1);
        assert_eq!(audit.bound, Ratio::new(19, 40));
        // Out of budget after one query: max(1/2, 19/40).
        let audit = leaf_audit_exist_king(&p, odd(5), 1).unwrap();
        assert_eq!(audit.answer, None);
        assert_eq!(audit.bound, Ratio::new(1, 2));
    }

    #[test]
    fn strong_king_audit_subtracts_queried_destroying_pairs() {
        let zero = Script {
            n: 5,
            queries: vec![],
            answer: 0usize,
        };
        assert_eq!(leaf_audit_strong_king(&zero, odd(5), 0).unwrap().bound, Ratio::new(3, 5));
        // {0,1} and {2,4} destroy vertex 0, {0,2} does not.
        let some = Script {
            n: 5,
            queries: vec![
                Query::Direction(pair(0, 1)),
                Query::Direction(pair(2, 4)),
                Query::Direction(pair(0, 2)),
            ],
            answer: 0usize,
        };
        let audit = leaf_audit_strong_king(&some, odd(5), 3).unwrap();
        assert_eq!(audit.bound, Ratio::new(4, 10));
        assert!(audit.bound >= Ratio::new(6 - 3, 10));
    }
}
