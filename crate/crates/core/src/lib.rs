//! Kings, strong kings and balanced tournaments, with the machinery to audit
//! edge-query procedures for finding them.
//!
//! * [`graph`]: dense digraphs and tournaments with king, strong-king,
//!   dominating-pair and destroying-edge predicates.
//! * [`constructions`]: the tournaments `Δn` and `Un`, the kingless digraph `C`
//!   and their one-edge perturbations.
//! * [`query`]: procedures, oracles, budgets and leaf audits.
//! * [`harness`]: hard distributions, Monte-Carlo error estimates, built-in
//!   procedures and the lemma checker.
//! * [`graph_file`]: the plain-text edge-list format used by the CLI.

pub mod constructions;
pub mod graph;
pub mod graph_file;
pub mod harness;
pub mod query;

pub use constructions::OddN;
pub use graph::{Digraph, EdgePair, GraphError, Relabeling, Tournament};
