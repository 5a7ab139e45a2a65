//! Hard input distributions, Monte-Carlo error estimation, the built-in
//! procedure registry and the batch lemma checker.

pub mod baselines;
mod distribution;
mod montecarlo;
pub mod verify;

use thiserror::Error;

use crate::graph::GraphError;
use crate::query::{QueryError, Task};

pub use baselines::{builtin_names, lookup, AnyProcedure, RegistryError};
pub use distribution::{
    mu_exist_king, mu_strong_king, Distribution, SupportLabel, SupportPoint, MIN_EXIST_KING_N,
};
pub use montecarlo::{exact_error, monte_carlo_error, splitmix64, trial_seed, ErrorEstimate};
pub use verify::{verify_lemmas, verify_lemmas_with, CheckResult, Fault, LemmaReport, VerifyOptions};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("procedure solves {} but the distribution is for {}", .procedure.name(), .distribution.name())]
    TaskMismatch { procedure: Task, distribution: Task },
    #[error("at least one trial is required")]
    NoTrials,
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Registry(#[from] RegistryError),
}
