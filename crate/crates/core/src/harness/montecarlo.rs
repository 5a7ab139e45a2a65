use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Distribution, HarnessError};
use crate::query::{run_procedure, Outcome, Procedure, QueryError, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorEstimate {
    pub estimate: f64,
    pub errors: u64,
    pub trials: u64,
    pub standard_error: f64,
    pub seed: u64,
}

impl ErrorEstimate {
    fn new(errors: u64, trials: u64, seed: u64) -> Self {
        let p = errors as f64 / trials as f64;
        ErrorEstimate {
            estimate: p,
            errors,
            trials,
            standard_error: (p * (1.0 - p) / trials as f64).sqrt(),
            seed,
        }
    }
}

/// SplitMix64 finaliser.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for trial `t` of a run seeded with `seed`: `splitmix64(seed ^ splitmix64(t))`.
pub fn trial_seed(seed: u64, t: u64) -> u64 {
    splitmix64(seed ^ splitmix64(t))
}

fn check_compatible<P: Procedure + ?Sized>(p: &P, d: &Distribution) -> Result<(), HarnessError> {
    let task = <P::Output as Verdict>::TASK;
    if task != d.task() {
        return Err(HarnessError::TaskMismatch {
            procedure: task,
            distribution: d.task(),
        });
    }
    if p.order() != d.graph_order() {
        return Err(QueryError::OrderMismatch {
            expected: p.order(),
            actual: d.graph_order(),
        }
        .into());
    }
    Ok(())
}

/// Estimates the error of `p` on inputs drawn from `d`.
///
/// Each trial draws its input from a ChaCha8 stream seeded with
/// [`trial_seed`], so the result does not depend on how trials are scheduled
/// across threads. Running out of budget counts as an error.
pub fn monte_carlo_error<P>(
    p: &P,
    d: &Distribution,
    trials: u64,
    budget: Option<usize>,
    seed: u64,
) -> Result<ErrorEstimate, HarnessError>
where
    P: Procedure + ?Sized,
{
    check_compatible(p, d)?;
    if trials == 0 {
        return Err(HarnessError::NoTrials);
    }
    let errors = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, t));
            let input = &d.sample(&mut rng).graph;
            let run = run_procedure(p, input, budget)?;
            Ok(match run.outcome {
                Outcome::Answered(a) => u64::from(!a.is_correct(input)),
                Outcome::BudgetExceeded => 1,
            })
        })
        .sum::<Result<u64, HarnessError>>()?;
    Ok(ErrorEstimate::new(errors, trials, seed))
}

/// Exact error mass of `p` under `d`, by running it on every support element.
pub fn exact_error<P>(p: &P, d: &Distribution, budget: Option<usize>) -> Result<Ratio<u64>, HarnessError>
where
    P: Procedure + ?Sized,
{
    check_compatible(p, d)?;
    let mut total = Ratio::from_integer(0);
    for point in d.support() {
        let run = run_procedure(p, &point.graph, budget)?;
        let wrong = match run.outcome {
            Outcome::Answered(a) => !a.is_correct(&point.graph),
            Outcome::BudgetExceeded => true,
        };
        if wrong {
            total += point.mass;
        }
    }
    Ok(total)
}
