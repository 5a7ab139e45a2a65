//! Exact, exhaustive checks of the structural facts about `Δn`, `Un` and `C`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::constructions::{build_c, build_c_flip, build_delta, build_u, OddN, MIN_C_ORDER};
use crate::graph::{random_tournament, EdgePair, GraphError, Relabeling, Tournament};

pub const DELTA_BALANCED: &str = "delta-balanced";
pub const U_BALANCED: &str = "u-balanced";
pub const U_REGULAR: &str = "u-regular";
pub const DELTA_DOMINATING_PAIRS: &str = "delta-dominating-pairs";
pub const U_DELTA_DIFFERENCE: &str = "u-delta-difference";
pub const U_DESTROYING_EDGES: &str = "u-destroying-edges";
pub const U_ROTATION_AUTOMORPHISM: &str = "u-rotation-automorphism";
pub const U_DESTROYING_EQUIVARIANT: &str = "u-destroying-edges-equivariant";
pub const C_KINGLESS: &str = "c-kingless-perturbations-kinged";
pub const MAX_DEGREE_STRONG_KING: &str = "max-degree-strong-king";
pub const UNIQUE_KING_SOURCE: &str = "unique-king-iff-source";

/// Random tournaments per order added to the max-degree and unique-king checks.
const RANDOM_SAMPLES: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub n: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `key=value` lines, one check per line.
    pub fn to_key_value(&self) -> String {
        let mut out = format!("n_max={}\n", self.n_max);
        for c in &self.checks {
            out.push_str(&format!(
                "check={} n={} passed={}",
                c.check, c.n, c.passed
            ));
            if let Some(cx) = &c.counterexample {
                out.push_str(&format!(" counterexample={cx:?}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Deliberate corruption applied before checking, to prove failures surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Flip `pair` in `Δn` for the given `n`.
    FlipDeltaEdge { n: usize, pair: EdgePair },
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub fault: Option<Fault>,
}

pub fn verify_lemmas(n_max: OddN) -> Result<LemmaReport, GraphError> {
    verify_lemmas_with(n_max, &VerifyOptions::default())
}

pub fn verify_lemmas_with(n_max: OddN, opts: &VerifyOptions) -> Result<LemmaReport, GraphError> {
    if n_max.get() < MIN_C_ORDER {
        return Err(GraphError::TooSmall {
            n: n_max.get(),
            min: MIN_C_ORDER,
        });
    }
    let mut checks = Vec::new();
    for n in OddN::up_to(n_max.get()) {
        let mut delta = build_delta(n);
        if let Some(Fault::FlipDeltaEdge { n: target, pair }) = opts.fault {
            if target == n.get() {
                delta = delta.flip_edge(pair)?;
            }
        }
        let u = build_u(n);
        let mut push = |check, outcome: Result<(), String>| {
            checks.push(CheckResult {
                check,
                n: n.get(),
                passed: outcome.is_ok(),
                counterexample: outcome.err(),
            })
        };

        push(DELTA_BALANCED, balanced(&delta));
        push(U_BALANCED, balanced(&u));
        push(U_REGULAR, regular(&u));
        if n.get() >= MIN_C_ORDER {
            push(DELTA_DOMINATING_PAIRS, dominating_pairs_are_top(&delta));
        }
        push(U_DELTA_DIFFERENCE, delta_difference_one(&u));
        let destroying: Vec<Vec<EdgePair>> = (0..n.get())
            .map(|v| u.destroying_edges(v))
            .collect::<Result<_, _>>()?;
        push(U_DESTROYING_EDGES, destroying_sizes(n.get(), &destroying));
        push(U_ROTATION_AUTOMORPHISM, rotations(&u));
        push(U_DESTROYING_EQUIVARIANT, equivariant(n.get(), &destroying));
        if n.get() >= MIN_C_ORDER {
            push(C_KINGLESS, kingless_gadget(n)?);
        }

        let mut family = vec![delta.clone(), u.clone()];
        for e in EdgePair::all(n.get()) {
            family.push(u.flip_edge(e)?);
        }
        for s in 0..RANDOM_SAMPLES {
            family.push(random_tournament(n.get(), s)?);
            family.push(random_tournament(n.get() + 1, s)?);
        }
        push(MAX_DEGREE_STRONG_KING, first_err(&family, max_degree_strong_king));
        push(UNIQUE_KING_SOURCE, first_err(&family, unique_king_iff_source));
    }
    Ok(LemmaReport {
        n_max: n_max.get(),
        checks,
    })
}

fn first_err(
    family: &[Tournament],
    check: impl Fn(&Tournament) -> Result<(), String>,
) -> Result<(), String> {
    family.iter().try_for_each(check)
}

fn balanced(t: &Tournament) -> Result<(), String> {
    match (0..t.order()).find(|&v| !t.king(v)) {
        Some(v) => Err(format!("vertex {v} is not a king")),
        None => Ok(()),
    }
}

fn regular(t: &Tournament) -> Result<(), String> {
    let want = (t.order() - 1) / 2;
    match (0..t.order()).find(|&v| t.out_deg(v) != want) {
        Some(v) => Err(format!("vertex {v} has out-degree {}", t.out_deg(v))),
        None => Ok(()),
    }
}

fn dominating_pairs_are_top(delta: &Tournament) -> Result<(), String> {
    let n = delta.order();
    let found: BTreeSet<EdgePair> = delta.dominating_pairs().into_iter().collect();
    let expected: BTreeSet<EdgePair> = (0..n - 1)
        .map(|i| EdgePair::new(i, n - 1).expect("i < n - 1"))
        .collect();
    if let Some(extra) = found.difference(&expected).next() {
        return Err(format!("{extra} is dominating but avoids {}", n - 1));
    }
    if let Some(missing) = expected.difference(&found).next() {
        return Err(format!("{missing} is not dominating"));
    }
    Ok(())
}

fn delta_difference_one(u: &Tournament) -> Result<(), String> {
    for (j, i) in u.edges() {
        let forward = u.paths2(i, j) as i64;
        let back = u.paths2(j, i) as i64;
        if forward - back != 1 {
            return Err(format!(
                "edge {j}->{i}: delta({i},{j}) - delta({j},{i}) = {}",
                forward - back
            ));
        }
    }
    Ok(())
}

fn destroying_sizes(n: usize, destroying: &[Vec<EdgePair>]) -> Result<(), String> {
    let want = (n * n - 1) / 4;
    match destroying.iter().position(|d| d.len() != want) {
        Some(v) => Err(format!(
            "vertex {v} has {} destroying pairs, expected {want}",
            destroying[v].len()
        )),
        None => Ok(()),
    }
}

fn rotations(u: &Tournament) -> Result<(), String> {
    match (0..u.order() as i64).find(|&i| !u.rotation_is_automorphism(i)) {
        Some(i) => Err(format!("rotation by {i} is not an automorphism")),
        None => Ok(()),
    }
}

fn equivariant(n: usize, destroying: &[Vec<EdgePair>]) -> Result<(), String> {
    for i in 0..n {
        let r = Relabeling::rotation(n, i as i64);
        for v in 0..n {
            let mapped: BTreeSet<EdgePair> = destroying[v]
                .iter()
                .map(|e| EdgePair::new(r.apply(e.lo()), r.apply(e.hi())).expect("bijection"))
                .collect();
            let target: BTreeSet<EdgePair> = destroying[r.apply(v)].iter().copied().collect();
            if mapped != target {
                return Err(format!(
                    "rotation by {i} does not carry D({v}) onto D({})",
                    r.apply(v)
                ));
            }
        }
    }
    Ok(())
}

fn kingless_gadget(n: OddN) -> Result<Result<(), String>, GraphError> {
    let c = build_c(n)?;
    if let Some(k) = c.kings().first() {
        return Ok(Err(format!("C has king {k}")));
    }
    for i in 0..n.get() {
        for j in 0..n.get() - 1 {
            if !build_c_flip(n, i, j)?.king(i) {
                return Ok(Err(format!("{i} is not a king of C({i}, {j})")));
            }
        }
    }
    Ok(Ok(()))
}

fn max_degree_strong_king(t: &Tournament) -> Result<(), String> {
    let top = t.max_out_degree_vertex().map_err(|e| e.to_string())?;
    if !t.strong_king(top) {
        return Err(format!("max out-degree vertex {top} is not a strong king"));
    }
    if let Some(v) = t.strong_kings().into_iter().find(|&v| !t.king(v)) {
        return Err(format!("strong king {v} is not a king"));
    }
    Ok(())
}

fn unique_king_iff_source(t: &Tournament) -> Result<(), String> {
    let kings = t.kings();
    let source = (0..t.order()).find(|&v| t.out_deg(v) + 1 == t.order());
    match (kings.as_slice(), source) {
        ([k], Some(s)) if *k == s => Ok(()),
        ([k], _) => Err(format!("{k} is the only king but not a source")),
        (_, Some(s)) => Err(format!("source {s} coexists with kings {kings:?}")),
        (_, None) => Ok(()),
    }
}
