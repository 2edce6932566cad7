//! Runs checks over corpus pairs, optionally in parallel.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{registry, Check, Verdict};
use crate::context::PairContext;

/// One (pair, check) result as it appears in reports.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub pair_label: String,
    pub verdict: String,
    pub witness: Vec<String>,
    pub micros: u64,
    pub detail: String,
    /// Witness as element indices of `T`.
    #[serde(skip)]
    pub witness_indices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Worker threads; `0` lets the pool decide.
    pub workers: usize,
    pub checks: Vec<&'static Check>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            workers: 0,
            checks: registry().iter().collect(),
        }
    }
}

fn run_one(check: &Check, ctx: &PairContext) -> CheckRecord {
    let start = Instant::now();
    let outcome = check.evaluate(ctx);
    let micros = start.elapsed().as_micros() as u64;
    let verdict = outcome.verdict.name().to_string();
    let (witness_indices, detail) = match outcome.verdict {
        Verdict::Fail { witness } => (witness, outcome.detail),
        Verdict::Error { message } => (Vec::new(), message),
        _ => (Vec::new(), outcome.detail),
    };
    CheckRecord {
        check_id: check.id.to_string(),
        pair_label: ctx.label.clone(),
        verdict,
        witness: witness_indices.iter().map(|&x| ctx.t().name(x).to_string()).collect(),
        micros,
        detail,
        witness_indices,
    }
}

/// Every (pair, check) combination, ordered by pair then check.
pub fn run(pairs: &[PairContext], opts: &RunOptions) -> Vec<CheckRecord> {
    let tasks: Vec<(&PairContext, &Check)> = pairs
        .iter()
        .flat_map(|p| opts.checks.iter().map(move |&c| (p, c)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .expect("thread pool");
    pool.install(|| tasks.par_iter().map(|&(p, c)| run_one(c, p)).collect())
}
