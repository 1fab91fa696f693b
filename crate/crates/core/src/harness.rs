//! Cross-validation of a list of candidate max-AI functions against the
//! brute-force oracle.
//!
//! Oracle calls are independent and run on the rayon pool; results are
//! collected in input order so reports do not depend on scheduling.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::ai::ai_value;
use crate::error::{domain, require_even, Error, Result};
use crate::symfun::{SymFn, ORACLE_LIMIT};

/// Largest `n` for the exhaustive sweep over all `2^{n+1}` value vectors.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// A function together with the immunity the oracle found for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub svv: String,
    pub ai: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExhaustiveReport {
    pub n: usize,
    /// Number of symmetric functions examined, `2^{n+1}`.
    pub total: usize,
    /// How many of them reach immunity `n/2`.
    pub oracle_max: usize,
    pub candidates: usize,
    /// Candidates the oracle rejects.
    pub missing: Vec<Mismatch>,
    /// Max-AI functions absent from the candidates.
    pub extra: Vec<Mismatch>,
}

impl ExhaustiveReport {
    pub fn sets_equal(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.oracle_max == self.candidates
    }

    pub fn first_counterexample(&self) -> Option<&Mismatch> {
        self.missing.first().or(self.extra.first())
    }
}

fn symmetric_fn(n: usize, code: u64) -> SymFn {
    SymFn::from_fn(n, |i| (code >> i) & 1 == 1).expect("n ≥ 1")
}

fn oracle_ai(f: &SymFn) -> usize {
    ai_value(&f.to_truth_table().expect("n within oracle limit"))
}

fn check_n(n: usize, limit: usize) -> Result<usize> {
    let k = require_even(n)?;
    if n > limit {
        return Err(Error::Capacity { n, limit });
    }
    Ok(k)
}

/// Runs the oracle on every symmetric function of `n` variables and compares
/// the max-AI set with `candidates`.
pub fn verify_exhaustive(n: usize, candidates: &[SymFn]) -> Result<ExhaustiveReport> {
    let k = check_n(n, EXHAUSTIVE_LIMIT)?;
    let total = 1usize << (n + 1);
    let ais: Vec<usize> = (0..total as u64)
        .into_par_iter()
        .map(|code| oracle_ai(&symmetric_fn(n, code)))
        .collect();

    let wanted: BTreeSet<&SymFn> = candidates.iter().collect();
    let mut extra = Vec::new();
    let mut oracle_set = BTreeSet::new();
    for (code, &ai) in ais.iter().enumerate() {
        let f = symmetric_fn(n, code as u64);
        if ai == k {
            if !wanted.contains(&f) {
                extra.push((f.clone(), ai));
            }
            oracle_set.insert(f);
        }
    }
    let mut missing: Vec<(SymFn, usize)> = candidates
        .iter()
        .filter(|f| f.n() != n || !oracle_set.contains(*f))
        .map(|f| {
            let ai = if f.n() == n { oracle_ai(f) } else { usize::MAX };
            (f.clone(), ai)
        })
        .collect();
    missing.sort();
    extra.sort();

    let to_mismatch = |v: Vec<(SymFn, usize)>| {
        v.into_iter()
            .map(|(f, ai)| Mismatch {
                svv: f.to_string(),
                ai,
            })
            .collect()
    };
    Ok(ExhaustiveReport {
        n,
        total,
        oracle_max: oracle_set.len(),
        candidates: wanted.len(),
        missing: to_mismatch(missing),
        extra: to_mismatch(extra),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub n: usize,
    pub seed: u64,
    pub candidates: usize,
    /// Candidates whose immunity is not `n/2`.
    pub candidate_failures: Vec<Mismatch>,
    /// The sampled non-candidate value vectors, in draw order.
    pub sampled: Vec<String>,
    /// Sampled functions that nevertheless reach immunity `n/2`.
    pub sample_failures: Vec<Mismatch>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.candidate_failures.is_empty() && self.sample_failures.is_empty()
    }

    pub fn first_counterexample(&self) -> Option<&Mismatch> {
        self.candidate_failures
            .first()
            .or(self.sample_failures.first())
    }
}

/// Draws `count` distinct value vectors outside `exclude`, deterministically
/// from `seed`.
pub fn sample_svvs(n: usize, exclude: &[SymFn], count: usize, seed: u64) -> Result<Vec<SymFn>> {
    if n == 0 || n >= 63 {
        return Err(domain(format!("cannot sample value vectors for n = {n}")));
    }
    let excluded: BTreeSet<&SymFn> = exclude.iter().filter(|f| f.n() == n).collect();
    let available = (1u64 << (n + 1)) - excluded.len() as u64;
    if count as u64 > available {
        return Err(domain(format!(
            "only {available} value vectors are available for sampling"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let code = rng.gen_range(0..1u64 << (n + 1));
        let f = symmetric_fn(n, code);
        if !excluded.contains(&f) && drawn.insert(code) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Checks that every candidate has immunity `n/2` and that `sample` random
/// non-candidates all fall short of it.
pub fn verify_sample(
    n: usize,
    candidates: &[SymFn],
    sample: usize,
    seed: u64,
) -> Result<SampleReport> {
    let k = check_n(n, ORACLE_LIMIT)?;
    let sampled = sample_svvs(n, candidates, sample, seed)?;

    let candidate_ais: Vec<usize> = candidates.par_iter().map(oracle_ai).collect();
    let sample_ais: Vec<usize> = sampled.par_iter().map(oracle_ai).collect();

    let candidate_failures = candidates
        .iter()
        .zip(&candidate_ais)
        .filter(|&(_, &ai)| ai != k)
        .map(|(f, &ai)| Mismatch {
            svv: f.to_string(),
            ai,
        })
        .collect();
    let sample_failures = sampled
        .iter()
        .zip(&sample_ais)
        .filter(|&(_, &ai)| ai >= k)
        .map(|(f, &ai)| Mismatch {
            svv: f.to_string(),
            ai,
        })
        .collect();

    Ok(SampleReport {
        n,
        seed,
        candidates: candidates.len(),
        candidate_failures,
        sampled: sampled.iter().map(SymFn::to_string).collect(),
        sample_failures,
    })
}
