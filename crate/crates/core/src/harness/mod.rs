//! Randomized law checking. Every case draws from its own ChaCha8 stream
//! seeded by `(seed, law, case)`, so reports do not depend on scheduling.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub mod gen;
pub mod laws;
mod report;

pub use laws::{parseval_adjoint, Involution};
pub use report::{Counterexample, LawOutcome, LawReport};

use crate::scalar::RingId;
use gen::{Gen, Sample};
use laws::{Case, LawError, Outcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenConfig {
    pub ring: RingId,
    pub seed: u64,
    pub cases: usize,
    pub max_dim: usize,
    pub numerator_bound: u32,
    pub denominator_bound: u32,
    pub ratfun_degree_bound: usize,
}

impl GenConfig {
    pub fn new(ring: RingId, seed: u64, cases: usize) -> Self {
        GenConfig { ring, seed, cases, max_dim: 5, numerator_bound: 3, denominator_bound: 3, ratfun_degree_bound: 1 }
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }

    /// The rng for one case of one law.
    pub fn rng_for(&self, law: &str, case: usize) -> ChaCha8Rng {
        let mut h = splitmix(self.seed);
        for b in law.bytes() {
            h = splitmix(h ^ u64::from(b));
        }
        ChaCha8Rng::seed_from_u64(splitmix(h ^ case as u64))
    }
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn run_laws(cfg: &GenConfig) -> LawReport {
    run_laws_with(cfg, Involution::Weighted)
}

pub fn run_laws_with(cfg: &GenConfig, involution: Involution) -> LawReport {
    crate::dispatch_ring!(cfg.ring, D => run_typed::<D>(cfg, involution))
}

/// Names of the laws checked for `ring`, in report order.
pub fn law_names(ring: RingId) -> Vec<&'static str> {
    crate::dispatch_ring!(ring, D => laws::table::<D>().iter().map(|l| l.name).collect())
}

enum CaseResult {
    Held,
    Vacuous,
    Failed(String, serde_json::Value),
}

fn run_case<D: Sample>(cfg: &GenConfig, law: &laws::Law<D>, index: usize, involution: Involution) -> CaseResult {
    let gen = Gen::new(cfg.rng_for(law.name, index), cfg);
    let mut cx = Case::<D>::new(gen, involution);
    let outcome = catch_unwind(AssertUnwindSafe(|| (law.run)(&mut cx)));
    let message = match outcome {
        Ok(Ok(Outcome::Held)) => return CaseResult::Held,
        Ok(Ok(Outcome::Vacuous)) => return CaseResult::Vacuous,
        Ok(Err(LawError::Violated(msg))) => msg,
        Ok(Err(LawError::Engine(e))) => format!("engine error: {e}"),
        Err(payload) => {
            let text = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            format!("panic: {text}")
        }
    };
    CaseResult::Failed(message, cx.document().to_json_value())
}

fn run_typed<D: Sample>(cfg: &GenConfig, involution: Involution) -> LawReport {
    let start = Instant::now();
    let table = laws::table::<D>();
    let jobs: Vec<(usize, usize)> = (0..table.len()).flat_map(|l| (0..cfg.cases).map(move |c| (l, c))).collect();
    let results: Vec<CaseResult> = jobs.par_iter().map(|&(l, c)| run_case(cfg, &table[l], c, involution)).collect();

    let mut laws = Vec::with_capacity(table.len());
    for (l, law) in table.iter().enumerate() {
        let mut out = LawOutcome { name: law.name.to_string(), passed: 0, vacuous: 0, failed: 0, counterexample: None };
        for (c, r) in results[l * cfg.cases..(l + 1) * cfg.cases].iter().enumerate() {
            match r {
                CaseResult::Held => out.passed += 1,
                CaseResult::Vacuous => out.vacuous += 1,
                CaseResult::Failed(message, document) => {
                    out.failed += 1;
                    if out.counterexample.is_none() {
                        out.counterexample =
                            Some(Counterexample { case: c, message: message.clone(), document: document.clone() });
                    }
                }
            }
        }
        laws.push(out);
    }
    let total_failed = laws.iter().map(|l| l.failed).sum();
    LawReport {
        ring: cfg.ring,
        seed: cfg.seed,
        cases: cfg.cases,
        max_dim: cfg.max_dim,
        laws,
        total_failed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}
