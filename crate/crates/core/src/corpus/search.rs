//! Random sampling for curves with prescribed exponents.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::rational;
use crate::error::{Error, Result};
use crate::invariants::{hilbert_table, stabilized_value};
use crate::poly::{HomogeneousPoly, MonomialBasis};
use crate::syzygy::certified_syzygies;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchParams {
    pub degree: u32,
    pub target: Vec<u32>,
    pub coeff_bound: i64,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchFinding {
    pub sample: usize,
    pub polynomial: String,
    pub exponents: Vec<u32>,
    pub tau: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub params: SearchParams,
    /// Samples that were not reduced curves with isolated singularities.
    pub skipped: usize,
    /// Exponent tuple ↦ number of samples realizing it.
    pub histogram: BTreeMap<String, usize>,
    pub findings: Vec<SearchFinding>,
}

impl SearchReport {
    pub fn summary_line(&self) -> String {
        if self.findings.is_empty() {
            "no witness found under these bounds".to_string()
        } else {
            format!("{} witnesses found among {} samples", self.findings.len(), self.params.samples)
        }
    }
}

/// A polynomial of degree `d` on a random support with nonzero coefficients in `[-bound, bound]`.
pub fn random_sparse_poly(d: u32, bound: i64, rng: &mut ChaCha8Rng) -> Result<HomogeneousPoly> {
    let basis = MonomialBasis::new(d as i64);
    let size = rng.gen_range(3.min(basis.len())..=basis.len());
    let terms: Vec<_> = sample(rng, basis.len(), size)
        .into_iter()
        .map(|i| {
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-bound..=bound);
            }
            (basis.get(i), rational(c))
        })
        .collect();
    HomogeneousPoly::from_terms(d, terms)
}

fn exponents_and_tau(f: &HomogeneousPoly) -> Result<(Vec<u32>, i64)> {
    let c = certified_syzygies(f)?;
    let (tau, _) = stabilized_value(&hilbert_table(&c.ranks), f.degree())?;
    Ok((c.summary.exponents, tau as i64))
}

/// Samples `params.samples` curves. Sample `i` draws from stream `i` of the
/// seed, so the result does not depend on `jobs`.
pub fn search(params: &SearchParams, jobs: usize) -> Result<SearchReport> {
    if params.degree < 3 {
        return Err(Error::DegreeTooSmall(params.degree));
    }
    if params.coeff_bound < 1 {
        return Err(Error::Input(format!("coefficient bound must be positive, got {}", params.coeff_bound)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Input(format!("cannot start {jobs} worker threads: {e}")))?;
    let results: Vec<Option<(HomogeneousPoly, Vec<u32>, i64)>> = pool.install(|| {
        (0..params.samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
                rng.set_stream(i as u64);
                let f = random_sparse_poly(params.degree, params.coeff_bound, &mut rng).ok()?;
                let (e, tau) = exponents_and_tau(&f).ok()?;
                Some((f, e, tau))
            })
            .collect()
    });
    let mut report = SearchReport { params: params.clone(), skipped: 0, histogram: BTreeMap::new(), findings: Vec::new() };
    for (i, r) in results.into_iter().enumerate() {
        let Some((f, e, tau)) = r else {
            report.skipped += 1;
            continue;
        };
        *report.histogram.entry(format!("{e:?}")).or_insert(0) += 1;
        if e == params.target {
            report.findings.push(SearchFinding { sample: i, polynomial: f.to_string(), exponents: e, tau });
        }
    }
    Ok(report)
}
