//! The embedded regression corpus and the random exponent search.

mod search;

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arrangements::{
    analyze_arrangement, build_two_pencils, line_times_curve, nodal_cubic_times_conic, symmetric_family,
    two_pencils_base_tau, ArrangementReport, LineArrangement, SymmetricVariant, Verdict,
};
use crate::error::{Error, Result};
use crate::invariants::{analyze, tjurina, AnalyzeOptions, CurveReport, Status};
use crate::poly::{parse_poly, HomogeneousPoly};

pub use search::{random_sparse_poly, search, SearchFinding, SearchParams, SearchReport};

/// The corpus shipped with the crate.
pub const EMBEDDED_CORPUS: &str = include_str!("../../corpus/corpus.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plain,
    X,
    Xy,
    Xyz,
}

impl From<Variant> for SymmetricVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Plain => SymmetricVariant::Plain,
            Variant::X => SymmetricVariant::X,
            Variant::Xy => SymmetricVariant::XY,
            Variant::Xyz => SymmetricVariant::XYZ,
        }
    }
}

/// Recipe for a curve that is built rather than written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Builder {
    Symmetric { j: u32, variant: Variant },
    GenericLine { curve: String, seed: u64 },
    ConicNodalCubic { seed: u64 },
    TwoPencils { n1: usize, n2: usize, seed: u64 },
}

/// Expected values. Absent fields are not compared.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilons: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<i64>,
    #[serde(default, rename = "type", skip_serializing_if = "Option::is_none")]
    pub type_t: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subtype: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal_tjurina: Option<bool>,
    /// Multiplicity census of an arrangement, keyed by multiplicity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub joined: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    /// Tjurina number of the two pencils before the generic lines are added.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_tau: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builder: Option<Builder>,
    pub expected: Expected,
}

pub fn load_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let entries: Vec<CorpusEntry> =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("corpus is not valid: {e}")))?;
    for e in &entries {
        let sources = e.polynomial.is_some() as u8 + e.arrangement.is_some() as u8 + e.builder.is_some() as u8;
        if sources != 1 {
            return Err(Error::Input(format!("entry {} needs exactly one of polynomial, arrangement, builder", e.name)));
        }
    }
    let mut names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
    names.sort_unstable();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Input(format!("duplicate corpus entry {}", w[0])));
    }
    Ok(entries)
}

pub fn embedded_corpus() -> Vec<CorpusEntry> {
    load_corpus(EMBEDDED_CORPUS).expect("embedded corpus parses")
}

/// One compared field.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub field: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

fn compare<T: Serialize + PartialEq>(out: &mut Vec<Comparison>, field: &str, expected: &Option<T>, actual: T) {
    if let Some(e) = expected {
        out.push(Comparison { field: field.into(), expected: json!(e), actual: json!(actual), pass: *e == actual });
    }
}

/// Result of running one corpus entry.
#[derive(Clone, Debug)]
pub struct EntryOutcome {
    pub entry: CorpusEntry,
    /// The curve that was analyzed, when it could be built.
    pub polynomial: Option<HomogeneousPoly>,
    pub report: Option<CurveReport>,
    pub arrangement: Option<ArrangementReport>,
    pub comparisons: Vec<Comparison>,
    pub error: Option<Error>,
}

impl EntryOutcome {
    pub fn status(&self) -> Status {
        if let Some(e) = &self.error {
            return if e.exit_code() == 3 { Status::Inconsistent } else { Status::Failed };
        }
        let checks = self.report.as_ref().map(|r| r.status()).unwrap_or(Status::Pass);
        let fields = if self.comparisons.iter().all(|c| c.pass) { Status::Pass } else { Status::Failed };
        checks.max(fields)
    }

    pub fn to_json(&self, with_generators: bool) -> Value {
        let report = match (&self.arrangement, &self.report) {
            (Some(a), _) => a.to_json(with_generators),
            (None, Some(r)) => r.to_json(with_generators),
            _ => Value::Null,
        };
        json!({
            "name": self.entry.name,
            "group": self.entry.group,
            "polynomial": self.polynomial.as_ref().map(|p| p.to_string()),
            "expected": self.entry.expected,
            "comparisons": self.comparisons,
            "error": self.error.as_ref().map(|e| e.to_string()),
            "status": self.status(),
            "report": report,
        })
    }
}

enum Built {
    Curve(HomogeneousPoly),
    Lines(LineArrangement),
}

fn build(entry: &CorpusEntry) -> Result<(Built, Option<i64>)> {
    if let Some(p) = &entry.polynomial {
        return Ok((Built::Curve(parse_poly(p)?), None));
    }
    if let Some(lines) = &entry.arrangement {
        return Ok((Built::Lines(LineArrangement::parse(&lines.iter().map(String::as_str).collect::<Vec<_>>())?), None));
    }
    match entry.builder.as_ref().expect("checked by load_corpus") {
        Builder::Symmetric { j, variant } => Ok((Built::Curve(symmetric_family(*j, variant.clone().into())?), None)),
        Builder::GenericLine { curve, seed } => {
            let (f, _) = line_times_curve(&parse_poly(curve)?, &mut ChaCha8Rng::seed_from_u64(*seed))?;
            Ok((Built::Curve(f), None))
        }
        Builder::ConicNodalCubic { seed } => {
            let (f, _) = nodal_cubic_times_conic(&mut ChaCha8Rng::seed_from_u64(*seed))?;
            Ok((Built::Curve(f), None))
        }
        Builder::TwoPencils { n1, n2, seed } => {
            let a = build_two_pencils(*n1, *n2, &mut ChaCha8Rng::seed_from_u64(*seed))?;
            // the pencils alone, through the Hilbert function rather than the census
            let base = LineArrangement::new(a.lines()[..n1 + n2].to_vec())?;
            let base_tau = tjurina(&base.polynomial())? as i64;
            if base.combinatorics().tau != two_pencils_base_tau(*n1, *n2) {
                return Err(Error::Internal(format!("pencil census disagrees with ({n1}, {n2})")));
            }
            Ok((Built::Lines(a), Some(base_tau)))
        }
    }
}

fn verdict_name(v: &Verdict) -> &'static str {
    match v {
        Verdict::Consistent(_) => "consistent",
        Verdict::Inconsistent(_) => "inconsistent",
        Verdict::NotCovered(_) => "not-covered",
    }
}

pub fn run_entry(entry: &CorpusEntry, opts: AnalyzeOptions) -> EntryOutcome {
    let mut out = EntryOutcome {
        entry: entry.clone(),
        polynomial: None,
        report: None,
        arrangement: None,
        comparisons: Vec::new(),
        error: None,
    };
    let mut run = || -> Result<()> {
        let (built, base_tau) = build(entry)?;
        let e = &entry.expected;
        let report = match built {
            Built::Curve(f) => {
                out.polynomial = Some(f.clone());
                analyze(&entry.name, &f, opts)?
            }
            Built::Lines(a) => {
                out.polynomial = Some(a.polynomial());
                let ar = analyze_arrangement(&entry.name, &a, opts)?;
                let c = &ar.combinatorics;
                let counts: BTreeMap<String, usize> = c.counts.iter().map(|(k, v)| (k.to_string(), *v)).collect();
                compare(&mut out.comparisons, "counts", &e.counts, counts);
                compare(&mut out.comparisons, "joined", &e.joined, c.multiple_points_joined());
                compare(&mut out.comparisons, "verdict", &e.verdict, verdict_name(&ar.verdict).to_string());
                let r = ar.report.clone();
                out.arrangement = Some(ar);
                r
            }
        };
        if let Some(t) = base_tau {
            compare(&mut out.comparisons, "base_tau", &e.base_tau, t);
        }
        let s = &report.syzygy;
        compare(&mut out.comparisons, "exponents", &e.exponents, s.exponents.clone());
        compare(&mut out.comparisons, "epsilons", &e.epsilons, s.epsilons.clone());
        compare(&mut out.comparisons, "tau", &e.tau, report.tau);
        compare(&mut out.comparisons, "nu", &e.nu, report.nu);
        compare(&mut out.comparisons, "type", &e.type_t, report.type_t);
        compare(&mut out.comparisons, "subtype", &e.subtype, report.subtype.to_string());
        compare(&mut out.comparisons, "free", &e.free, s.is_free);
        compare(&mut out.comparisons, "maximal_tjurina", &e.maximal_tjurina, report.maximal_tjurina);
        out.report = Some(report);
        Ok(())
    };
    if let Err(err) = run() {
        out.error = Some(err);
    }
    out
}

/// Runs the entries whose name or group contains `filter`, on `jobs` threads,
/// returning outcomes in corpus order.
pub fn run_corpus(entries: &[CorpusEntry], filter: Option<&str>, opts: AnalyzeOptions, jobs: usize) -> Result<Vec<EntryOutcome>> {
    let selected: Vec<&CorpusEntry> = entries
        .iter()
        .filter(|e| filter.map_or(true, |f| e.name.contains(f) || e.group.contains(f)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Input(format!("cannot start {jobs} worker threads: {e}")))?;
    Ok(pool.install(|| selected.par_iter().map(|e| run_entry(e, opts)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_corpus_loads() {
        let c = embedded_corpus();
        assert!(c.len() > 50);
        assert!(c.iter().any(|e| e.name == "abc-1"));
    }

    #[test]
    fn rejects_ambiguous_entries() {
        let text = r#"[{"name": "a", "group": "g", "polynomial": "x^3", "arrangement": ["x"], "expected": {}}]"#;
        assert!(matches!(load_corpus(text), Err(Error::Input(_))));
        let text = r#"[{"name": "a", "group": "g", "polynomial": "x^3", "expected": {"bogus": 1}}]"#;
        assert!(matches!(load_corpus(text), Err(Error::Input(_))));
    }

    #[test]
    fn small_entry_passes() {
        let c = embedded_corpus();
        let e = c.iter().find(|e| e.name == "abc-2").unwrap();
        let o = run_entry(e, AnalyzeOptions::default());
        assert_eq!(o.status(), Status::Pass, "{:?}", o.comparisons);
        assert_eq!(o.comparisons.len(), 6);
    }

    #[test]
    fn mismatch_fails() {
        let mut e = embedded_corpus().into_iter().find(|e| e.name == "abc-2").unwrap();
        e.expected.tau = Some(2);
        assert_eq!(run_entry(&e, AnalyzeOptions::default()).status(), Status::Failed);
    }
}
