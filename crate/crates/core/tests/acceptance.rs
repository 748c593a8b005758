//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Expected values come from the corpus file and from closed formulas written
//! out again here, independently of the library's own formula code.
//! JACSYZ_JOBS sets the worker count (default 1).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use jacsyz::arith::{rational, Rational};
use jacsyz::arrangements::{analyze_arrangement, random_line, random_smooth_quartic, LineArrangement, Verdict};
use jacsyz::corpus::{embedded_corpus, run_entry, EntryOutcome};
use jacsyz::invariants::{analyze, AnalyzeOptions, CurveReport, Status, Subtype};
use jacsyz::poly::{HomogeneousPoly, Monomial};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const ENTRY_LIMIT: Duration = Duration::from_secs(10);
const LARGE_ENTRY_LIMIT: Duration = Duration::from_secs(120);
const SUITE_LIMIT: Duration = Duration::from_secs(15 * 60);
const RANDOM_RUNS: usize = 50;

struct Outcome {
    id: &'static str,
    title: &'static str,
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new(id: &'static str, title: &'static str) -> Self {
        Outcome { id, title, failures: Vec::new(), detail: String::new() }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

// closed formulas

fn tau_type_three(e: &[i64], eps: &[i64]) -> Option<i64> {
    let (d1, d2) = (e[0], e[1]);
    let q = d1 * d1 + d1 * d2 + d2 * d2 - 3 * d1 - 3 * d2;
    match (e.len(), eps) {
        (3, [3]) => Some(q - 3 * e[2]),
        (4, [2, 1]) => Some(q - 2 * e[2] - e[3] + 2),
        (4, [1, 2]) => Some(q - e[2] - 2 * e[3] + 2),
        (5, [1, 1, 1]) => Some(q - e[2] - e[3] - e[4] + 3),
        _ => None,
    }
}

fn nu_type_three(e: &[i64], eps: &[i64]) -> Option<i64> {
    let (d1, d2) = (e[0], e[1]);
    let shift = if d1 <= d2 - 2 {
        0
    } else if d1 == d2 - 1 {
        1
    } else {
        2
    };
    let v = match (e.len(), eps) {
        (3, [3]) => 3 * (e[2] - d2) + 9,
        (4, [2, 1]) => 2 * e[2] + e[3] - 3 * d2 + 7,
        (4, [1, 2]) => e[2] + 2 * e[3] - 3 * d2 + 7,
        (5, [1, 1, 1]) => e[2] + e[3] + e[4] - 3 * d2 + 6,
        _ => return None,
    };
    Some(v - shift)
}

fn nu_from_tau(d: i64, d1: i64, tau: i64) -> i64 {
    if 2 * d1 <= d - 1 {
        (d - 1).pow(2) - d1 * (d - 1 - d1) - tau
    } else {
        (3 * (d - 1).pow(2) + 3) / 4 - tau
    }
}

fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

fn dpw(d: i64, d1: i64) -> (i64, i64) {
    let lo = (d - 1) * (d - d1 - 1);
    let hi = (d - 1).pow(2) - d1 * (d - d1 - 1);
    (lo, if 2 * d1 >= d { hi - binom2(2 * d1 + 2 - d) } else { hi })
}

/// `Σ (m-1)^2` over intersection points, found by testing every line at every pairwise meet.
fn brute_force_tau(lines: &[HomogeneousPoly]) -> Rational {
    let coeff = |l: &HomogeneousPoly| [0, 1, 2].map(|i| l.coeff(&Monomial::var(i)));
    let c: Vec<[Rational; 3]> = lines.iter().map(coeff).collect();
    let mut total = Rational::zero();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let (a, b) = (&c[i], &c[j]);
            let p = [
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ];
            let m = c.iter().filter(|l| (&l[0] * &p[0] + &l[1] * &p[1] + &l[2] * &p[2]).is_zero()).count() as i64;
            // each point of multiplicity m is met C(m, 2) times
            total += Rational::new(((m - 1) * (m - 1)).into(), binom2(m).into());
        }
    }
    total
}

fn exps(r: &CurveReport) -> Vec<i64> {
    r.syzygy.exponents.iter().map(|v| *v as i64).collect()
}

fn report_of(o: &EntryOutcome) -> Option<&CurveReport> {
    o.report.as_ref()
}

fn find<'a>(outcomes: &'a [(EntryOutcome, Duration)], name: &str) -> Option<&'a EntryOutcome> {
    outcomes.iter().map(|(o, _)| o).find(|o| o.entry.name == name)
}

fn corpus_reproduction(outcomes: &[(EntryOutcome, Duration)]) -> Outcome {
    let mut out = Outcome::new("1", "corpus reproduction");
    for (o, t) in outcomes {
        out.require(o.status() == Status::Pass, || {
            let bad: Vec<String> = o
                .comparisons
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{} {} != {}", c.field, c.actual, c.expected))
                .chain(o.error.iter().map(|e| e.to_string()))
                .chain(o.report.iter().flat_map(|r| r.failed_checks().map(|c| c.name.clone())))
                .collect();
            format!("{}: {}", o.entry.name, bad.join("; "))
        });
        let d = o.polynomial.as_ref().map_or(0, |p| p.degree());
        let limit = if d <= 9 { ENTRY_LIMIT } else { LARGE_ENTRY_LIMIT };
        out.require(*t <= limit, || format!("{} (degree {d}) took {t:.1?}, limit {limit:?}", o.entry.name));
    }
    let spot = [
        ("abc-1", vec![4, 4, 5], 9, Subtype::ThreeA),
        ("abc-2", vec![3, 3, 3, 4], 1, Subtype::ThreeB),
        ("abc-3", vec![6, 7, 8, 9], 64, Subtype::ThreeBPrime),
        ("abc-4", vec![5, 6, 7, 7, 7], 40, Subtype::ThreeC),
        ("maximal-six-lines", vec![4, 4, 4, 4, 4], 15, Subtype::ThreeC),
        ("quintic-e7", vec![3, 4, 4, 4, 4], 7, Subtype::ThreeC),
    ];
    for (name, e, tau, sub) in spot {
        let r = find(outcomes, name).and_then(report_of);
        out.require(r.is_some_and(|r| r.syzygy.exponents == e && r.tau == tau && r.subtype == sub), || {
            format!("spot check {name}")
        });
    }
    let slowest = outcomes.iter().filter(|(o, _)| o.entry.name != "abc-3").map(|(_, t)| *t).max().unwrap_or_default();
    let large = outcomes.iter().find(|(o, _)| o.entry.name == "abc-3").map(|(_, t)| *t).unwrap_or_default();
    out.detail = format!("{} entries, slowest degree <= 9 entry {slowest:.1?}, degree 11 entry {large:.1?}", outcomes.len());
    out
}

fn family_laws(outcomes: &[(EntryOutcome, Duration)]) -> Outcome {
    let mut out = Outcome::new("2", "family laws");
    let mut seen = 0;
    for j in 3..=5u32 {
        let r = find(outcomes, &format!("symmetric-{j}")).and_then(report_of);
        let want = vec![j + 1, j + 1, 2 * j - 1, 2 * j - 1, 2 * j - 1];
        let tau = 3 * (j as i64 - 1).pow(2);
        out.require(r.is_some_and(|r| r.syzygy.exponents == want && r.tau == tau && r.subtype == Subtype::ThreeC), || {
            format!("symmetric j={j}")
        });
        seen += 1;
    }
    for j in 3..=4u32 {
        let variants = [
            ("x", vec![j + 1, j + 1, 2 * j - 1]),
            ("xy", vec![j + 1, j + 1, 2 * j]),
            ("xyz", vec![j + 1, j + 1]),
        ];
        for (v, want) in variants {
            let r = find(outcomes, &format!("symmetric-{j}-{v}")).and_then(report_of);
            out.require(r.is_some_and(|r| r.syzygy.exponents == want), || format!("symmetric j={j} times {v}"));
            seen += 1;
        }
    }
    for (n1, n2) in [(2u32, 2u32), (2, 3), (3, 3), (2, 4)] {
        let o = find(outcomes, &format!("two-pencils-{n1}-{n2}"));
        let s = n1 + n2;
        let want = vec![n1 + 2, n2 + 2, s, s, s];
        let r = o.and_then(report_of);
        out.require(r.is_some_and(|r| r.syzygy.exponents == want && r.subtype == Subtype::ThreeC), || {
            format!("two pencils ({n1},{n2})")
        });
        let base = ((n1 - 1).pow(2) + (n2 - 1).pow(2) + n1 * n2) as i64;
        let got = o.and_then(|o| o.comparisons.iter().find(|c| c.field == "base_tau")).map(|c| c.actual.clone());
        out.require(got == Some(base.into()), || format!("two pencils ({n1},{n2}) base tau {got:?} != {base}"));
        seen += 1;
    }
    out.detail = format!("{seen} family members");
    out
}

fn formula_cross_checks(outcomes: &[(EntryOutcome, Duration)]) -> Outcome {
    let mut out = Outcome::new("3", "formula cross-checks");
    let mut type_three = 0;
    for r in outcomes.iter().filter_map(|(o, _)| report_of(o)) {
        let e = exps(r);
        let d = r.degree as i64;
        let eps = &r.syzygy.epsilons;
        let name = &r.name;
        let (lo, hi) = dpw(d, e[0]);
        out.require(lo <= r.tau && r.tau <= hi, || format!("{name}: tau {} outside [{lo}, {hi}]", r.tau));
        if r.syzygy.is_free {
            continue;
        }
        let m = e.len();
        out.require(e[0] + e[1] == d - 1 + eps.iter().sum::<i64>(), || format!("{name}: d1 + d2 != d - 1 + sum eps"));
        out.require(e.windows(2).all(|w| w[0] <= w[1]) && e[2] <= d - 1, || format!("{name}: d1 <= d2 <= d3 <= d-1 fails"));
        let reg = e[m - 1] + eps[m - 3] - 1;
        // regularity read off the resolution: generators in degree d_i, relations in degree rho_j - 1
        let from_resolution =
            e.iter().copied().chain(r.syzygy.relation_degrees.iter().map(|x| *x as i64 - 1)).max().unwrap();
        out.require(r.syzygy.regularity == reg && reg == from_resolution, || {
            format!("{name}: regularity {} vs d_m + eps - 1 = {reg} vs resolution {from_resolution}", r.syzygy.regularity)
        });
        if r.type_t == 3 {
            type_three += 1;
            match (tau_type_three(&e, eps), nu_type_three(&e, eps)) {
                (Some(t), Some(v)) => {
                    out.require(t == r.tau, || format!("{name}: tau formula {t} != {}", r.tau));
                    out.require(v == r.nu, || format!("{name}: nu formula {v} != {}", r.nu));
                }
                _ => out.failures.push(format!("{name}: type 3 with epsilons {eps:?}")),
            }
        }
    }
    out.detail = format!("{type_three} type-3 reports");
    out
}

fn oracle_equivalences(outcomes: &[(EntryOutcome, Duration)]) -> Outcome {
    let mut out = Outcome::new("4", "oracle equivalences");
    let mut arrangements = 0;
    for (o, _) in outcomes {
        let Some(r) = report_of(o) else { continue };
        let e = exps(r);
        let want = nu_from_tau(r.degree as i64, e[0], r.tau);
        out.require(r.nu == want, || format!("{}: nu from saturation {} != {want} from tau", r.name, r.nu));
        if let Some(a) = &o.arrangement {
            arrangements += 1;
            let t = brute_force_tau(a.arrangement.lines());
            out.require(t == rational(r.tau), || format!("{}: tau {} != combinatorial {t}", r.name, r.tau));
        }
    }
    for d in 3..=6u32 {
        let r = find(outcomes, &format!("fermat-{d}")).and_then(report_of);
        let nu = (3 * (d as i64 - 1).pow(2) + 3) / 4;
        out.require(
            r.is_some_and(|r| r.syzygy.exponents == vec![d - 1; 3] && r.tau == 0 && r.nu == nu),
            || format!("fermat {d}"),
        );
    }
    out.detail = format!("{arrangements} arrangements; smooth Fermat curves have nu = ceil(3(d-1)^2/4), not 0");
    out
}

fn classification_soundness(outcomes: &[(EntryOutcome, Duration)]) -> Outcome {
    let mut out = Outcome::new("5", "classification soundness");
    for r in outcomes.iter().filter_map(|(o, _)| report_of(o)).filter(|r| r.type_t == 3) {
        let e = &r.syzygy.exponents;
        let pattern = match (e.len(), r.syzygy.epsilons.as_slice()) {
            (3, [3]) => Some(Subtype::ThreeA),
            (4, [2, 1]) => Some(Subtype::ThreeB),
            (4, [1, 2]) => Some(Subtype::ThreeBPrime),
            (5, [1, 1, 1]) => Some(Subtype::ThreeC),
            _ => None,
        };
        out.require(pattern == Some(r.subtype), || format!("{}: {} with epsilons {:?}", r.name, r.subtype, r.syzygy.epsilons));
        if r.subtype == Subtype::ThreeB {
            out.require(e[2] < e[3], || format!("{}: 3B needs d3 < d4", r.name));
        }
    }
    for name in ["maximal-three-nodal-quartic", "maximal-six-lines"] {
        let r = find(outcomes, name).and_then(report_of);
        out.require(
            r.is_some_and(|r| {
                let (d, d1) = (r.degree as i64, r.syzygy.exponents[0] as i64);
                let all_equal = r.syzygy.exponents.len() == 5 && r.syzygy.exponents.iter().all(|x| *x as i64 == d1);
                let maximal = 2 * d1 == d + 2 && r.tau == dpw(d, d1).1;
                (r.subtype == Subtype::ThreeC && all_equal) && maximal && r.maximal_tjurina
            }),
            || format!("{name}: maximal Tjurina equivalence"),
        );
    }
    for (name, want, sub) in [("eight-lines-type-two-b", vec![4, 5, 6, 6], Subtype::TwoB), ("eight-lines-type-two-a", vec![4, 5, 5], Subtype::TwoA)] {
        let o = find(outcomes, name);
        let r = o.and_then(report_of);
        out.require(r.is_some_and(|r| r.type_t == 2 && r.syzygy.exponents == want && r.subtype == sub), || {
            format!("{name}: type 2 expected")
        });
        let v = o.and_then(|o| o.arrangement.as_ref()).map(|a| a.verdict.clone());
        out.require(matches!(v, Some(Verdict::NotCovered(_))), || format!("{name}: verdict {v:?}"));
    }
    out
}

fn random_arrangement(d: usize, rng: &mut ChaCha8Rng, triple: bool) -> LineArrangement {
    loop {
        let mut lines = Vec::new();
        if triple {
            // three lines through a random point
            let p = [0; 3].map(|_| rational(rand::Rng::gen_range(rng, -9..=9i64)));
            if p.iter().all(|c| c.is_zero()) {
                continue;
            }
            while lines.len() < 3 {
                let l = random_line(rng);
                let c = [0, 1, 2].map(|i| l.coeff(&Monomial::var(i)));
                // move the line through p by fixing the coefficient of a nonzero coordinate
                let k = p.iter().position(|c| !c.is_zero()).unwrap();
                let mut c2 = c.clone();
                c2[k] = Rational::zero();
                let s: Rational = (0..3).map(|i| &c2[i] * &p[i]).sum();
                c2[k] = -s / &p[k];
                let terms = (0..3).map(|i| (Monomial::var(i), c2[i].clone()));
                let Ok(l) = HomogeneousPoly::from_terms(1, terms) else { continue };
                if !l.is_zero() {
                    lines.push(l);
                }
            }
        }
        while lines.len() < d {
            lines.push(random_line(rng));
        }
        let Ok(a) = LineArrangement::new(lines) else { continue };
        let c = a.combinatorics();
        let wanted = if triple { c.nodes_except(3, 1) } else { c.is_nodal() };
        if wanted {
            return a;
        }
    }
}

fn randomized_runs(opts: AnalyzeOptions) -> Outcome {
    let mut out = Outcome::new("6", "randomized property runs");
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut cases: Vec<(usize, bool, LineArrangement)> = Vec::new();
    for _ in 0..RANDOM_RUNS {
        cases.push((6, false, random_arrangement(6, &mut rng, false)));
    }
    for _ in 0..RANDOM_RUNS {
        cases.push((7, false, random_arrangement(7, &mut rng, false)));
    }
    for _ in 0..RANDOM_RUNS {
        cases.push((7, true, random_arrangement(7, &mut rng, true)));
    }
    let results: Vec<String> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, (d, triple, a))| {
            let r = match analyze_arrangement(&format!("random-{i}"), a, opts) {
                Ok(r) => r,
                Err(e) => return Some(format!("random {d}-line arrangement {i}: {e}")),
            };
            let rep = &r.report;
            let ok = match (d, triple) {
                (6, _) => rep.syzygy.exponents == [4, 4, 4, 4, 4] && rep.tau == 15 && rep.subtype == Subtype::ThreeC,
                (7, true) => rep.syzygy.exponents == [4, 5, 5, 5, 5] && rep.tau == 22 && rep.subtype == Subtype::ThreeC,
                _ => rep.type_t != 3,
            };
            let consistent = matches!(r.verdict, Verdict::Consistent(_)) && rep.status() == Status::Pass;
            (!(ok && consistent)).then(|| format!("{}: exponents {:?} {} verdict {:?}", a, rep.syzygy.exponents, rep.subtype, r.verdict))
        })
        .collect();
    out.failures.extend(results);

    let mut quartics = Vec::new();
    for _ in 0..RANDOM_RUNS {
        match random_smooth_quartic(&mut rng) {
            Ok(f) => quartics.push(f),
            Err(e) => out.failures.push(format!("smooth quartic: {e}")),
        }
    }
    let bad: Vec<String> = quartics
        .par_iter()
        .filter_map(|f| match analyze("quartic", f, opts) {
            Ok(r) if r.tau == 0 && r.subtype == Subtype::ThreeA && r.status() == Status::Pass => None,
            Ok(r) => Some(format!("{f}: tau {} {}", r.tau, r.subtype)),
            Err(e) => Some(format!("{f}: {e}")),
        })
        .collect();
    out.failures.extend(bad);
    out.detail = format!(
        "{RANDOM_RUNS} nodal 6-line, {RANDOM_RUNS} nodal 7-line, {RANDOM_RUNS} 7-line with one triple point, {} smooth quartics",
        quartics.len()
    );
    out
}

fn main() {
    let jobs: usize = std::env::var("JACSYZ_JOBS").ok().and_then(|s| s.parse().ok()).unwrap_or(1).max(1);
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool");
    let start = Instant::now();
    let opts = AnalyzeOptions::default();

    let entries = embedded_corpus();
    let outcomes: Vec<(EntryOutcome, Duration)> = entries
        .par_iter()
        .map(|e| {
            let t = Instant::now();
            let o = run_entry(e, opts);
            (o, t.elapsed())
        })
        .collect();

    let mut results = vec![
        corpus_reproduction(&outcomes),
        family_laws(&outcomes),
        formula_cross_checks(&outcomes),
        oracle_equivalences(&outcomes),
        classification_soundness(&outcomes),
        randomized_runs(opts),
    ];
    let elapsed = start.elapsed();
    let mut runtime = Outcome::new("R", "suite runtime");
    runtime.require(elapsed <= SUITE_LIMIT, || format!("{elapsed:.0?} over {SUITE_LIMIT:?}"));
    runtime.detail = format!("{elapsed:.1?} with {jobs} worker(s)");
    results.push(runtime);

    let mut failed = BTreeMap::new();
    for r in &results {
        let verdict = if r.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:<2} {:<28} {verdict}  {}", r.id, r.title, r.detail);
        for f in &r.failures {
            println!("    {f}");
        }
        if !r.failures.is_empty() {
            failed.insert(r.id, r.failures.len());
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
