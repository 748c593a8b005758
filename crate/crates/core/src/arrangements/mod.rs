//! Line arrangements: intersection points with multiplicities, the
//! combinatorial Tjurina number, degree bounds on the exponents, and the
//! expected invariants of arrangements of six, seven and eight lines.

mod builders;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::invariants::{analyze, AnalyzeOptions, Check, CheckKind, CurveReport, Subtype};
use crate::poly::{parse_poly, HomogeneousPoly, Monomial};
use crate::syzygy::SyzygySummary;

pub use builders::{
    build_two_pencils, generic_line, line_times_curve, nodal_cubic_times_conic, random_line, random_smooth_quartic,
    symmetric_family, two_pencils_base_tau, SymmetricVariant, COEFF_BOUND, MAX_RETRIES,
};

/// Projective point with the last nonzero coordinate scaled to 1.
pub type Point = [Rational; 3];

fn canonical(mut v: [Rational; 3]) -> Option<[Rational; 3]> {
    let last = v.iter().rposition(|c| !c.is_zero())?;
    let s = v[last].clone();
    if !s.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &s;
        }
    }
    Some(v)
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A finite set of pairwise distinct lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineArrangement {
    lines: Vec<HomogeneousPoly>,
    coefficients: Vec<Point>,
}

impl LineArrangement {
    pub fn new(lines: Vec<HomogeneousPoly>) -> Result<Self> {
        let mut coefficients = Vec::with_capacity(lines.len());
        let mut seen = BTreeMap::new();
        for (i, l) in lines.iter().enumerate() {
            if l.degree() != 1 {
                return Err(Error::Arrangement(format!("form {i} ({l}) has degree {}, not 1", l.degree())));
            }
            let c = [0, 1, 2].map(|v| l.coeff(&Monomial::var(v)));
            let key = canonical(c.clone()).ok_or_else(|| Error::Arrangement(format!("form {i} is zero")))?;
            if let Some(j) = seen.insert(key, i) {
                return Err(Error::Arrangement(format!("lines {j} and {i} are proportional")));
            }
            coefficients.push(c);
        }
        Ok(LineArrangement { lines, coefficients })
    }

    pub fn parse(forms: &[&str]) -> Result<Self> {
        let lines = forms.iter().map(|s| parse_poly(s)).collect::<Result<Vec<_>>>()?;
        LineArrangement::new(lines)
    }

    /// Reads a JSON list of linear forms.
    pub fn from_json(text: &str) -> Result<Self> {
        let forms: Vec<String> =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("arrangement is not a JSON list of strings: {e}")))?;
        LineArrangement::parse(&forms.iter().map(String::as_str).collect::<Vec<_>>())
    }

    pub fn lines(&self) -> &[HomogeneousPoly] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Coefficient vector `(a, b, c)` of the line `a x + b y + c z`.
    pub fn coefficients(&self, i: usize) -> &Point {
        &self.coefficients[i]
    }

    /// The arrangement with one more line.
    pub fn with_line(&self, l: HomogeneousPoly) -> Result<Self> {
        let mut lines = self.lines.clone();
        lines.push(l);
        LineArrangement::new(lines)
    }

    /// Product of the linear forms.
    pub fn polynomial(&self) -> HomogeneousPoly {
        let mut it = self.lines.iter();
        let first = it.next().cloned().unwrap_or_else(|| HomogeneousPoly::monomial(Monomial::ONE, Rational::one()));
        it.fold(first, |acc, l| acc.mul(l))
    }

    pub fn combinatorics(&self) -> ArrangementCombinatorics {
        let d = self.len();
        let mut by_point: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..d {
            for j in i + 1..d {
                let p = canonical(cross(&self.coefficients[i], &self.coefficients[j]))
                    .expect("distinct lines meet in a point");
                let set = by_point.entry(p).or_default();
                set.insert(i);
                set.insert(j);
            }
        }
        let points: Vec<IntersectionPoint> =
            by_point.into_iter().map(|(point, lines)| IntersectionPoint { point, lines: lines.into_iter().collect() }).collect();
        let mut counts = BTreeMap::new();
        for p in &points {
            *counts.entry(p.multiplicity()).or_insert(0) += 1;
        }
        let max_multiplicity = points.iter().map(IntersectionPoint::multiplicity).max().unwrap_or(0);
        let tau = points.iter().map(|p| (p.multiplicity() as i64 - 1).pow(2)).sum();
        let pair_sum = points.iter().map(|p| binom2(p.multiplicity())).sum::<usize>();
        ArrangementCombinatorics { d, points, counts, max_multiplicity, tau, pairs_consistent: pair_sum == binom2(d) }
    }
}

impl fmt::Display for LineArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lines.iter().map(|l| format!("({l})")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionPoint {
    #[serde(serialize_with = "serialize_point")]
    pub point: Point,
    /// Indices of the lines through the point.
    pub lines: Vec<usize>,
}

fn serialize_point<S: serde::Serializer>(p: &Point, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|c| c.to_string()))
}

impl IntersectionPoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// Intersection points and their multiplicity census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrangementCombinatorics {
    pub d: usize,
    pub points: Vec<IntersectionPoint>,
    /// multiplicity ↦ number of points
    pub counts: BTreeMap<usize, usize>,
    pub max_multiplicity: usize,
    /// `Σ (mult - 1)^2`
    pub tau: i64,
    /// Whether `Σ C(mult, 2) = C(d, 2)`.
    pub pairs_consistent: bool,
}

impl ArrangementCombinatorics {
    /// Number of points of multiplicity exactly `k`.
    pub fn n(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn is_nodal(&self) -> bool {
        self.max_multiplicity <= 2
    }

    /// Whether the points of multiplicity `k` are the only non-nodes and there are `count` of them.
    pub fn nodes_except(&self, k: usize, count: usize) -> bool {
        self.counts.iter().all(|(m, c)| *m == 2 || (*m == k && *c == count)) && self.n(k) == count
    }

    /// Whether two points of multiplicity at least 3 lie on a common line of the arrangement.
    pub fn multiple_points_joined(&self) -> bool {
        let multiple: Vec<&IntersectionPoint> = self.points.iter().filter(|p| p.multiplicity() >= 3).collect();
        multiple.iter().enumerate().any(|(i, p)| multiple[i + 1..].iter().any(|q| p.lines.iter().any(|l| q.lines.contains(l))))
    }
}

/// The bounds `d_m ≤ reg ≤ d - 2` and `d_1 ≤ d - m(A)` valid for any line arrangement.
pub fn check_arrangement_bounds(comb: &ArrangementCombinatorics, s: &SyzygySummary) -> Vec<Check> {
    let d = comb.d as i64;
    let dm = *s.exponents.last().expect("exponents") as i64;
    let d1 = s.exponents[0] as i64;
    vec![
        Check::new(
            "arrangement d_m <= regularity <= d-2",
            json!({"d-2": d - 2}),
            json!({"d_m": dm, "regularity": s.regularity}),
            dm <= s.regularity && s.regularity <= d - 2,
            CheckKind::Consistency,
        ),
        Check::new(
            "arrangement d_1 <= d - max multiplicity",
            d - comb.max_multiplicity as i64,
            d1,
            d1 <= d - comb.max_multiplicity as i64,
            CheckKind::Consistency,
        ),
    ]
}

/// Outcome of matching an arrangement against the known small-degree cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum Verdict {
    Consistent(String),
    Inconsistent(String),
    /// Nothing is claimed for this combinatorics.
    NotCovered(String),
}

impl Verdict {
    pub fn is_inconsistent(&self) -> bool {
        matches!(self, Verdict::Inconsistent(_))
    }
}

struct Expected {
    label: &'static str,
    mult: usize,
    count: usize,
    tau: i64,
    subtype: Subtype,
    exponents: &'static [u32],
}

const EIGHT_LINES: [Expected; 7] = [
    Expected { label: "4 triple points", mult: 3, count: 4, tau: 32, subtype: Subtype::ThreeBPrime, exponents: &[5, 5, 5, 5] },
    Expected { label: "3 triple points", mult: 3, count: 3, tau: 31, subtype: Subtype::ThreeB, exponents: &[5, 5, 5, 6] },
    Expected { label: "5 triple points", mult: 3, count: 5, tau: 33, subtype: Subtype::ThreeC, exponents: &[5, 5, 5, 5, 5] },
    Expected { label: "4 triple points", mult: 3, count: 4, tau: 32, subtype: Subtype::ThreeC, exponents: &[5, 5, 5, 5, 6] },
    Expected { label: "3 triple points", mult: 3, count: 3, tau: 31, subtype: Subtype::ThreeC, exponents: &[5, 5, 5, 6, 6] },
    Expected { label: "2 triple points", mult: 3, count: 2, tau: 30, subtype: Subtype::ThreeC, exponents: &[5, 5, 6, 6, 6] },
    Expected { label: "one quadruple point", mult: 4, count: 1, tau: 31, subtype: Subtype::ThreeC, exponents: &[4, 6, 6, 6, 6] },
];

fn matches(e: &Expected, comb: &ArrangementCombinatorics, r: &CurveReport) -> bool {
    comb.nodes_except(e.mult, e.count) && r.tau == e.tau && r.subtype == e.subtype && r.syzygy.exponents == e.exponents
}

/// Checks an arrangement of 6, 7 or 8 lines against what is known about
/// type-three arrangements of that size.
pub fn classify_small_arrangement(comb: &ArrangementCombinatorics, r: &CurveReport) -> Verdict {
    let t3 = r.type_t == 3;
    let e = &r.syzygy.exponents;
    match comb.d {
        6 => {
            let want = Expected { label: "nodal", mult: 2, count: 15, tau: 15, subtype: Subtype::ThreeC, exponents: &[4, 4, 4, 4, 4] };
            match (comb.is_nodal(), t3) {
                (true, _) if matches(&want, comb, r) => Verdict::Consistent("nodal, type 3C with exponents (4,4,4,4,4)".into()),
                (true, _) => Verdict::Inconsistent(format!("nodal but exponents {e:?}, tau {}, {}", r.tau, r.subtype)),
                (false, true) => Verdict::Inconsistent("type 3 with a point of multiplicity above 2".into()),
                (false, false) => Verdict::Consistent("not nodal and not of type 3".into()),
            }
        }
        7 => {
            let want = Expected { label: "one triple point", mult: 3, count: 1, tau: 22, subtype: Subtype::ThreeC, exponents: &[4, 5, 5, 5, 5] };
            match (comb.nodes_except(3, 1), t3) {
                (true, _) if matches(&want, comb, r) => {
                    Verdict::Consistent("one triple point, type 3C with exponents (4,5,5,5,5)".into())
                }
                (true, _) => Verdict::Inconsistent(format!("one triple point but exponents {e:?}, tau {}, {}", r.tau, r.subtype)),
                (false, true) => Verdict::Inconsistent("type 3 without exactly one triple point".into()),
                (false, false) => Verdict::Consistent("not of type 3 and not nodal plus one triple point".into()),
            }
        }
        8 => {
            if t3 {
                return match EIGHT_LINES.iter().find(|x| matches(x, comb, r)) {
                    Some(x) => Verdict::Consistent(format!("type 3: {}, exponents {:?}", x.label, x.exponents)),
                    None => Verdict::Inconsistent(format!(
                        "type 3 with exponents {e:?}, tau {} and census {:?} fits no listed case",
                        r.tau, comb.counts
                    )),
                };
            }
            if comb.nodes_except(3, 2) {
                return Verdict::Inconsistent(format!("two triple points force type 3C (5,5,6,6,6), got {e:?}"));
            }
            Verdict::NotCovered(format!("not of type 3; census {:?} decides nothing", comb.counts))
        }
        d => Verdict::NotCovered(format!("no statement for {d} lines")),
    }
}

/// Combinatorics, curve analysis and the small-arrangement verdict together.
#[derive(Clone, Debug)]
pub struct ArrangementReport {
    pub arrangement: LineArrangement,
    pub combinatorics: ArrangementCombinatorics,
    pub report: CurveReport,
    pub verdict: Verdict,
}

impl ArrangementReport {
    pub fn to_json(&self, with_generators: bool) -> serde_json::Value {
        let c = &self.combinatorics;
        let counts: BTreeMap<String, usize> = c.counts.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        json!({
            "lines": self.arrangement.lines().iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "points": c.points,
            "multiplicity_counts": counts,
            "max_multiplicity": c.max_multiplicity,
            "tau_combinatorial": c.tau,
            "multiple_points_joined": c.multiple_points_joined(),
            "verdict": self.verdict,
            "report": self.report.to_json(with_generators),
        })
    }
}

/// Analyzes the product of the lines and adds the arrangement checks to the report.
pub fn analyze_arrangement(name: &str, arr: &LineArrangement, opts: AnalyzeOptions) -> Result<ArrangementReport> {
    let comb = arr.combinatorics();
    let mut report = analyze(name, &arr.polynomial(), opts)?;
    report.checks.push(Check::new("pair count identity", binom2(comb.d), comb.d, comb.pairs_consistent, CheckKind::Consistency));
    report.checks.push(Check::equal("tau equals combinatorial tau", comb.tau, report.tau, CheckKind::Check));
    report.checks.extend(check_arrangement_bounds(&comb, &report.syzygy));
    let verdict = classify_small_arrangement(&comb, &report);
    if let Verdict::Inconsistent(why) = &verdict {
        report.checks.push(Check::new("small arrangement classification", "consistent", why, false, CheckKind::Check));
    }
    Ok(ArrangementReport { arrangement: arr.clone(), combinatorics: comb, report, verdict })
}
