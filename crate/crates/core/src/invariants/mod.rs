//! Tjurina number, Jacobian module, freeness defect, type and subtype, and
//! the cross-checks that tie them to the syzygy data.

mod formulas;
mod hilbert;
mod saturation;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::poly::{dim_s, HomogeneousPoly};
use crate::syzygy::{certified_syzygies, second_syzygy_degree_table, SecondSyzygyDegreeTable, SyzygyEngine, SyzygySummary};

pub use formulas::{
    classify, dpw_bounds, is_maximal_tjurina, maximal_tjurina_sides, minimal_tjurina_sides, nu_formula, nu_from_tau,
    subtype_from_shape, tau_formula, Classification, DpwBounds, Subtype,
};
pub use hilbert::{hilbert_m, hilbert_table, stabilized_value, tjurina};
pub use saturation::{saturation_dims, SaturationTable};

/// Which arithmetic runs the linear algebra.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldMode {
    /// Exact elimination over the rationals in every degree.
    Rational,
    /// Elimination modulo the working prime, with the syzygy data and the
    /// Hilbert function of `M(f)` certified over the rationals. The saturation
    /// is computed modulo the prime, which can only overstate `n(f)_k`.
    #[default]
    Prime,
}

impl std::str::FromStr for FieldMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(FieldMode::Rational),
            "prime" => Ok(FieldMode::Prime),
            _ => Err(Error::Input(format!("unknown field mode {s:?}, expected rational or prime"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub field: FieldMode,
    pub timings: bool,
}

/// Failure class of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A comparison between two routes or against a stated value.
    Check,
    /// An internal identity that can only fail through a bug or a false premise.
    Consistency,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub kind: CheckKind,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl Serialize, actual: impl Serialize, pass: bool, kind: CheckKind) -> Self {
        Check {
            name: name.into(),
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            actual: serde_json::to_value(actual).unwrap_or(Value::Null),
            pass,
            kind,
        }
    }

    /// A check that `actual == expected`.
    pub fn equal<T: Serialize + PartialEq>(name: impl Into<String>, expected: T, actual: T, kind: CheckKind) -> Self {
        let pass = expected == actual;
        Check::new(name, expected, actual, pass, kind)
    }
}

/// Overall verdict of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Failed,
    Inconsistent,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Failed => 2,
            Status::Inconsistent => 3,
        }
    }
}

pub fn status_of(checks: &[Check]) -> Status {
    checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| match c.kind {
            CheckKind::Check => Status::Failed,
            CheckKind::Consistency => Status::Inconsistent,
        })
        .max()
        .unwrap_or(Status::Pass)
}

/// Everything computed for one curve.
#[derive(Clone, Debug)]
pub struct CurveReport {
    pub name: String,
    pub polynomial: HomogeneousPoly,
    pub degree: u32,
    pub syzygy: SyzygySummary,
    pub tau: i64,
    /// First degree from which `dim M(f)_k = τ`.
    pub tau_stable_from: u32,
    /// `dim M(f)_k` for `k = 0 ..= 3d`.
    pub hilbert_m: Vec<usize>,
    pub saturation: SaturationTable,
    /// `n(f)_k = dim M(f)_k - dim (S/I_f)_k` for `k = 0 ..= 3d`.
    pub n_table: Vec<i64>,
    pub nu: i64,
    pub type_t: i64,
    pub subtype: Subtype,
    pub dpw: DpwBounds,
    pub second_syzygies: Option<SecondSyzygyDegreeTable>,
    pub maximal_tjurina: bool,
    pub checks: Vec<Check>,
    pub timings_ms: BTreeMap<String, u64>,
    pub field: FieldMode,
}

impl CurveReport {
    pub fn status(&self) -> Status {
        status_of(&self.checks)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The report as JSON with stable keys. Timings are empty unless they were requested.
    pub fn to_json(&self, with_generators: bool) -> Value {
        let s = &self.syzygy;
        let mut n_table = Map::new();
        for (k, v) in self.n_table.iter().enumerate() {
            n_table.insert(k.to_string(), json!(v));
        }
        let mut obj = Map::new();
        obj.insert("name".into(), json!(self.name));
        obj.insert("polynomial".into(), json!(self.polynomial.to_string()));
        obj.insert("degree".into(), json!(self.degree));
        obj.insert("field".into(), json!(self.field));
        obj.insert("n_table_exact".into(), json!(self.field == FieldMode::Rational));
        obj.insert("exponents".into(), json!(s.exponents));
        obj.insert("epsilons".into(), json!(s.epsilons));
        obj.insert("relation_degrees".into(), json!(s.relation_degrees));
        obj.insert("regularity".into(), json!(s.regularity));
        obj.insert("tau".into(), json!(self.tau));
        obj.insert("nu".into(), json!(self.nu));
        obj.insert("n_table".into(), Value::Object(n_table));
        obj.insert("type".into(), json!(self.type_t));
        obj.insert("subtype".into(), json!(self.subtype));
        obj.insert("free".into(), json!(s.is_free));
        obj.insert("hilbert_M".into(), json!(self.hilbert_m));
        obj.insert("saturation".into(), json!(self.saturation.dims));
        obj.insert("dpw".into(), json!(self.dpw));
        obj.insert("maximal_tjurina".into(), json!(self.maximal_tjurina));
        obj.insert("second_syzygy_degrees".into(), json!(self.second_syzygies.as_ref().map(|t| &t.degrees)));
        if with_generators {
            let gens: Vec<Value> =
                s.generators.iter().map(|g| json!({"degree": g.degree, "syzygy": g.to_string()})).collect();
            obj.insert("generators".into(), Value::Array(gens));
        }
        obj.insert("checks".into(), json!(self.checks));
        obj.insert("status".into(), json!(self.status()));
        obj.insert("timings_ms".into(), json!(self.timings_ms));
        Value::Object(obj)
    }
}

impl fmt::Display for CurveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.syzygy;
        writeln!(f, "curve      {}", self.polynomial)?;
        writeln!(f, "degree     {}", self.degree)?;
        writeln!(f, "exponents  {:?}", s.exponents)?;
        writeln!(f, "epsilons   {:?}", s.epsilons)?;
        writeln!(f, "relations  {:?}", s.relation_degrees)?;
        writeln!(f, "regularity {}", s.regularity)?;
        writeln!(f, "tau        {}", self.tau)?;
        writeln!(f, "nu         {}", self.nu)?;
        writeln!(f, "type       {} ({})", self.type_t, self.subtype)?;
        let failed: Vec<&str> = self.failed_checks().map(|c| c.name.as_str()).collect();
        if failed.is_empty() {
            write!(f, "checks     {} passed", self.checks.len())
        } else {
            write!(f, "checks     FAILED: {}", failed.join(", "))
        }
    }
}

struct Stopwatch {
    on: bool,
    last: Instant,
    out: BTreeMap<String, u64>,
}

impl Stopwatch {
    fn lap(&mut self, name: &str) {
        if self.on {
            let now = Instant::now();
            self.out.insert(name.to_string(), (now - self.last).as_millis() as u64);
            self.last = now;
        }
    }
}

/// Runs the whole pipeline on `f` and evaluates every applicable check.
pub fn analyze(name: &str, f: &HomogeneousPoly, opts: AnalyzeOptions) -> Result<CurveReport> {
    let d = f.degree();
    if d < 3 {
        return Err(Error::DegreeTooSmall(d));
    }
    let mut clock = Stopwatch { on: opts.timings, last: Instant::now(), out: BTreeMap::new() };

    let (ranks, syzygy, saturation, modular_exponents) = match opts.field {
        FieldMode::Rational => {
            let engine = SyzygyEngine::<BigInt>::new(f)?;
            clock.lap("jacobian_ranks");
            let syzygy = engine.summary_with_generators()?;
            clock.lap("syzygies");
            let saturation = saturation_dims(engine.map(), d)?;
            clock.lap("saturation");
            (engine.ranks().clone(), syzygy, saturation, None)
        }
        FieldMode::Prime => {
            let c = certified_syzygies(f)?;
            clock.lap("syzygies");
            let saturation = saturation_dims(c.modular.map(), d)?;
            clock.lap("saturation");
            (c.ranks, c.summary, saturation, Some(c.modular_exponents))
        }
    };
    let hilbert = hilbert_table(&ranks);
    let (tau, tau_stable_from) = stabilized_value(&hilbert, d)?;
    let tau = tau as i64;

    let n_table: Vec<i64> =
        hilbert.iter().zip(&saturation.dims).map(|(h, s)| *h as i64 - *s as i64).collect();
    let nu = n_table.iter().copied().max().unwrap_or(0);
    let cls = classify(&syzygy);
    let d1 = syzygy.exponents[0] as i64;
    let dpw = dpw_bounds(d as i64, d1);
    let second_syzygies = second_syzygy_degree_table(&syzygy).ok();
    let maximal_tjurina = is_maximal_tjurina(&syzygy, tau);

    let mut report = CurveReport {
        name: name.to_string(),
        polynomial: f.clone(),
        degree: d,
        syzygy,
        tau,
        tau_stable_from,
        hilbert_m: hilbert,
        saturation,
        n_table,
        nu,
        type_t: cls.type_t,
        subtype: cls.subtype,
        dpw,
        second_syzygies,
        maximal_tjurina,
        checks: Vec::new(),
        timings_ms: BTreeMap::new(),
        field: opts.field,
    };
    report.checks = standard_checks(&report, &cls);

    if let Some(e) = modular_exponents {
        report.checks.push(Check::equal("modular exponents", report.syzygy.exponents.clone(), e, CheckKind::Check));
    }
    report.timings_ms = clock.out;
    Ok(report)
}

fn standard_checks(r: &CurveReport, cls: &Classification) -> Vec<Check> {
    use CheckKind::{Check as C, Consistency as K};
    let s = &r.syzygy;
    let d = r.degree as i64;
    let e: Vec<i64> = s.exponents.iter().map(|v| *v as i64).collect();
    let m = e.len();
    let mut out = Vec::new();

    out.push(Check::new(
        "nakayama counts",
        "new = kernel - generated >= 0",
        s.generator_steps.iter().map(|st| st.new_generators).collect::<Vec<_>>(),
        s.generator_steps.iter().chain(&s.relation_steps).all(|st| st.generated_dim + st.new_generators == st.kernel_dim),
        K,
    ));
    out.push(Check::equal("betti numbers match hilbert function of D_0", Vec::<i64>::new(), s.hilbert_series_mismatches.clone(), K));
    out.push(Check::new("epsilons positive", ">= 1", &s.epsilons, s.epsilons.iter().all(|x| *x >= 1), K));
    let ordered = e.windows(2).all(|w| w[0] <= w[1]) && e.iter().take(3).all(|x| *x <= d - 1);
    out.push(Check::new("first exponents at most d-1", d - 1, &e[..m.min(3)], ordered, K));
    out.push(Check::equal("free iff nu = 0 iff type 0", [s.is_free, s.is_free], [r.nu == 0, r.type_t == 0], K));
    if !s.is_free {
        let sum: i64 = s.epsilons.iter().sum();
        out.push(Check::equal("d_1 + d_2 = d - 1 + sum of epsilons", d - 1 + sum, e[0] + e[1], K));
        out.push(Check::new("d_m at most 2d-4", 2 * d - 4, e[m - 1], e[m - 1] <= 2 * d - 4, K));
        out.push(Check::new("d_m at most regularity + 1", s.regularity + 1, e[m - 1], e[m - 1] <= s.regularity + 1, K));
        if r.tau > 0 {
            out.push(Check::new("regularity at most 2d-4", 2 * d - 4, s.regularity, s.regularity <= 2 * d - 4, K));
        } else {
            out.push(Check::equal("smooth curve regularity 2d-3", 2 * d - 3, s.regularity, K));
        }
    }
    let low = (0..(d - 1).max(0) as usize).all(|k| r.hilbert_m[k] == dim_s(k as i64));
    out.push(Check::new("hilbert function full below d-1", "dim S_k", "", low, K));
    out.push(Check::new("saturation start certified", true, r.saturation.start_certified, r.saturation.start_certified, K));
    out.push(Check::new("saturation contains jacobian ideal", true, r.saturation.contains_jacobian, r.saturation.contains_jacobian, K));
    out.push(Check::new("n table nonnegative", ">= 0", r.n_table.iter().min(), r.n_table.iter().all(|v| *v >= 0), K));
    out.push(Check::new(
        "classification consistent",
        "fits the type-3 case list",
        cls.inconsistency.clone().unwrap_or_else(|| r.subtype.to_string()),
        cls.inconsistency.is_none(),
        K,
    ));

    let (lhs, rhs) = minimal_tjurina_sides(s, r.tau);
    out.push(Check::new(
        "minimal tjurina characterization",
        json!({"3-syzygy with d_2 = d_3 = d-1": rhs}),
        json!({"tau = tau_min": lhs}),
        lhs == rhs,
        K,
    ));
    let (lhs, rhs) = maximal_tjurina_sides(s, r.subtype, r.tau);
    out.push(Check::new(
        "maximal tjurina equivalence",
        json!({"3C with equal exponents": lhs}),
        json!({"maximal with 2 d_1 = d + 2": rhs}),
        lhs == rhs,
        K,
    ));

    out.push(Check::new("dpw lower bound", r.dpw.tau_min, r.tau, r.tau >= r.dpw.tau_min, C));
    out.push(Check::new("dpw upper bound", r.dpw.upper(), r.tau, r.tau <= r.dpw.upper(), C));
    out.push(Check::equal("nu from saturation equals nu from tau", nu_from_tau(d, e[0], r.tau), r.nu, C));

    if let Some(t) = tau_formula(r.subtype, &s.exponents) {
        out.push(Check::equal("tau formula", t, r.tau, C));
    }
    if let Some((v, bound)) = nu_formula(r.subtype, &s.exponents) {
        out.push(Check::equal("nu formula", v, r.nu, C));
        out.push(Check::new("nu lower bound", bound, r.nu, r.nu >= bound, C));
    }
    if let Some(b) = r.second_syzygies.as_ref().and_then(|t| t.three_a_bounds) {
        out.push(Check::new("second syzygy degree bounds", [true; 3], b, b.iter().all(|x| *x), C));
    }
    out
}

/// `n(f)_k` table and `ν(C)` for a curve.
pub fn freeness_defect(f: &HomogeneousPoly) -> Result<(i64, Vec<i64>)> {
    let d = f.degree();
    let engine = SyzygyEngine::<BigInt>::new(f)?;
    let hilbert = hilbert_table(engine.ranks());
    stabilized_value(&hilbert, d)?;
    let sat = saturation_dims(engine.map(), d)?;
    let table: Vec<i64> = hilbert.iter().zip(&sat.dims).map(|(h, s)| *h as i64 - *s as i64).collect();
    Ok((table.iter().copied().max().unwrap_or(0), table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn run(s: &str) -> CurveReport {
        analyze(s, &parse_poly(s).unwrap(), AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn first_witness() {
        let r = run("x*y*(x^4+y^4-z^4)");
        assert_eq!(r.syzygy.exponents, vec![4, 4, 5]);
        assert_eq!((r.tau, r.nu, r.subtype), (9, 10, Subtype::ThreeA));
        assert_eq!(r.hilbert_m[18], 9);
        assert_eq!(r.status(), Status::Pass, "{:?}", r.failed_checks().collect::<Vec<_>>());
        let t = r.second_syzygies.as_ref().unwrap();
        assert_eq!(t.degrees[0], vec![Some(4), Some(4), Some(3)]);
    }

    #[test]
    fn smooth_quartic() {
        let r = run("x^4+y^4+z^4");
        assert_eq!(r.syzygy.exponents, vec![3, 3, 3]);
        assert_eq!((r.tau, r.nu, r.subtype), (0, 7, Subtype::ThreeA));
        assert_eq!(r.status(), Status::Pass, "{:?}", r.failed_checks().collect::<Vec<_>>());
    }

    #[test]
    fn prime_mode_agrees() {
        let s = "x^4+y^4+x*y*z*(x+z)";
        let f = parse_poly(s).unwrap();
        let r = analyze(s, &f, AnalyzeOptions { field: FieldMode::Prime, timings: false }).unwrap();
        let q = analyze(s, &f, AnalyzeOptions { field: FieldMode::Rational, timings: false }).unwrap();
        assert!(r.check("modular exponents").unwrap().pass);
        assert_eq!(r.n_table, q.n_table);
        assert_eq!(r.hilbert_m, q.hilbert_m);
        assert_eq!((r.tau, r.nu, r.subtype), (1, 6, Subtype::ThreeB));
    }

    #[test]
    fn low_degree_is_rejected() {
        let f = parse_poly("x^2+y^2").unwrap();
        assert_eq!(analyze("", &f, AnalyzeOptions::default()).unwrap_err(), Error::DegreeTooSmall(2));
    }

    #[test]
    fn free_curve_has_no_defect() {
        let (nu, table) = freeness_defect(&parse_poly("x*y*z*(x^3*y^3+y^3*z^3+x^3*z^3)").unwrap()).unwrap();
        assert_eq!(nu, 0);
        assert!(table.iter().all(|v| *v == 0));
    }
}
