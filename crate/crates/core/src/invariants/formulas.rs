//! Closed formulas in terms of the degree, exponents and Tjurina number.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::syzygy::SyzygySummary;

/// Type and subtype tag of a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subtype {
    Free,
    PlusOne,
    TwoA,
    TwoB,
    ThreeA,
    ThreeB,
    ThreeBPrime,
    ThreeC,
    Other(i64),
}

impl Subtype {
    pub fn is_type_three(self) -> bool {
        matches!(self, Subtype::ThreeA | Subtype::ThreeB | Subtype::ThreeBPrime | Subtype::ThreeC)
    }

    pub fn parse(s: &str) -> Option<Subtype> {
        Some(match s {
            "Free" => Subtype::Free,
            "PlusOne" => Subtype::PlusOne,
            "2A" => Subtype::TwoA,
            "2B" => Subtype::TwoB,
            "3A" => Subtype::ThreeA,
            "3B" => Subtype::ThreeB,
            "3B'" => Subtype::ThreeBPrime,
            "3C" => Subtype::ThreeC,
            _ => {
                let t = s.strip_prefix("Other(")?.strip_suffix(')')?;
                Subtype::Other(t.parse().ok()?)
            }
        })
    }
}

impl fmt::Display for Subtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subtype::Free => write!(f, "Free"),
            Subtype::PlusOne => write!(f, "PlusOne"),
            Subtype::TwoA => write!(f, "2A"),
            Subtype::TwoB => write!(f, "2B"),
            Subtype::ThreeA => write!(f, "3A"),
            Subtype::ThreeB => write!(f, "3B"),
            Subtype::ThreeBPrime => write!(f, "3B'"),
            Subtype::ThreeC => write!(f, "3C"),
            Subtype::Other(t) => write!(f, "Other({t})"),
        }
    }
}

impl Serialize for Subtype {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The subtype read off from `(m, ε)` alone, ignoring the type.
pub fn subtype_from_shape(m: usize, eps: &[i64]) -> Option<Subtype> {
    Some(match (m, eps) {
        (3, [3]) => Subtype::ThreeA,
        (4, [2, 1]) => Subtype::ThreeB,
        (4, [1, 2]) => Subtype::ThreeBPrime,
        (5, [1, 1, 1]) => Subtype::ThreeC,
        _ => return None,
    })
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub type_t: i64,
    pub subtype: Subtype,
    /// Set when the data contradict the classification of type-three curves.
    pub inconsistency: Option<String>,
}

pub fn classify(s: &SyzygySummary) -> Classification {
    let t = s.type_t();
    let shape = subtype_from_shape(s.m, &s.epsilons);
    let mut inconsistency = None;
    let subtype = match t {
        0 => Subtype::Free,
        1 => Subtype::PlusOne,
        2 => match (s.m, s.epsilons.as_slice()) {
            (3, [2]) => Subtype::TwoA,
            (4, [1, 1]) => Subtype::TwoB,
            _ => Subtype::Other(2),
        },
        3 => match shape {
            Some(tag) => {
                if tag == Subtype::ThreeB && s.exponents[2] >= s.exponents[3] {
                    inconsistency = Some(format!("type 3B with d_3 = {} not below d_4 = {}", s.exponents[2], s.exponents[3]));
                }
                tag
            }
            None => {
                inconsistency = Some(format!("type 3 with m = {} and shifts {:?} fits no subtype", s.m, s.epsilons));
                Subtype::Other(3)
            }
        },
        _ => Subtype::Other(t),
    };
    if t != 3 {
        if let Some(tag) = shape {
            inconsistency = Some(format!("shape of subtype {tag} but type {t}"));
        }
    }
    Classification { type_t: t, subtype, inconsistency }
}

/// Tjurina number predicted by the exponents for each type-three subtype.
pub fn tau_formula(subtype: Subtype, e: &[u32]) -> Option<i64> {
    let e: Vec<i64> = e.iter().map(|v| *v as i64).collect();
    let q = |d1: i64, d2: i64| d1 * d1 + d1 * d2 + d2 * d2 - 3 * d1 - 3 * d2;
    Some(match subtype {
        Subtype::ThreeA => q(e[0], e[1]) - 3 * e[2],
        Subtype::ThreeB => q(e[0], e[1]) - 2 * e[2] - e[3] + 2,
        Subtype::ThreeBPrime => q(e[0], e[1]) - e[2] - 2 * e[3] + 2,
        Subtype::ThreeC => q(e[0], e[1]) - e[2] - e[3] - e[4] + 3,
        _ => return None,
    })
}

/// Freeness defect predicted by the exponents for each type-three subtype,
/// returned with the lower bound that accompanies it.
pub fn nu_formula(subtype: Subtype, e: &[u32]) -> Option<(i64, i64)> {
    let e: Vec<i64> = e.iter().map(|v| *v as i64).collect();
    // which of the three branches: d_1 <= d_2 - 2, d_1 = d_2 - 1, d_1 = d_2
    let branch = (e[0] - e[1] + 2).clamp(0, 2);
    let (body, constants) = match subtype {
        Subtype::ThreeA => (3 * (e[2] - e[1]), [9, 8, 7]),
        Subtype::ThreeB => (2 * e[2] + e[3] - 3 * e[1], [7, 6, 5]),
        Subtype::ThreeBPrime => (e[2] + 2 * e[3] - 3 * e[1], [7, 6, 5]),
        Subtype::ThreeC => (e[2] + e[3] + e[4] - 3 * e[1], [6, 5, 4]),
        _ => return None,
    };
    let c = constants[branch as usize];
    Some((body + c, c))
}

/// Freeness defect from `d`, `d_1` and `τ` alone.
pub fn nu_from_tau(d: i64, d1: i64, tau: i64) -> i64 {
    if 2 * d1 <= d - 1 {
        (d - 1) * (d - 1) - d1 * (d - 1 - d1) - tau
    } else {
        // ceil(3 (d-1)^2 / 4)
        (3 * (d - 1) * (d - 1) + 3) / 4 - tau
    }
}

/// The du Plessis–Wall bounds on the Tjurina number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DpwBounds {
    pub tau_min: i64,
    pub tau_max: i64,
    /// Present when `d_1 ≥ d/2`.
    pub tau_max_strong: Option<i64>,
}

impl DpwBounds {
    /// The upper bound that applies (the strong one when present).
    pub fn upper(&self) -> i64 {
        self.tau_max_strong.unwrap_or(self.tau_max)
    }
}

fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

pub fn dpw_bounds(d: i64, d1: i64) -> DpwBounds {
    let tau_min = (d - 1) * (d - d1 - 1);
    let tau_max = (d - 1) * (d - 1) - d1 * (d - d1 - 1);
    let tau_max_strong = (2 * d1 >= d).then(|| tau_max - binom2(2 * d1 + 2 - d));
    DpwBounds { tau_min, tau_max, tau_max_strong }
}

/// Both sides of the minimal-Tjurina characterization.
pub fn minimal_tjurina_sides(s: &SyzygySummary, tau: i64) -> (bool, bool) {
    let d = s.d as i64;
    let lhs = tau == dpw_bounds(d, s.exponents[0] as i64).tau_min;
    let rhs = s.m == 3 && s.exponents[1] as i64 == d - 1 && s.exponents[2] as i64 == d - 1;
    (lhs, rhs)
}

/// Whether the curve attains the strong upper bound (needs `d_1 ≥ d/2`).
pub fn is_maximal_tjurina(s: &SyzygySummary, tau: i64) -> bool {
    let b = dpw_bounds(s.d as i64, s.exponents[0] as i64);
    b.tau_max_strong == Some(tau)
}

/// Both sides of the equivalence between "3C with five equal exponents" and
/// "maximal Tjurina with `2 d_1 = d + 2`".
pub fn maximal_tjurina_sides(s: &SyzygySummary, subtype: Subtype, tau: i64) -> (bool, bool) {
    let lhs = subtype == Subtype::ThreeC && s.exponents.iter().all(|e| *e == s.exponents[0]);
    let rhs = is_maximal_tjurina(s, tau) && 2 * s.exponents[0] as i64 == s.d as i64 + 2;
    (lhs, rhs)
}
