//! Seeded constructions of curves described only up to a generic choice.
//! Every random choice is verified and redrawn from the same stream on failure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{rational, Rational};
use crate::error::{Error, Result};
use crate::invariants::tjurina;
use crate::poly::{parse_poly, HomogeneousPoly, Monomial, MonomialBasis};

use super::{cross, LineArrangement, Point};

/// Attempts per construction before giving up.
pub const MAX_RETRIES: usize = 32;

/// Bound on the absolute value of random integer coefficients.
pub const COEFF_BOUND: i64 = 97;

fn draw(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)
}

fn linear_form(c: &[Rational; 3]) -> HomogeneousPoly {
    let terms = (0..3).map(|i| (Monomial::var(i), c[i].clone()));
    HomogeneousPoly::from_terms(1, terms).expect("degree one terms")
}

/// Integer vector divided by the gcd of its entries.
fn primitive(v: [Rational; 3]) -> [Rational; 3] {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c.numer()));
    if g.is_zero() {
        return v;
    }
    v.map(|c| Rational::from_integer(c.numer() / &g))
}

/// A line `a x + b y + c z` with coefficients in `[-97, 97]`, not all zero.
pub fn random_line(rng: &mut ChaCha8Rng) -> HomogeneousPoly {
    loop {
        let c = [draw(rng), draw(rng), draw(rng)];
        if c.iter().any(|v| *v != 0) {
            return linear_form(&c.map(rational));
        }
    }
}

// univariate polynomials over Q, lowest degree first

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn umul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn urem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let q = r.last().unwrap() / lead;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r = trim(r);
    }
    r
}

fn ugcd_degree(a: &[Rational], b: &[Rational]) -> usize {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = urem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    p.iter().enumerate().skip(1).map(|(i, c)| c * rational(i as i64)).collect()
}

/// `f(p_0(t), p_1(t), p_2(t))`.
fn substitute(f: &HomogeneousPoly, param: &[Vec<Rational>; 3]) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for (m, c) in f.terms() {
        let mut term = vec![c.clone()];
        for (v, e) in m.0.iter().enumerate() {
            for _ in 0..*e {
                term = umul(&term, &param[v]);
            }
        }
        if out.len() < term.len() {
            out.resize(term.len(), Rational::zero());
        }
        for (i, t) in term.into_iter().enumerate() {
            out[i] += t;
        }
    }
    trim(out)
}

/// Whether `g` has exactly `n` distinct simple roots in the affine chart.
fn simple_roots(g: &[Rational], n: usize) -> bool {
    g.len() == n + 1 && ugcd_degree(g, &derivative(g)) == 0
}

/// A line meeting `f` transversally in `deg f` points, none of them singular on `f`.
pub fn generic_line(f: &HomogeneousPoly, rng: &mut ChaCha8Rng) -> Result<HomogeneousPoly> {
    let d = f.degree() as usize;
    for _ in 0..MAX_RETRIES {
        // the line through two random points P, Q, parametrized as P + t Q
        let p = [draw(rng), draw(rng), draw(rng)].map(rational);
        let q = [draw(rng), draw(rng), draw(rng)].map(rational);
        let coeffs = primitive(cross(&p, &q));
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let param = [0, 1, 2].map(|i| vec![p[i].clone(), q[i].clone()]);
        // degree d in t means Q is off the curve; simple roots then cover every intersection
        if simple_roots(&substitute(f, &param), d) {
            return Ok(linear_form(&coeffs));
        }
    }
    Err(Error::Internal(format!("no transversal line for {f} after {MAX_RETRIES} attempts")))
}

/// The curve `f` together with a generic line, and that line.
pub fn line_times_curve(f: &HomogeneousPoly, rng: &mut ChaCha8Rng) -> Result<(HomogeneousPoly, HomogeneousPoly)> {
    let l = generic_line(f, rng)?;
    Ok((l.mul(f), l))
}

/// Nodal cubic `y^2 z - x^3 - x^2 z` times a smooth conic meeting it in six
/// distinct points away from the node.
pub fn nodal_cubic_times_conic(rng: &mut ChaCha8Rng) -> Result<(HomogeneousPoly, HomogeneousPoly)> {
    let cubic = parse_poly("y^2*z-x^3-x^2*z")?;
    // lines through the node (0:0:1) give (t^2-1, t(t^2-1), 1)
    let one = Rational::one();
    let param = [
        vec![-one.clone(), Rational::zero(), one.clone()],
        vec![Rational::zero(), -one.clone(), Rational::zero(), one.clone()],
        vec![one],
    ];
    let quadrics = MonomialBasis::new(2);
    for _ in 0..MAX_RETRIES {
        let coeffs: Vec<i64> = (0..quadrics.len()).map(|_| draw(rng)).collect();
        let conic =
            HomogeneousPoly::from_terms(2, quadrics.monomials().iter().zip(&coeffs).map(|(m, c)| (*m, rational(*c))))?;
        if conic.is_zero() || conic.coeff(&Monomial::new(0, 0, 2)).is_zero() || conic_det(&conic).is_zero() {
            continue;
        }
        // the point at infinity (0:1:0) of the cubic is t = ∞, so degree 6 keeps it off the conic
        if simple_roots(&substitute(&conic, &param), 6) {
            return Ok((cubic.mul(&conic), conic));
        }
    }
    Err(Error::Internal(format!("no transversal conic after {MAX_RETRIES} attempts")))
}

/// Determinant of the symmetric matrix of a ternary quadric, up to a factor 8.
fn conic_det(q: &HomogeneousPoly) -> Rational {
    let c = |a, b, e| q.coeff(&Monomial::new(a, b, e));
    let two = rational(2);
    let m = [
        [&c(2, 0, 0) * &two, c(1, 1, 0), c(1, 0, 1)],
        [c(1, 1, 0), &c(0, 2, 0) * &two, c(0, 1, 1)],
        [c(1, 0, 1), c(0, 1, 1), &c(0, 0, 2) * &two],
    ];
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// A quartic with random coefficients in `[-97, 97]` and Tjurina number 0.
pub fn random_smooth_quartic(rng: &mut ChaCha8Rng) -> Result<HomogeneousPoly> {
    let basis = MonomialBasis::new(4);
    for _ in 0..MAX_RETRIES {
        let f = HomogeneousPoly::from_terms(4, basis.monomials().iter().map(|m| (*m, rational(draw(rng)))))?;
        if !f.is_zero() && f.degree() == 4 && matches!(tjurina(&f), Ok(0)) {
            return Ok(f);
        }
    }
    Err(Error::Internal(format!("no smooth quartic after {MAX_RETRIES} attempts")))
}

/// `τ` of `n1` concurrent lines together with `n2` other concurrent lines.
pub fn two_pencils_base_tau(n1: usize, n2: usize) -> i64 {
    let (a, b) = (n1 as i64, n2 as i64);
    (a - 1).pow(2) + (b - 1).pow(2) + a * b
}

/// `n1` lines `y + k x` through `(0:0:1)`, `n2` lines `z + k x` through
/// `(0:1:0)`, and two random lines in general position with respect to them.
pub fn build_two_pencils(n1: usize, n2: usize, rng: &mut ChaCha8Rng) -> Result<LineArrangement> {
    if !(2 <= n1 && n1 <= n2) {
        return Err(Error::Input(format!("need 2 <= n1 <= n2, got ({n1}, {n2})")));
    }
    let mut lines = Vec::new();
    for k in 1..=n1 as i64 {
        lines.push(parse_poly(&format!("y+{k}*x"))?);
    }
    for k in 1..=n2 as i64 {
        lines.push(parse_poly(&format!("z+{k}*x"))?);
    }
    let base = LineArrangement::new(lines)?;
    let a1: Point = [0, 0, 1].map(rational);
    let a2: Point = [0, 1, 0].map(rational);
    let expected_double = n1 * n2 + 2 * (n1 + n2) + 1;
    for _ in 0..MAX_RETRIES {
        let Ok(a) = base.with_line(random_line(rng)).and_then(|a| a.with_line(random_line(rng))) else { continue };
        let comb = a.combinatorics();
        let ok = comb.points.iter().all(|p| {
            let want = if p.point == a1 {
                n1
            } else if p.point == a2 {
                n2
            } else {
                2
            };
            p.multiplicity() == want
        }) && comb.points.len() == expected_double + 2;
        if ok {
            return Ok(a);
        }
    }
    Err(Error::Internal(format!("two generic lines for pencils ({n1}, {n2}) not found after {MAX_RETRIES} attempts")))
}

/// Variants of `x^j y^j + y^j z^j + x^j z^j` multiplied by coordinate lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetricVariant {
    Plain,
    X,
    XY,
    XYZ,
}

impl SymmetricVariant {
    pub fn factor(self) -> &'static str {
        match self {
            SymmetricVariant::Plain => "1",
            SymmetricVariant::X => "x",
            SymmetricVariant::XY => "x*y",
            SymmetricVariant::XYZ => "x*y*z",
        }
    }
}

pub fn symmetric_family(j: u32, variant: SymmetricVariant) -> Result<HomogeneousPoly> {
    if j < 3 {
        return Err(Error::Input(format!("symmetric family needs j >= 3, got {j}")));
    }
    let text = match variant {
        SymmetricVariant::Plain => format!("x^{j}*y^{j}+y^{j}*z^{j}+x^{j}*z^{j}"),
        v => format!("{}*(x^{j}*y^{j}+y^{j}*z^{j}+x^{j}*z^{j})", v.factor()),
    };
    parse_poly(&text)
}
