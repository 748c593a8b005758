use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialBasis};
use crate::arith::{Domain, Rational};
use crate::error::{Error, Result};

/// A homogeneous polynomial in `x, y, z` with rational coefficients.
///
/// The zero polynomial still carries a degree, so partial derivatives of a
/// form of degree `d` are always forms of degree `d - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPoly {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPoly { degree, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.degree());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), Rational::one())
    }

    /// Builds a form from terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::NonHomogeneous { first: degree, second: m.degree() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Integer coefficients, e.g. `from_i64(2, &[((1, 1, 0), 3)])` is `3*x*y`.
    pub fn from_i64(degree: u32, terms: &[((u32, u32, u32), i64)]) -> Result<Self> {
        Self::from_terms(
            degree,
            terms.iter().map(|((a, b, c), v)| (Monomial::new(*a, *b, *c), Rational::from_integer((*v).into()))),
        )
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_same_degree(&self, o: &Self) {
        assert!(
            self.degree == o.degree || self.is_zero() || o.is_zero(),
            "adding forms of degrees {} and {}",
            self.degree,
            o.degree
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_same_degree(o);
        if self.is_zero() {
            return o.clone();
        }
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        HomogeneousPoly { degree: self.degree, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.degree + o.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(Monomial::ONE, Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative in variable `i` (0 = x, 1 = y, 2 = z).
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut n = *m;
                n.0[i] -= 1;
                out.add_term(n, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    pub fn jacobian(&self) -> [HomogeneousPoly; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..3 {
                for _ in 0..m.0[i] {
                    t *= &p[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficient vector in the degree basis (descending monomial order).
    pub fn to_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); MonomialBasis::new(self.degree as i64).len()];
        for (m, c) in &self.terms {
            v[m.index()] = c.clone();
        }
        v
    }

    pub fn from_vector(degree: u32, v: &[Rational]) -> Self {
        let basis = MonomialBasis::new(degree as i64);
        let mut p = Self::zero(degree);
        for (i, c) in v.iter().enumerate() {
            p.add_term(basis.get(i), c.clone());
        }
        p
    }

    /// The positive primitive integer multiple of this form: denominators cleared,
    /// content removed, leading coefficient positive.
    pub fn primitive_integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let mut l = BigInt::from(1);
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let mut out: Vec<(Monomial, BigInt)> =
            self.terms.iter().rev().map(|(m, c)| (*m, c.numer() * (&l / c.denom()))).collect();
        let mut g = BigInt::from(0);
        for (_, v) in &out {
            g = g.gcd(v);
        }
        if let Some((_, lead)) = out.first() {
            if lead.is_negative() {
                g = -g;
            }
        }
        if !Zero::is_zero(&g) {
            for (_, v) in out.iter_mut() {
                *v = &*v / &g;
            }
        }
        out
    }

    /// Coefficients mapped into an elimination domain, after clearing denominators.
    pub fn domain_terms<D: Domain>(&self) -> Vec<(Monomial, D)> {
        self.primitive_integer_terms()
            .into_iter()
            .map(|(m, v)| (m, D::from_bigint(&v)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational, first: bool, constant: bool) -> fmt::Result {
    let neg = c.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    let a = c.abs();
    if constant {
        return write!(f, "{a}");
    }
    if !a.is_one() {
        write!(f, "{a}*")?;
    }
    Ok(())
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let constant = *m == Monomial::ONE;
            write_coeff(f, c, i == 0, constant)?;
            if !constant {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomogeneousPoly[{}]({})", self.degree, self)
    }
}

/// A syzygy `(a, b, c)` with `a f_x + b f_y + c f_z = 0`, all components of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyVector {
    pub degree: u32,
    pub components: [HomogeneousPoly; 3],
}

impl SyzygyVector {
    /// Checks the relation against the partials of `f` before accepting it.
    pub fn new(f: &HomogeneousPoly, components: [HomogeneousPoly; 3]) -> Result<Self> {
        let degree = components.iter().map(|c| c.degree()).max().unwrap_or(0);
        if components.iter().any(|c| c.degree() != degree && !c.is_zero()) {
            return Err(Error::Internal("syzygy components of different degrees".into()));
        }
        let j = f.jacobian();
        let total = (0..3).fold(HomogeneousPoly::zero(degree + f.degree().saturating_sub(1)), |acc, i| {
            acc.add(&components[i].mul(&j[i]))
        });
        if !total.is_zero() {
            return Err(Error::Internal(format!("({}, {}, {}) is not a syzygy", components[0], components[1], components[2])));
        }
        Ok(SyzygyVector { degree, components })
    }
}

impl fmt::Display for SyzygyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.components[0], self.components[1], self.components[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn fermat4() -> HomogeneousPoly {
        HomogeneousPoly::from_i64(4, &[((4, 0, 0), 1), ((0, 4, 0), 1), ((0, 0, 4), 1)]).unwrap()
    }

    #[test]
    fn jacobian_of_fermat() {
        let j = fermat4().jacobian();
        assert_eq!(j[0], HomogeneousPoly::from_i64(3, &[((3, 0, 0), 4)]).unwrap());
        assert_eq!(j[2], HomogeneousPoly::from_i64(3, &[((0, 0, 3), 4)]).unwrap());
    }

    #[test]
    fn jacobian_of_xyz() {
        let f = HomogeneousPoly::from_i64(3, &[((1, 1, 1), 1)]).unwrap();
        let j = f.jacobian();
        assert_eq!(j[0].to_string(), "y*z");
        assert_eq!(j[1].to_string(), "x*z");
        assert_eq!(j[2].to_string(), "x*y");
    }

    #[test]
    fn euler_identity() {
        let f = fermat4().add(&HomogeneousPoly::from_i64(4, &[((1, 2, 1), -3)]).unwrap());
        let j = f.jacobian();
        let e = (0..3).fold(HomogeneousPoly::zero(4), |acc, i| acc.add(&HomogeneousPoly::var(i).mul(&j[i])));
        assert_eq!(e, f.scale(&rational(4)));
    }

    #[test]
    fn display_signs_and_fractions() {
        let p = HomogeneousPoly::from_terms(
            2,
            [(Monomial::new(2, 0, 0), rational(-1)), (Monomial::new(0, 1, 1), Rational::new(7.into(), 2.into()))],
        )
        .unwrap();
        assert_eq!(p.to_string(), "-x^2 + 7/2*y*z");
        assert_eq!(HomogeneousPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn primitive_integer_form() {
        let p = HomogeneousPoly::from_terms(
            1,
            [(Monomial::new(1, 0, 0), Rational::new((-3).into(), 2.into())), (Monomial::new(0, 1, 0), rational(3))],
        )
        .unwrap();
        let t = p.primitive_integer_terms();
        assert_eq!(t, vec![(Monomial::new(1, 0, 0), BigInt::from(1)), (Monomial::new(0, 1, 0), BigInt::from(-2))]);
    }

    #[test]
    fn koszul_syzygy_is_accepted() {
        let f = fermat4();
        let j = f.jacobian();
        let s = SyzygyVector::new(&f, [j[1].clone(), j[0].neg(), HomogeneousPoly::zero(3)]).unwrap();
        assert_eq!(s.degree, 3);
        assert!(SyzygyVector::new(&f, [j[1].clone(), j[0].clone(), HomogeneousPoly::zero(3)]).is_err());
    }
}
