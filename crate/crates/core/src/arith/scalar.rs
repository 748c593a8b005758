//! Scalar types: arbitrary-precision rationals and residues modulo a fixed prime.
//!
//! Two traits live here. [`Field`] is the user-facing arithmetic used by
//! [`DenseMatrix`](super::DenseMatrix). [`Domain`] is what the sparse
//! elimination kernel runs on: for the rationals that is the integers, with
//! fraction-free updates and content removal, and for the prime field it is the
//! field itself with monic pivots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The working prime `2^31 - 1`.
pub const PRIME: u64 = 2_147_483_647;

/// Exact rational numbers. `BigRational` keeps itself reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A residue class modulo [`PRIME`], stored in `[0, PRIME)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % PRIME)
    }

    pub fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(PRIME as i64) as u64)
    }

    pub fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(PRIME));
        Fp(r.to_u64().expect("residue fits in u64"))
    }

    /// Reduces a rational number; fails when the denominator vanishes modulo the prime.
    pub fn from_rational(q: &Rational) -> Result<Self> {
        let den = Fp::from_bigint(q.denom());
        if den.0 == 0 {
            return Err(Error::BadDenominator(q.denom().to_string()));
        }
        Ok(Fp::from_bigint(q.numer()).mul(den.inv().expect("nonzero")))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= PRIME { s - PRIME } else { s })
    }

    pub fn sub(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + PRIME - o.0 })
    }

    pub fn mul(self, o: Fp) -> Fp {
        Fp(self.0 * o.0 % PRIME)
    }

    pub fn neg(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { PRIME - self.0 })
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Fp> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(PRIME - 2))
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Ring of row entries for the sparse elimination kernel.
pub trait Domain: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_bigint(v: &BigInt) -> Self;

    /// Multipliers `(s, t)` such that `s * entry - t * pivot == 0`.
    fn cancel_factors(pivot: &Self, entry: &Self) -> (Self, Self);

    /// Brings a nonempty row to canonical scale: primitive with positive lead over
    /// the integers, monic over a field.
    fn normalize(row: &mut [(usize, Self)]);

    /// Converts a rational row into a row over this domain that spans the same line.
    fn scale_rational_row(row: &[(usize, Rational)]) -> Result<Vec<(usize, Self)>>;

    /// Kernel vector of a reduced system for one free column. `hits` lists
    /// `(pivot_column, pivot_value, entry_in_free_column)` for every row with a
    /// nonzero entry in `free`.
    fn kernel_vector(hits: &[(usize, Self, Self)], free: usize) -> Vec<(usize, Self)>;

    /// A rational representative, used for reporting.
    fn to_rational(&self) -> Rational;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }

    fn cancel_factors(pivot: &Self, entry: &Self) -> (Self, Self) {
        let g = pivot.gcd(entry);
        (pivot / &g, entry / &g)
    }

    fn normalize(row: &mut [(usize, Self)]) {
        if row.is_empty() {
            return;
        }
        let mut g = BigInt::from(0);
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if One::is_one(&g) {
                break;
            }
        }
        if row[0].1.is_negative() {
            g = -g;
        }
        if !One::is_one(&g) {
            for (_, v) in row.iter_mut() {
                *v = &*v / &g;
            }
        }
    }

    fn scale_rational_row(row: &[(usize, Rational)]) -> Result<Vec<(usize, Self)>> {
        let mut l = BigInt::from(1);
        for (_, q) in row {
            l = l.lcm(q.denom());
        }
        Ok(row
            .iter()
            .filter(|(_, q)| !Zero::is_zero(q))
            .map(|(i, q)| (*i, q.numer() * (&l / q.denom())))
            .collect())
    }

    fn kernel_vector(hits: &[(usize, Self, Self)], free: usize) -> Vec<(usize, Self)> {
        let mut l = BigInt::from(1);
        for (_, a, _) in hits {
            l = l.lcm(a);
        }
        let mut v: Vec<(usize, BigInt)> = hits
            .iter()
            .map(|(p, a, e)| (*p, -(e * (&l / a))))
            .collect();
        v.push((free, l));
        v.sort_by_key(|e| e.0);
        // primitive, with the free coordinate positive
        let mut g = BigInt::from(0);
        for (_, x) in &v {
            g = g.gcd(x);
        }
        if !One::is_one(&g) {
            for (_, x) in v.iter_mut() {
                *x = &*x / &g;
            }
        }
        v
    }

    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }
}

impl Domain for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn from_bigint(v: &BigInt) -> Self {
        Fp::from_bigint(v)
    }

    fn cancel_factors(pivot: &Self, entry: &Self) -> (Self, Self) {
        if pivot.0 == 1 {
            (Fp(1), *entry)
        } else {
            (Fp(1), Fp::mul(*entry, pivot.inv().expect("pivot is nonzero")))
        }
    }

    fn normalize(row: &mut [(usize, Self)]) {
        if let Some((_, lead)) = row.first() {
            if lead.0 != 1 {
                let inv = lead.inv().expect("lead is nonzero");
                for (_, v) in row.iter_mut() {
                    *v = v.mul(inv);
                }
            }
        }
    }

    fn scale_rational_row(row: &[(usize, Rational)]) -> Result<Vec<(usize, Self)>> {
        let mut out = Vec::with_capacity(row.len());
        for (i, q) in row {
            let v = Fp::from_rational(q)?;
            if v.0 != 0 {
                out.push((*i, v));
            }
        }
        Ok(out)
    }

    fn kernel_vector(hits: &[(usize, Self, Self)], free: usize) -> Vec<(usize, Self)> {
        let mut v: Vec<(usize, Fp)> = hits
            .iter()
            .map(|(p, a, e)| (*p, Fp::neg(Fp::mul(*e, a.inv().expect("pivot is nonzero")))))
            .collect();
        v.push((free, Fp(1)));
        v.sort_by_key(|e| e.0);
        v
    }

    fn to_rational(&self) -> Rational {
        rational(self.0 as i64)
    }
}

/// Field arithmetic for dense matrices.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Domain: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;

    fn to_domain_row(row: &[(usize, Self)]) -> Vec<(usize, Self::Domain)>;
    fn from_domain(v: &Self::Domain) -> Self;
}

impl Field for Rational {
    type Domain = BigInt;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        rational(v)
    }

    fn to_domain_row(row: &[(usize, Self)]) -> Vec<(usize, BigInt)> {
        BigInt::scale_rational_row(row).expect("integer scaling cannot fail")
    }
    fn from_domain(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
}

impl Field for Fp {
    type Domain = Fp;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn inv(&self) -> Option<Self> {
        Fp::inv(*self)
    }
    fn from_i64(v: i64) -> Self {
        Fp::from_i64(v)
    }

    fn to_domain_row(row: &[(usize, Self)]) -> Vec<(usize, Fp)> {
        row.iter().filter(|(_, v)| v.0 != 0).cloned().collect()
    }
    fn from_domain(v: &Fp) -> Self {
        *v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        for v in [1u64, 2, 3, 12345, PRIME - 1] {
            let a = Fp::new(v);
            assert_eq!(a.mul(a.inv().unwrap()), Fp(1));
        }
        assert!(Fp::new(PRIME).inv().is_none());
    }

    #[test]
    fn residues_stay_in_range() {
        assert_eq!(Fp::from_i64(-1).value(), PRIME - 1);
        assert_eq!(Fp::new(PRIME + 5).value(), 5);
        let q = Rational::new(BigInt::from(7), BigInt::from(2));
        let r = Fp::from_rational(&q).unwrap();
        assert_eq!(r.mul(Fp(2)), Fp(7));
    }

    #[test]
    fn denominator_divisible_by_prime_is_rejected() {
        let q = Rational::new(BigInt::from(1), BigInt::from(PRIME));
        assert!(matches!(Fp::from_rational(&q), Err(Error::BadDenominator(_))));
    }

    #[test]
    fn rationals_are_normalized() {
        let q = Rational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn integer_row_normalization_is_primitive() {
        let mut row = vec![(0, BigInt::from(-6)), (3, BigInt::from(9))];
        BigInt::normalize(&mut row);
        assert_eq!(row, vec![(0, BigInt::from(2)), (3, BigInt::from(-3))]);
    }
}
