use std::cmp::Ordering;
use std::fmt;

/// Exponent triple `x^a y^b z^c`.
///
/// Ordered graded-lexicographically with `x > y > z`: higher degree first
/// compares greater, then the larger `x` exponent, then the larger `y` exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if (0..3).all(|i| self.0[i] >= o.0[i]) {
            Some(Monomial([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]]))
        } else {
            None
        }
    }

    /// Position inside the degree-`deg` basis, which lists monomials from
    /// `x^deg` down to `z^deg`.
    pub fn index(&self) -> usize {
        let k = self.degree() as usize;
        let (a, b) = (self.0[0] as usize, self.0[1] as usize);
        let rest = k - a;
        rest * (rest + 1) / 2 + (rest - b)
    }

    /// Inverse of [`Monomial::index`] in degree `k`.
    pub fn from_index(k: u32, i: usize) -> Monomial {
        let mut rest = 0usize;
        while (rest + 1) * (rest + 2) / 2 <= i {
            rest += 1;
        }
        let b = rest - (i - rest * (rest + 1) / 2);
        let a = k as usize - rest;
        Monomial([a as u32, b as u32, (rest - b) as u32])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[0].cmp(&other.0[0]))
            .then(self.0[1].cmp(&other.0[1]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, name) in ["x", "y", "z"].iter().enumerate() {
            let e = self.0[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// `dim S_k = (k+2)(k+1)/2`, and zero in negative degrees.
pub fn dim_s(k: i64) -> usize {
    if k < 0 {
        0
    } else {
        let k = k as usize;
        (k + 2) * (k + 1) / 2
    }
}

/// The monomials of one degree in basis order (descending graded-lex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    degree: i64,
    monomials: Vec<Monomial>,
}

impl MonomialBasis {
    pub fn new(degree: i64) -> Self {
        let mut monomials = Vec::with_capacity(dim_s(degree));
        if degree >= 0 {
            let k = degree as u32;
            for a in (0..=k).rev() {
                for b in (0..=k - a).rev() {
                    monomials.push(Monomial([a, b, k - a - b]));
                }
            }
        }
        MonomialBasis { degree, monomials }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> Monomial {
        self.monomials[i]
    }
}
