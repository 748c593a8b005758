use super::homogeneous::HomogeneousPoly;
use super::monomial::MonomialBasis;
use crate::arith::{DenseMatrix, Rational};

/// Matrix of `h -> g*h` from degree `k` to degree `k + deg g` in monomial bases.
/// Columns follow `MonomialBasis::new(k)`, rows `MonomialBasis::new(k + deg g)`.
pub fn multiplication_matrix(g: &HomogeneousPoly, k: u32) -> DenseMatrix<Rational> {
    let src = MonomialBasis::new(k as i64);
    let rows = MonomialBasis::new((k + g.degree()) as i64).len();
    let mut m = DenseMatrix::zeros(rows, src.len());
    for (j, h) in src.monomials().iter().enumerate() {
        for (t, c) in g.terms() {
            m.set(t.mul(h).index(), j, c.clone());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, Field};
    use crate::poly::parse_poly;

    #[test]
    fn identity_for_one() {
        let one = parse_poly("1").unwrap();
        for k in 0..5 {
            assert_eq!(multiplication_matrix(&one, k), DenseMatrix::identity(MonomialBasis::new(k as i64).len()));
        }
    }

    #[test]
    fn times_x_in_degree_zero() {
        let m = multiplication_matrix(&parse_poly("x").unwrap(), 0);
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert_eq!(m.get(0, 0), &rational(1));
        assert!(m.get(1, 0).is_zero() && m.get(2, 0).is_zero());
    }

    #[test]
    fn cube_is_injective() {
        let m = multiplication_matrix(&parse_poly("x^3").unwrap(), 1);
        assert_eq!((m.rows(), m.cols()), (15, 3));
        assert_eq!(m.rank(), 3);
    }
}
