use jacsyz::arith::rational;
use jacsyz::arrangements::LineArrangement;
use jacsyz::invariants::{analyze, tjurina, AnalyzeOptions, FieldMode};
use jacsyz::poly::{parse_poly, HomogeneousPoly, Monomial, MonomialBasis};
use jacsyz::syzygy::{certified_syzygies, exponents};
use proptest::prelude::*;

fn form(d: u32, coeffs: &[i64]) -> HomogeneousPoly {
    let basis = MonomialBasis::new(d as i64);
    HomogeneousPoly::from_terms(d, basis.monomials().iter().zip(coeffs).map(|(m, c)| (*m, rational(*c)))).unwrap()
}

fn coeffs(d: u32, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    let n = MonomialBasis::new(d as i64).len();
    prop::collection::vec(-bound..=bound, n)
}

fn lines(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec([-6i64..=6, -6i64..=6, -6i64..=6], n)
}

fn arrangement(raw: &[[i64; 3]]) -> Option<LineArrangement> {
    let ls = raw.iter().map(|c| form(1, &[c[0], c[1], c[2]])).collect();
    LineArrangement::new(ls).ok()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn display_round_trips(c in coeffs(4, 20)) {
        let f = form(4, &c);
        if !f.is_zero() {
            prop_assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn euler_identity(c in coeffs(5, 9)) {
        let f = form(5, &c);
        let j = f.jacobian();
        let lhs = (0..3).fold(HomogeneousPoly::zero(5), |acc, i| acc.add(&HomogeneousPoly::var(i).mul(&j[i])));
        prop_assert_eq!(lhs, f.scale(&rational(5)));
    }

    #[test]
    fn pair_count_identity(raw in lines(3..=9)) {
        if let Some(a) = arrangement(&raw) {
            let c = a.combinatorics();
            prop_assert!(c.pairs_consistent);
            let n = a.len();
            let pairs: usize = c.points.iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum();
            prop_assert_eq!(pairs, n * (n - 1) / 2);
            let from_counts: i64 = c.counts.iter().map(|(k, v)| (*k as i64 - 1).pow(2) * *v as i64).sum();
            prop_assert_eq!(from_counts, c.tau);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    // elimination against the point census
    #[test]
    fn arrangement_tau_is_combinatorial(raw in lines(4..=6)) {
        if let Some(a) = arrangement(&raw) {
            let c = a.combinatorics();
            prop_assert_eq!(tjurina(&a.polynomial()).unwrap() as i64, c.tau);
        }
    }

    #[test]
    fn generators_are_syzygies(c in coeffs(4, 4)) {
        let f = form(4, &c);
        if f.degree() == 4 && tjurina(&f).is_ok() {
            let s = exponents(&f).unwrap();
            let j = f.jacobian();
            for g in &s.generators {
                let total = (0..3).fold(HomogeneousPoly::zero(g.degree + 3), |acc, i| acc.add(&g.components[i].mul(&j[i])));
                prop_assert!(total.is_zero());
            }
            prop_assert_eq!(s.exponents.len(), s.relation_degrees.len() + 2);
        }
    }

    // modular elimination with rational certificates against plain rational elimination
    #[test]
    fn prime_and_rational_routes_agree(c in coeffs(4, 3), l in [-3i64..=3, -3i64..=3, -3i64..=3]) {
        let f = form(4, &c).mul(&form(1, &l));
        if f.is_zero() {
            return Ok(());
        }
        let q = analyze("q", &f, AnalyzeOptions { field: FieldMode::Rational, timings: false });
        let p = analyze("p", &f, AnalyzeOptions { field: FieldMode::Prime, timings: false });
        match (q, p) {
            (Ok(q), Ok(p)) => {
                prop_assert_eq!(&q.syzygy.exponents, &p.syzygy.exponents);
                prop_assert_eq!(&q.syzygy.relation_degrees, &p.syzygy.relation_degrees);
                prop_assert_eq!(q.tau, p.tau);
                prop_assert_eq!(&q.hilbert_m, &p.hilbert_m);
                prop_assert_eq!(&q.n_table, &p.n_table);
                prop_assert_eq!(q.subtype, p.subtype);
                let c = certified_syzygies(&f).unwrap();
                prop_assert_eq!(&c.summary.generators, &q.syzygy.generators);
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.exit_code(), b.exit_code()),
            (a, b) => prop_assert!(false, "routes disagree: {:?} vs {:?}", a.map(|r| r.tau), b.map(|r| r.tau)),
        }
    }
}

#[test]
fn monomial_var_is_degree_one() {
    for i in 0..3 {
        assert_eq!(Monomial::var(i).degree(), 1);
    }
}
