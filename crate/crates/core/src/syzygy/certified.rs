//! Modular elimination with rational certificates.
//!
//! Ranks can only drop modulo a prime. If the shifts of some integer syzygies
//! span, modulo `p`, a space as large as the modular kernel, then the rational
//! kernel has that same dimension and those syzygies span it. Exact elimination
//! is therefore only needed in the degrees where new generators appear, and
//! there the minimality count is done in the free-column coordinates of the
//! exact kernel, which are small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::arith::sparse::{Echelon, Rref, SparseRow};
use crate::arith::{Domain, Fp};
use crate::error::{Error, Result};
use crate::poly::{HomogeneousPoly, MonomialBasis};

use super::{
    assemble, hilbert_series_mismatches, syzygy_vectors, third_difference, GradedMap, JacobianRanks, ScanStep,
    SyzygyEngine, SyzygySummary,
};

/// Rationally certified syzygy data, computed mostly modulo the working prime.
pub struct CertifiedSyzygies {
    /// Exact exponents and generators; relation degrees from the Hilbert series.
    pub summary: SyzygySummary,
    /// Jacobian ranks, valid over the rationals.
    pub ranks: JacobianRanks,
    /// The modular computation that guided the exact one.
    pub modular: SyzygyEngine<Fp>,
    /// Exponents found by the purely modular scan.
    pub modular_exponents: Vec<u32>,
    /// Relation degrees found by the purely modular scan.
    pub modular_relation_degrees: Vec<u32>,
    /// Degrees where an exact kernel was computed.
    pub exact_degrees: Vec<i64>,
}

fn reduce(v: &[(usize, BigInt)]) -> SparseRow<Fp> {
    v.iter().map(|(c, x)| (*c, Fp::from_bigint(x))).filter(|(_, x)| !Domain::is_zero(x)).collect()
}

fn modular_span_rank(map: &GradedMap<Fp>, gens: &[(i64, SparseRow<Fp>)], k: i64) -> usize {
    let mut span = Echelon::new(map.source_dim(k));
    for (e, g) in gens {
        for u in MonomialBasis::new(k - e).monomials() {
            let row = map.shift(g, *e, u);
            if !row.is_empty() {
                span.insert(row);
            }
        }
    }
    span.rank()
}

pub fn certified_syzygies(f: &HomogeneousPoly) -> Result<CertifiedSyzygies> {
    let modular = SyzygyEngine::<Fp>::new(f)?;
    let d = f.degree() as i64;
    let p_gens = modular.generator_scan()?;
    let p_rels = modular.relation_scan(&p_gens)?;
    let exact_map: GradedMap<BigInt> = GradedMap::jacobian(f);

    // degrees where the modular scan saw new generators; computed up front in parallel
    let candidates: Vec<i64> = p_gens.steps.iter().filter(|s| s.new_generators > 0).map(|s| s.degree).collect();
    let mut prefetched: BTreeMap<i64, Rref<BigInt>> =
        candidates.par_iter().map(|k| (*k, exact_map.rref(*k))).collect::<Vec<_>>().into_iter().collect();

    let top = modular.ranks().top();
    let scan_top = 2 * d - 3;
    let ranks = modular.ranks().clone();
    let mut gens: Vec<(i64, SparseRow<BigInt>)> = Vec::new();
    let mut reduced: Vec<(i64, SparseRow<Fp>)> = Vec::new();
    let mut steps = Vec::new();
    let mut exact_degrees = Vec::new();
    for k in 0..=top {
        let n_p = ranks.d0_dim(k);
        if modular_span_rank(modular.map(), &reduced, k) == n_p {
            if k <= scan_top {
                steps.push(ScanStep { degree: k, kernel_dim: n_p, generated_dim: n_p, new_generators: 0 });
            }
            continue;
        }
        if k > scan_top {
            return Err(Error::Internal(format!("syzygies of degree at most 2d-4 do not span D_0(f) in degree {k}")));
        }
        let rref = prefetched.remove(&k).unwrap_or_else(|| exact_map.rref(k));
        exact_degrees.push(k);
        let kernel = rref.kernel_basis();
        if kernel.len() != n_p {
            return Err(Error::Internal(format!(
                "dim D_0(f)_{k} is {} over the rationals but {n_p} modulo the prime",
                kernel.len()
            )));
        }
        // a kernel element is determined by its free coordinates
        let free: Vec<usize> = (0..rref.ncols).filter(|c| rref.pivots.binary_search(c).is_err()).collect();
        let project = |row: &[(usize, BigInt)]| -> SparseRow<BigInt> {
            row.iter().filter_map(|(c, v)| free.binary_search(c).ok().map(|i| (i, v.clone()))).collect()
        };
        let mut span = Echelon::new(free.len());
        for (e, g) in &gens {
            for u in MonomialBasis::new(k - e).monomials() {
                let row = project(&exact_map.shift(g, *e, u));
                if !row.is_empty() {
                    span.insert(row);
                }
            }
        }
        let generated_dim = span.rank();
        let mut new_generators = 0;
        for v in &kernel {
            if span.rank() == kernel.len() {
                break;
            }
            if span.insert(project(v)) {
                reduced.push((k, reduce(v)));
                gens.push((k, v.clone()));
                new_generators += 1;
            }
        }
        steps.push(ScanStep { degree: k, kernel_dim: n_p, generated_dim, new_generators });
    }
    if gens.len() < 2 {
        return Err(Error::Internal(format!("found {} syzygy generators, expected at least 2", gens.len())));
    }

    // generators are exact, so the third differences give the relations
    let exponents: Vec<u32> = gens.iter().map(|g| g.0 as u32).collect();
    let mut relation_degrees = Vec::new();
    for n in 0..=top {
        let b0 = exponents.iter().filter(|e| **e as i64 == n).count() as i64;
        let b1 = b0 - third_difference(&ranks, n);
        if b1 < 0 {
            return Err(Error::Internal(format!("Hilbert series of D_0(f) needs {} generators in degree {n}", -b1)));
        }
        relation_degrees.extend(std::iter::repeat(n as u32).take(b1 as usize));
    }
    let m = exponents.len();
    if relation_degrees.len() != m - 2 {
        return Err(Error::Internal(format!(
            "Hilbert series of D_0(f) gives {} relations among {m} generators, expected {}",
            relation_degrees.len(),
            m - 2
        )));
    }

    let modular_exponents: Vec<u32> = p_gens.generators.iter().map(|g| g.0 as u32).collect();
    let modular_relation_degrees: Vec<u32> = p_rels.generators.iter().map(|g| g.0 as u32).collect();
    // the modular scan is an independent route to the same Betti numbers
    let mismatches = hilbert_series_mismatches(&ranks, &modular_exponents, &modular_relation_degrees);
    let mut summary = assemble(ranks.d, exponents, relation_degrees, steps, p_rels.steps.clone(), mismatches);
    summary.generators = syzygy_vectors(f, &exact_map, &gens)?;
    Ok(CertifiedSyzygies { summary, ranks, modular, modular_exponents, modular_relation_degrees, exact_degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::syzygy::exponents;

    #[test]
    fn matches_the_rational_engine() {
        for s in ["x*y*(x^4+y^4-z^4)", "x^4+y^4+x*y*z*(x+z)", "x^3+y^3+z^3", "x*y*z*(x-y)*(y-z)*(x-z)"] {
            let f = parse_poly(s).unwrap();
            let c = certified_syzygies(&f).unwrap();
            let q = exponents(&f).unwrap();
            assert_eq!(c.summary.exponents, q.exponents, "{s}");
            assert_eq!(c.summary.relation_degrees, q.relation_degrees, "{s}");
            assert_eq!(c.summary.generators, q.generators, "{s}");
            assert!(c.summary.hilbert_series_mismatches.is_empty());
            assert_eq!(c.modular_exponents, q.exponents);
        }
    }

    #[test]
    fn exact_work_only_in_generator_degrees() {
        let f = parse_poly("x*y*(x^4+y^4-z^4)").unwrap();
        let c = certified_syzygies(&f).unwrap();
        assert_eq!(c.exact_degrees, vec![4, 5]);
    }
}
