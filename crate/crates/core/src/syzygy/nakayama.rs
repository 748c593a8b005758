use crate::arith::sparse::{Echelon, SparseRow};
use crate::arith::Domain;
use crate::poly::MonomialBasis;

use super::graded_map::GradedMap;

/// Bookkeeping for one degree of a generator scan.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ScanStep {
    pub degree: i64,
    /// Dimension of the kernel in this degree.
    pub kernel_dim: usize,
    /// Dimension of the part generated by lower-degree generators.
    pub generated_dim: usize,
    pub new_generators: usize,
}

/// Minimal homogeneous generators of `ker(map)` found by a degree scan.
#[derive(Clone, Debug)]
pub struct GeneratorScan<D: Domain> {
    /// `(degree, vector)` pairs in scan order.
    pub generators: Vec<(i64, SparseRow<D>)>,
    pub steps: Vec<ScanStep>,
}

impl<D: Domain> GeneratorScan<D> {
    pub fn degrees(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.0).collect()
    }
}

/// Graded Nakayama scan: in each degree the new generators are the canonical
/// kernel vectors that are not in the span of `u * g` for earlier generators `g`.
///
/// `kernel_at(n)` must return a basis of the kernel in degree `n`; the returned
/// generators are taken from it in order, so canonical bases give canonical
/// representatives.
pub fn minimal_kernel_generators<D: Domain>(
    map: &GradedMap<D>,
    degrees: impl IntoIterator<Item = i64>,
    mut kernel_at: impl FnMut(i64) -> Vec<SparseRow<D>>,
) -> GeneratorScan<D> {
    let mut generators: Vec<(i64, SparseRow<D>)> = Vec::new();
    let mut steps = Vec::new();
    for n in degrees {
        let kernel = kernel_at(n);
        let mut span = Echelon::new(map.source_dim(n));
        for (e, g) in &generators {
            for u in MonomialBasis::new(n - e).monomials() {
                span.insert(map.shift(g, *e, u));
            }
        }
        let generated_dim = span.rank();
        let mut new_generators = 0;
        for v in kernel.iter() {
            if span.rank() == kernel.len() {
                break;
            }
            if span.insert(v.clone()) {
                generators.push((n, v.clone()));
                new_generators += 1;
            }
        }
        steps.push(ScanStep { degree: n, kernel_dim: kernel.len(), generated_dim, new_generators });
    }
    GeneratorScan { generators, steps }
}
