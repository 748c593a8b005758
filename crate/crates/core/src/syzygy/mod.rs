//! Jacobian syzygies: graded pieces of `D_0(f)`, minimal generators, minimal
//! relations among them, and the derived shifts and regularity.
//!
//! All of it is degreewise linear algebra. The module of syzygies is the kernel
//! of `S^3 → S`, `(a, b, c) ↦ a f_x + b f_y + c f_z`; its generators are found
//! by a Nakayama scan over the degrees, and the relations by the same scan on
//! the map from the free module on the generators.

mod certified;
mod graded_map;
mod nakayama;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::sparse::SparseRow;
use crate::arith::{Domain, Rational};
use crate::error::{Error, Result};
use crate::poly::{dim_s, HomogeneousPoly, SyzygyVector};

pub use certified::{certified_syzygies, CertifiedSyzygies};
pub use graded_map::{DPoly, GradedMap};
pub use nakayama::{minimal_kernel_generators, GeneratorScan, ScanStep};

/// `dim D_0(f)_k`, the nullity of the Jacobian map in degree `k`.
pub fn d0_dimension(f: &HomogeneousPoly, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let map: GradedMap<BigInt> = GradedMap::jacobian(f);
    map.source_dim(k) - map.rank(k)
}

/// Ranks of the Jacobian map `S_j^3 → S_{j+d-1}` for `j = 0 ..= 2d+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianRanks {
    pub d: u32,
    pub ranks: Vec<usize>,
}

impl JacobianRanks {
    /// Largest `j` with a stored rank.
    pub fn top(&self) -> i64 {
        self.ranks.len() as i64 - 1
    }

    pub fn rank(&self, j: i64) -> usize {
        if j < 0 {
            0
        } else {
            self.ranks[j as usize]
        }
    }

    pub fn d0_dim(&self, k: i64) -> usize {
        3 * dim_s(k) - self.rank(k)
    }

    /// `dim M(f)_k = dim S_k - dim (J_f)_k`, for `k ≤ top + d - 1`.
    pub fn hilbert(&self, k: i64) -> usize {
        dim_s(k) - self.rank(k - self.d as i64 + 1)
    }
}

/// Resolution data of `D_0(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygySummary {
    pub d: u32,
    pub m: usize,
    pub exponents: Vec<u32>,
    #[serde(skip)]
    pub generators: Vec<SyzygyVector>,
    /// Degrees of the minimal relations, in the grading of `D_0(f)`.
    pub relation_degrees: Vec<u32>,
    /// `relation_degrees[j] - exponents[j + 2]`.
    pub epsilons: Vec<i64>,
    /// `d_m + ε_{m-2} - 1`, or `d_2` for a free curve.
    pub regularity: i64,
    pub is_free: bool,
    pub generator_steps: Vec<ScanStep>,
    pub relation_steps: Vec<ScanStep>,
    /// Degrees where the Betti numbers disagree with the Hilbert function of `D_0(f)`.
    pub hilbert_series_mismatches: Vec<i64>,
}

impl SyzygySummary {
    pub fn type_t(&self) -> i64 {
        if self.exponents.len() < 2 {
            return i64::MIN;
        }
        self.exponents[0] as i64 + self.exponents[1] as i64 + 1 - self.d as i64
    }

    /// The relation degrees shifted to the grading of the resolution of `M(f)`.
    pub fn resolution_shifts(&self) -> Vec<u32> {
        self.relation_degrees.iter().map(|r| r + self.d - 1).collect()
    }
}

/// Per-curve syzygy computation over an elimination domain.
pub struct SyzygyEngine<D: Domain> {
    f: HomogeneousPoly,
    map: GradedMap<D>,
    ranks: JacobianRanks,
    kernels: Vec<Vec<SparseRow<D>>>,
}

impl<D: Domain> SyzygyEngine<D> {
    /// Computes every Jacobian rank up to `2d+1` and canonical kernel bases up
    /// to `2d-3`, in parallel across degrees.
    pub fn new(f: &HomogeneousPoly) -> Result<Self> {
        let d = f.degree();
        if d < 3 {
            return Err(Error::DegreeTooSmall(d));
        }
        let map: GradedMap<D> = GradedMap::jacobian(f);
        let top = 2 * d as i64 + 1;
        let scan_top = 2 * d as i64 - 3;
        let pieces: Vec<(usize, Vec<SparseRow<D>>)> = (0..=top)
            .into_par_iter()
            .map(|j| {
                if j <= scan_top {
                    let r = map.rref(j);
                    (r.rank(), r.kernel_basis())
                } else {
                    (map.rank(j), Vec::new())
                }
            })
            .collect();
        let (ranks, mut kernels): (Vec<usize>, Vec<Vec<SparseRow<D>>>) = pieces.into_iter().unzip();
        kernels.truncate(scan_top as usize + 1);
        Ok(SyzygyEngine { f: f.clone(), map, ranks: JacobianRanks { d, ranks }, kernels })
    }

    pub fn curve(&self) -> &HomogeneousPoly {
        &self.f
    }

    pub fn map(&self) -> &GradedMap<D> {
        &self.map
    }

    pub fn ranks(&self) -> &JacobianRanks {
        &self.ranks
    }

    /// Minimal generators, scanned over `k = 0 ..= 2d-3`.
    pub fn generator_scan(&self) -> Result<GeneratorScan<D>> {
        let d = self.ranks.d as i64;
        let scan = minimal_kernel_generators(&self.map, 0..=2 * d - 3, |k| self.kernels[k as usize].clone());
        if let Some(step) = scan.steps.iter().find(|s| s.generated_dim + s.new_generators != s.kernel_dim) {
            return Err(Error::Internal(format!("generator scan lost track of the kernel in degree {}", step.degree)));
        }
        if scan.generators.len() < 2 {
            return Err(Error::Internal(format!("found {} syzygy generators, expected at least 2", scan.generators.len())));
        }
        if let Some((k, _)) = scan.generators.iter().find(|g| g.0 == 2 * d - 3) {
            return Err(Error::Internal(format!("syzygy generator in degree {k} exceeds the bound 2d-4")));
        }
        Ok(scan)
    }

    /// The map `⊕_j S(-d_j) → S^3` sending the `j`-th basis vector to the `j`-th generator.
    pub fn generator_map(&self, scan: &GeneratorScan<D>) -> GradedMap<D> {
        let shifts: Vec<i64> = scan.generators.iter().map(|g| g.0).collect();
        let blocks: Vec<Vec<DPoly<D>>> =
            scan.generators.iter().map(|(e, v)| self.map.source_blocks(v, *e)).collect();
        let entries = (0..3).map(|r| blocks.iter().map(|b| b[r].clone()).collect()).collect();
        GradedMap::new(shifts, vec![0; 3], entries)
    }

    /// Minimal relations among the generators, scanned up to `2d-2`. Singular
    /// curves have all relations in degree at most `2d-3`; a smooth curve has
    /// its single Koszul relation in degree `2d-2`.
    pub fn relation_scan(&self, scan: &GeneratorScan<D>) -> Result<GeneratorScan<D>> {
        let d = self.ranks.d as i64;
        let psi = self.generator_map(scan);
        let start = scan.generators[0].0 + 1;
        let degrees: Vec<i64> = (start..=2 * d - 2).collect();
        let kernels: Vec<Vec<SparseRow<D>>> = degrees.par_iter().map(|r| psi.kernel(*r)).collect();
        let rel = minimal_kernel_generators(&psi, degrees.iter().copied(), |r| kernels[(r - start) as usize].clone());
        let m = scan.generators.len();
        if rel.generators.len() != m - 2 {
            return Err(Error::Internal(format!(
                "found {} minimal relations among {} generators, expected {}",
                rel.generators.len(),
                m,
                m - 2
            )));
        }
        Ok(rel)
    }

    /// Generators, relations and the numbers derived from them. Generator
    /// polynomials are left empty; see [`SyzygyEngine::<BigInt>::summary_with_generators`].
    pub fn summary(&self) -> Result<(SyzygySummary, GeneratorScan<D>)> {
        let gens = self.generator_scan()?;
        let rels = self.relation_scan(&gens)?;
        let exponents: Vec<u32> = gens.generators.iter().map(|g| g.0 as u32).collect();
        let relation_degrees: Vec<u32> = rels.generators.iter().map(|g| g.0 as u32).collect();
        let mismatches = hilbert_series_mismatches(&self.ranks, &exponents, &relation_degrees);
        let summary =
            assemble(self.ranks.d, exponents, relation_degrees, gens.steps.clone(), rels.steps, mismatches);
        Ok((summary, gens))
    }
}

fn assemble(
    d: u32,
    exponents: Vec<u32>,
    relation_degrees: Vec<u32>,
    generator_steps: Vec<ScanStep>,
    relation_steps: Vec<ScanStep>,
    hilbert_series_mismatches: Vec<i64>,
) -> SyzygySummary {
    let m = exponents.len();
    let epsilons: Vec<i64> =
        relation_degrees.iter().enumerate().map(|(j, r)| *r as i64 - exponents[j + 2] as i64).collect();
    let is_free = m == 2 && exponents[0] + exponents[1] + 1 == d;
    let regularity = match epsilons.last() {
        Some(e) => exponents[m - 1] as i64 + e - 1,
        None => exponents[m - 1] as i64,
    };
    SyzygySummary {
        d,
        m,
        exponents,
        generators: Vec::new(),
        relation_degrees,
        epsilons,
        regularity,
        is_free,
        generator_steps,
        relation_steps,
        hilbert_series_mismatches,
    }
}

const BINOM3: [i64; 4] = [1, -3, 3, -1];

/// Third difference of `k ↦ dim D_0(f)_k` at `n`. With a resolution
/// `0 → ⊕S(-ρ_i) → ⊕S(-d_j) → D_0(f) → 0` it equals `#{j: d_j = n} - #{i: ρ_i = n}`.
fn third_difference(ranks: &JacobianRanks, n: i64) -> i64 {
    (0..4).map(|i| BINOM3[i] * ranks.d0_dim(n - i as i64) as i64).sum()
}

fn hilbert_series_mismatches(ranks: &JacobianRanks, exponents: &[u32], relations: &[u32]) -> Vec<i64> {
    (0..=ranks.top())
        .filter(|&n| {
            let b0 = exponents.iter().filter(|e| **e as i64 == n).count() as i64;
            let b1 = relations.iter().filter(|e| **e as i64 == n).count() as i64;
            third_difference(ranks, n) != b0 - b1
        })
        .collect()
}

/// Checked polynomial triples for integer kernel vectors of the Jacobian map.
fn syzygy_vectors(f: &HomogeneousPoly, map: &GradedMap<BigInt>, gens: &[(i64, SparseRow<BigInt>)]) -> Result<Vec<SyzygyVector>> {
    gens.iter()
        .map(|(e, v)| {
            let comps: Vec<HomogeneousPoly> = map
                .source_blocks(v, *e)
                .into_iter()
                .map(|b| {
                    HomogeneousPoly::from_terms(*e as u32, b.into_iter().map(|(m, c)| (m, Rational::from_integer(c))))
                        .expect("block monomials have the block degree")
                })
                .collect();
            let comps: [HomogeneousPoly; 3] = comps.try_into().expect("three components");
            SyzygyVector::new(f, comps)
        })
        .collect()
}

impl SyzygyEngine<BigInt> {
    /// As [`SyzygyEngine::summary`], with the generators as checked polynomial triples.
    pub fn summary_with_generators(&self) -> Result<SyzygySummary> {
        let (mut summary, gens) = self.summary()?;
        summary.generators = syzygy_vectors(&self.f, &self.map, &gens.generators)?;
        Ok(summary)
    }
}

/// Exponents, relations, shifts and regularity of `f`, over the rationals.
pub fn exponents(f: &HomogeneousPoly) -> Result<SyzygySummary> {
    SyzygyEngine::<BigInt>::new(f)?.summary_with_generators()
}

/// Degrees of the second syzygies `α_{i,j}` (coefficient of the `j`-th generator
/// in the `i`-th minimal relation).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SecondSyzygyDegreeTable {
    /// `ρ_i - d_j`, or `None` when negative (the entry must vanish).
    pub degrees: Vec<Vec<Option<i64>>>,
    /// `d_m - d_j + ε_i`, the closed form in terms of the last exponent.
    pub closed_form: Vec<Vec<i64>>,
    /// Whether row `i` of the two tables coincides (it does when `d_{i+2} = d_m`).
    pub row_agrees: Vec<bool>,
    /// For `m = 3` with `ε_1 = 3`: `deg α_{1,1} ≤ d-1`, `deg α_{1,2} ≤ d/2+1`, `deg α_{1,3} = 3`.
    pub three_a_bounds: Option<[bool; 3]>,
}

pub fn second_syzygy_degree_table(s: &SyzygySummary) -> Result<SecondSyzygyDegreeTable> {
    if s.is_free || s.m < 3 {
        return Err(Error::Input("second syzygies need a non-free curve".into()));
    }
    let d_m = *s.exponents.last().expect("nonempty") as i64;
    let mut degrees = Vec::new();
    let mut closed_form = Vec::new();
    let mut row_agrees = Vec::new();
    for (i, rho) in s.relation_degrees.iter().enumerate() {
        let row: Vec<Option<i64>> = s
            .exponents
            .iter()
            .map(|dj| {
                let v = *rho as i64 - *dj as i64;
                (v >= 0).then_some(v)
            })
            .collect();
        let closed: Vec<i64> = s.exponents.iter().map(|dj| d_m - *dj as i64 + s.epsilons[i]).collect();
        row_agrees.push(row.iter().zip(&closed).all(|(a, b)| *a == Some(*b)));
        degrees.push(row);
        closed_form.push(closed);
    }
    let three_a_bounds = (s.m == 3 && s.epsilons == [3]).then(|| {
        let d = s.d as i64;
        let a = &degrees[0];
        [
            a[0].is_some_and(|v| v <= d - 1),
            a[1].is_some_and(|v| 2 * v <= d + 2),
            a[2] == Some(3),
        ]
    });
    Ok(SecondSyzygyDegreeTable { degrees, closed_form, row_agrees, three_a_bounds })
}
