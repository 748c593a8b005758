use crate::arith::sparse::{rank_of, Rref, SparseRow};
use crate::arith::Domain;
use crate::poly::{dim_s, HomogeneousPoly, Monomial, MonomialBasis};

/// A form with coefficients in an elimination domain.
pub type DPoly<D> = Vec<(Monomial, D)>;

/// A graded map `⊕_c S(-a_c) → ⊕_r S(-b_r)` given by a matrix of forms.
///
/// In degree `n` the source block `c` is `S_{n-a_c}` and the target block `r`
/// is `S_{n-b_r}`; entry `(r, c)` has degree `a_c - b_r`. Coordinates of a
/// degree-`n` element are the concatenated monomial coefficients of its blocks.
#[derive(Clone, Debug)]
pub struct GradedMap<D: Domain> {
    source_shifts: Vec<i64>,
    target_shifts: Vec<i64>,
    entries: Vec<Vec<DPoly<D>>>,
}

impl<D: Domain> GradedMap<D> {
    pub fn new(source_shifts: Vec<i64>, target_shifts: Vec<i64>, entries: Vec<Vec<DPoly<D>>>) -> Self {
        debug_assert_eq!(entries.len(), target_shifts.len());
        for (r, row) in entries.iter().enumerate() {
            debug_assert_eq!(row.len(), source_shifts.len());
            for (c, p) in row.iter().enumerate() {
                debug_assert!(p.iter().all(|(m, _)| m.degree() as i64 == source_shifts[c] - target_shifts[r]));
            }
        }
        GradedMap { source_shifts, target_shifts, entries }
    }

    /// `(a, b, c) -> a f_x + b f_y + c f_z`, so that degree `k` is `S_k^3 → S_{k+d-1}`.
    pub fn jacobian(f: &HomogeneousPoly) -> Self {
        let d = f.degree() as i64;
        GradedMap::new(vec![0; 3], vec![1 - d], vec![integral_partials(f)])
    }

    pub fn source_shifts(&self) -> &[i64] {
        &self.source_shifts
    }

    pub fn source_dim(&self, n: i64) -> usize {
        self.source_shifts.iter().map(|a| dim_s(n - a)).sum()
    }

    pub fn target_dim(&self, n: i64) -> usize {
        self.target_shifts.iter().map(|b| dim_s(n - b)).sum()
    }

    fn offsets(shifts: &[i64], n: i64) -> Vec<usize> {
        let mut out = Vec::with_capacity(shifts.len());
        let mut acc = 0;
        for a in shifts {
            out.push(acc);
            acc += dim_s(n - a);
        }
        out
    }

    /// One row per target coordinate: the linear equations cutting out the kernel.
    pub fn equation_rows(&self, n: i64) -> Vec<SparseRow<D>> {
        let src_off = Self::offsets(&self.source_shifts, n);
        let tgt_off = Self::offsets(&self.target_shifts, n);
        let mut rows: Vec<SparseRow<D>> = vec![Vec::new(); self.target_dim(n)];
        for (r, entry_row) in self.entries.iter().enumerate() {
            for (c, p) in entry_row.iter().enumerate() {
                let k = n - self.source_shifts[c];
                if k < 0 {
                    continue;
                }
                for h in MonomialBasis::new(k).monomials() {
                    let col = src_off[c] + h.index();
                    for (t, v) in p {
                        rows[tgt_off[r] + t.mul(h).index()].push((col, v.clone()));
                    }
                }
            }
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|e| e.0);
            merge_sorted(row);
        }
        rows
    }

    /// Images of the source basis elements, in target coordinates.
    pub fn image_rows(&self, n: i64) -> Vec<SparseRow<D>> {
        let tgt_off = Self::offsets(&self.target_shifts, n);
        let mut out = Vec::with_capacity(self.source_dim(n));
        for (c, a) in self.source_shifts.iter().enumerate() {
            let k = n - a;
            for h in MonomialBasis::new(k).monomials() {
                let mut row: SparseRow<D> = Vec::new();
                for (r, entry_row) in self.entries.iter().enumerate() {
                    for (t, v) in &entry_row[c] {
                        row.push((tgt_off[r] + t.mul(h).index(), v.clone()));
                    }
                }
                row.sort_by_key(|e| e.0);
                merge_sorted(&mut row);
                out.push(row);
            }
        }
        out
    }

    pub fn rank(&self, n: i64) -> usize {
        rank_of(self.source_dim(n), self.equation_rows(n))
    }

    pub fn rref(&self, n: i64) -> Rref<D> {
        Rref::from_rows(self.source_dim(n), self.equation_rows(n))
    }

    /// Canonical kernel basis in degree `n`.
    pub fn kernel(&self, n: i64) -> Vec<SparseRow<D>> {
        self.rref(n).kernel_basis()
    }

    /// Multiplies a degree-`n` source element by the monomial `u`.
    pub fn shift(&self, v: &[(usize, D)], n: i64, u: &Monomial) -> SparseRow<D> {
        let e = u.degree() as i64;
        let old = Self::offsets(&self.source_shifts, n);
        let new = Self::offsets(&self.source_shifts, n + e);
        let mut block = 0;
        let mut out = Vec::with_capacity(v.len());
        for (col, x) in v {
            while block + 1 < old.len() && *col >= old[block + 1] {
                block += 1;
            }
            let k = (n - self.source_shifts[block]) as u32;
            let h = Monomial::from_index(k, col - old[block]);
            out.push((new[block] + h.mul(u).index(), x.clone()));
        }
        debug_assert!(out.windows(2).all(|w| w[0].0 < w[1].0));
        out
    }

    /// Splits a degree-`n` source element into its block polynomials.
    pub fn source_blocks(&self, v: &[(usize, D)], n: i64) -> Vec<DPoly<D>> {
        let off = Self::offsets(&self.source_shifts, n);
        let mut out: Vec<DPoly<D>> = vec![Vec::new(); self.source_shifts.len()];
        for (col, x) in v {
            let block = off.partition_point(|o| o <= col) - 1;
            let k = (n - self.source_shifts[block]) as u32;
            out[block].push((Monomial::from_index(k, col - off[block]), x.clone()));
        }
        out
    }
}

/// Partials of the primitive integral multiple of `f`, reduced into `D`. The
/// three partials share one scale factor, as the syzygies require.
fn integral_partials<D: Domain>(f: &HomogeneousPoly) -> Vec<DPoly<D>> {
    let terms = f.primitive_integer_terms();
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let mut p: DPoly<D> = Vec::new();
        for (m, c) in &terms {
            let e = m.0[i];
            if e > 0 {
                let mut n = *m;
                n.0[i] -= 1;
                let v = D::from_bigint(&(c * num_bigint::BigInt::from(e)));
                if !v.is_zero() {
                    p.push((n, v));
                }
            }
        }
        out.push(p);
    }
    out
}

/// Adds up entries that share a column in a column-sorted row.
fn merge_sorted<D: Domain>(row: &mut SparseRow<D>) {
    let mut out: SparseRow<D> = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.add(&v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *row = out;
}
