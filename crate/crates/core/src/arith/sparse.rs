//! Sparse row elimination.
//!
//! Rows are sorted `(column, value)` lists without zeros. Over the integers an
//! update is `row <- s*row - t*pivot` followed by content removal, so entries
//! stay integral and primitive. Over the prime field pivots are kept monic.
//! Reduced row echelon forms are unique, so insertion order does not change
//! the result of [`Echelon::into_rref`].

use std::collections::BTreeMap;

use super::scalar::Domain;

pub type SparseRow<D> = Vec<(usize, D)>;

/// `s * row - t * pivot`, dropping cancelled entries.
fn combine<D: Domain>(row: &[(usize, D)], s: &D, pivot: &[(usize, D)], t: &D) -> SparseRow<D> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let scale_row = !s.is_one();
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            let v = if scale_row { s.mul(&row[i].1) } else { row[i].1.clone() };
            out.push((row[i].0, v));
            i += 1;
        } else if i >= row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, t.mul(&pivot[j].1).neg()));
            j += 1;
        } else {
            let a = if scale_row { s.mul(&row[i].1) } else { row[i].1.clone() };
            let v = a.sub(&t.mul(&pivot[j].1));
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Eliminates column `col` of `row` using `pivot`, whose lead sits at `col`.
fn eliminate<D: Domain>(row: &[(usize, D)], pivot: &[(usize, D)], col: usize) -> SparseRow<D> {
    let entry = match row.binary_search_by_key(&col, |e| e.0) {
        Ok(pos) => &row[pos].1,
        Err(_) => return row.to_vec(),
    };
    let (s, t) = D::cancel_factors(&pivot[0].1, entry);
    let mut out = combine(row, &s, pivot, &t);
    D::normalize(&mut out);
    out
}

pub fn dot<D: Domain>(a: &[(usize, D)], b: &[(usize, D)]) -> D {
    let mut acc = D::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = acc.add(&a[i].1.mul(&b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// An incrementally built row echelon form, keyed by leading column.
#[derive(Clone, Debug)]
pub struct Echelon<D: Domain> {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow<D>>,
}

impl<D: Domain> Echelon<D> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` until its lead is not a pivot. Returns the remainder.
    fn reduce_lead(&self, mut row: SparseRow<D>) -> SparseRow<D> {
        while let Some(&(lead, _)) = row.first() {
            match self.rows.get(&lead) {
                Some(p) => row = eliminate(&row, p, lead),
                None => break,
            }
        }
        row
    }

    /// Inserts a row; returns whether it enlarged the row space.
    pub fn insert(&mut self, row: SparseRow<D>) -> bool {
        debug_assert!(row.iter().all(|(c, v)| *c < self.ncols && !v.is_zero()));
        let mut r = self.reduce_lead(row);
        if r.is_empty() {
            return false;
        }
        D::normalize(&mut r);
        self.rows.insert(r[0].0, r);
        true
    }

    /// Whether `row` lies in the current row space.
    pub fn contains(&self, row: SparseRow<D>) -> bool {
        self.reduce_lead(row).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseRow<D>> {
        self.rows.values()
    }

    pub fn into_rows(self) -> Vec<SparseRow<D>> {
        self.rows.into_values().collect()
    }

    /// Back-substitutes into the unique reduced row echelon form.
    pub fn into_rref(mut self) -> Rref<D> {
        let leads: Vec<usize> = self.rows.keys().rev().copied().collect();
        for lead in leads {
            let mut r = self.rows.remove(&lead).expect("lead present");
            let mut i = 1;
            while i < r.len() {
                let c = r[i].0;
                if let Some(p) = self.rows.get(&c) {
                    r = eliminate(&r, p, c);
                    // entries before position i are untouched: p has zeros at every
                    // other pivot column and starts at c
                } else {
                    i += 1;
                }
            }
            self.rows.insert(lead, r);
        }
        let pivots = self.rows.keys().copied().collect();
        Rref { ncols: self.ncols, pivots, rows: self.rows.into_values().collect() }
    }
}

/// Reduced row echelon form: each pivot column is zero outside its own row.
#[derive(Clone, Debug)]
pub struct Rref<D: Domain> {
    pub ncols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseRow<D>>,
}

impl<D: Domain> Rref<D> {
    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SparseRow<D>>) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            if !r.is_empty() {
                e.insert(r);
            }
        }
        e.into_rref()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Right null space basis, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<SparseRow<D>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        // column -> rows touching it, gathered in one sweep
        let mut touching: Vec<Vec<(usize, D, D)>> = vec![Vec::new(); self.ncols];
        for row in &self.rows {
            let (p, a) = (row[0].0, &row[0].1);
            for (c, v) in &row[1..] {
                touching[*c].push((p, a.clone(), v.clone()));
            }
        }
        (0..self.ncols)
            .filter(|c| !is_pivot[*c])
            .map(|c| D::kernel_vector(&touching[c], c))
            .collect()
    }
}

/// Rank of the span of `rows` in a space with `ncols` coordinates.
pub fn rank_of<D: Domain>(ncols: usize, rows: impl IntoIterator<Item = SparseRow<D>>) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        if !r.is_empty() {
            e.insert(r);
        }
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::Fp;
    use num_bigint::BigInt;

    fn zrow(v: &[(usize, i64)]) -> SparseRow<BigInt> {
        v.iter().map(|(c, x)| (*c, BigInt::from(*x))).collect()
    }

    #[test]
    fn integer_rref_of_proportional_rows() {
        let r = Rref::from_rows(3, vec![zrow(&[(0, 1), (1, 2), (2, 3)]), zrow(&[(0, 2), (1, 4), (2, 6)])]);
        assert_eq!(r.pivots, vec![0]);
        let k = r.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(dot(&v, &zrow(&[(0, 1), (1, 2), (2, 3)])).is_zero());
        }
    }

    #[test]
    fn reduction_clears_pivot_columns() {
        let rows = vec![zrow(&[(0, 2), (1, 1), (2, 1)]), zrow(&[(1, 3), (2, 1)]), zrow(&[(0, 1), (2, 5)])];
        let r = Rref::from_rows(3, rows);
        assert_eq!(r.rank(), 3);
        for row in &r.rows {
            assert_eq!(row.len(), 1);
        }
    }

    #[test]
    fn prime_rows_are_monic() {
        let rows: Vec<SparseRow<Fp>> = vec![vec![(1, Fp::new(5)), (2, Fp::new(7))]];
        let r = Rref::from_rows(3, rows);
        assert_eq!(r.rows[0][0].1, Fp::new(1));
        let k = r.kernel_basis();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn containment() {
        let mut e = Echelon::new(3);
        e.insert(zrow(&[(0, 1), (1, 1)]));
        assert!(e.contains(zrow(&[(0, 3), (1, 3)])));
        assert!(!e.contains(zrow(&[(1, 1)])));
    }
}
