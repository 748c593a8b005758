use super::scalar::{Domain, Field};
use super::sparse::{Echelon, Rref, SparseRow};
use crate::error::{Error, Result};

/// A dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, entries: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
            entries.extend(r);
        }
        Ok(DenseMatrix { rows: nrows, cols, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|v| F::from_i64(*v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    fn sparse_rows(&self) -> impl Iterator<Item = SparseRow<F::Domain>> + '_ {
        (0..self.rows).map(move |r| {
            let row: Vec<(usize, F)> = self
                .row(r)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect();
            F::to_domain_row(&row)
        })
    }

    fn sparse_rref(&self) -> Rref<F::Domain> {
        Rref::from_rows(self.cols, self.sparse_rows())
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in self.sparse_rows() {
            if !r.is_empty() {
                e.insert(r);
            }
        }
        e.rank()
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq)]
pub struct RrefResult<F: Field> {
    pub reduced: DenseMatrix<F>,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Unique reduced row echelon form, same shape as the input, zero rows last.
pub fn rref<F: Field>(m: &DenseMatrix<F>) -> RrefResult<F> {
    let sr = m.sparse_rref();
    let mut reduced = DenseMatrix::zeros(m.rows, m.cols);
    for (i, row) in sr.rows.iter().enumerate() {
        let lead = F::from_domain(&row[0].1);
        let inv = lead.inv().expect("pivot is nonzero");
        for (c, v) in row {
            reduced.set(i, *c, F::from_domain(v).mul(&inv));
        }
    }
    RrefResult { rank: sr.rank(), pivot_columns: sr.pivots, reduced }
}

/// Right null space basis: for each free column `j` (increasing) the vector with
/// a 1 in position `j`, zeros in the other free positions, and the values forced
/// on the pivot positions.
pub fn kernel_basis<F: Field>(m: &DenseMatrix<F>) -> Vec<Vec<F>> {
    let sr = m.sparse_rref();
    sr.kernel_basis()
        .into_iter()
        .map(|v| {
            let free = free_coordinate(&sr.pivots, &v);
            let scale = F::from_domain(&v.iter().find(|e| e.0 == free).expect("free entry").1)
                .inv()
                .expect("free entry is nonzero");
            let mut dense = vec![F::zero(); m.cols];
            for (c, x) in &v {
                dense[*c] = F::from_domain(x).mul(&scale);
            }
            dense
        })
        .collect()
}

fn free_coordinate<D: Domain>(pivots: &[usize], v: &[(usize, D)]) -> usize {
    v.iter()
        .map(|e| e.0)
        .find(|c| pivots.binary_search(c).is_err())
        .expect("kernel vector has a free coordinate")
}

/// Dimension of `span(a ∪ b)`.
pub fn subspace_dim_sum<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Result<usize> {
    let len = a.first().or_else(|| b.first()).map_or(0, Vec::len);
    let mut e: Echelon<F::Domain> = Echelon::new(len);
    for v in a.iter().chain(b) {
        if v.len() != len {
            return Err(Error::LengthMismatch { expected: len, found: v.len() });
        }
        let row: Vec<(usize, F)> =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(c, x)| (c, x.clone())).collect();
        let row = F::to_domain_row(&row);
        if !row.is_empty() {
            e.insert(row);
        }
    }
    Ok(e.rank())
}
