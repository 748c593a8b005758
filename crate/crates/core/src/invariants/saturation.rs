//! Degreewise saturation of the Jacobian ideal.
//!
//! Work with the annihilators of ideal pieces in the dual spaces `S_k^*`. At a
//! degree `N` where the Jacobian ideal is already saturated, the annihilator
//! of `J_N` is a kernel computation. Going down, a saturated ideal satisfies
//! `I_k = {g : x g, y g, z g ∈ I_{k+1}}`, whose annihilator is spanned by the
//! functionals `g ↦ λ(x_i g)` for `λ` annihilating `I_{k+1}`.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::sparse::{Echelon, Rref, SparseRow};
use crate::arith::Domain;
use crate::error::{Error, Result};
use crate::poly::{dim_s, Monomial};
use crate::syzygy::GradedMap;

/// `g ↦ λ(x_i g)` on `S_k`, for `λ` a functional on `S_{k+1}`.
fn contract<D: Domain>(lambda: &[(usize, D)], k: u32, i: usize) -> SparseRow<D> {
    let mut out = Vec::new();
    for (idx, v) in lambda {
        let t = Monomial::from_index(k + 1, *idx);
        if t.0[i] > 0 {
            let mut s = t;
            s.0[i] -= 1;
            out.push((s.index(), v.clone()));
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0].0 < w[1].0));
    out
}

/// Annihilator of `{g ∈ S_k : m·g ⊆ I_{k+1}}` from one of `I_{k+1}`.
fn colon_step<D: Domain>(functionals: &[SparseRow<D>], k: u32) -> Vec<SparseRow<D>> {
    let mut e = Echelon::new(dim_s(k as i64));
    for lambda in functionals {
        for i in 0..3 {
            let row = contract(lambda, k, i);
            if !row.is_empty() {
                e.insert(row);
            }
        }
    }
    e.into_rows()
}

/// Annihilator of `(J_f)_n` inside `S_n^*`.
fn jacobian_annihilator<D: Domain>(map: &GradedMap<D>, d: u32, n: u32) -> Vec<SparseRow<D>> {
    let source_degree = n as i64 - d as i64 + 1;
    Rref::from_rows(dim_s(n as i64), map.image_rows(source_degree)).kernel_basis()
}

/// `dim (S/I_f)_k` for `k = 0 ..= 3d`, with its certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationTable {
    pub dims: Vec<usize>,
    /// Degree from which the Jacobian ideal is assumed saturated.
    pub start: u32,
    /// The colon from degree `start + 1` reproduces the annihilator of `J_start`.
    pub start_certified: bool,
    /// Every annihilating functional kills the matching Jacobian piece.
    pub contains_jacobian: bool,
}

/// Saturation dimensions, starting at `N = 3d`.
pub fn saturation_dims<D: Domain>(map: &GradedMap<D>, d: u32) -> Result<SaturationTable> {
    let start = 3 * d;
    let (top, above) = rayon::join(|| jacobian_annihilator(map, d, start), || jacobian_annihilator(map, d, start + 1));
    // one more colon step from above must land on the same space
    let from_above = colon_step(&above, start);
    let start_certified = {
        let mut e = Echelon::new(dim_s(start as i64));
        for r in top.iter().chain(&from_above) {
            e.insert(r.clone());
        }
        from_above.len() == top.len() && e.rank() == top.len()
    };

    let mut levels: Vec<Vec<SparseRow<D>>> = vec![Vec::new(); start as usize + 1];
    levels[start as usize] = top;
    for k in (0..start).rev() {
        levels[k as usize] = colon_step(&levels[k as usize + 1], k);
    }
    let dims: Vec<usize> = levels.iter().map(Vec::len).collect();

    let contains_jacobian = (0..=start).into_par_iter().all(|k| annihilates_jacobian(map, d, k, &levels[k as usize]));
    // the Hilbert function of a saturated ideal of points never decreases
    if let Some(k) = dims.windows(2).position(|w| w[0] > w[1]) {
        return Err(Error::Internal(format!("saturation dimension drops after degree {k}")));
    }
    Ok(SaturationTable { dims, start, start_certified, contains_jacobian })
}

fn annihilates_jacobian<D: Domain>(map: &GradedMap<D>, d: u32, k: u32, functionals: &[SparseRow<D>]) -> bool {
    let n = k as i64 - d as i64 + 1;
    if n < 0 || functionals.is_empty() {
        return true;
    }
    let size = dim_s(k as i64);
    let dense: Vec<Vec<D>> = functionals
        .iter()
        .map(|l| {
            let mut v = vec![D::zero(); size];
            for (i, x) in l {
                v[*i] = x.clone();
            }
            v
        })
        .collect();
    map.image_rows(n).iter().all(|row| {
        dense.iter().all(|l| row.iter().fold(D::zero(), |acc, (i, x)| acc.add(&x.mul(&l[*i]))).is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use num_bigint::BigInt;

    #[test]
    fn smooth_quartic_saturates_to_the_unit_ideal() {
        let f = parse_poly("x^4+y^4+z^4").unwrap();
        let map: GradedMap<BigInt> = GradedMap::jacobian(&f);
        let t = saturation_dims(&map, 4).unwrap();
        assert!(t.dims.iter().all(|v| *v == 0));
        assert!(t.start_certified && t.contains_jacobian);
    }

    #[test]
    fn nodal_cubic_has_one_point() {
        let f = parse_poly("y^2*z-x^3-x^2*z").unwrap();
        let map: GradedMap<BigInt> = GradedMap::jacobian(&f);
        let t = saturation_dims(&map, 3).unwrap();
        assert_eq!(t.dims[0], 1);
        assert!(t.dims.iter().all(|v| *v == 1));
    }
}
