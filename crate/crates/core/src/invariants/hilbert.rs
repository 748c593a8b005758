use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{dim_s, HomogeneousPoly};
use crate::syzygy::{GradedMap, JacobianRanks};

/// `dim M(f)_k = dim S_k - rank(S_{k-d+1}^3 → S_k)`.
pub fn hilbert_m(f: &HomogeneousPoly, k: i64) -> usize {
    let map: GradedMap<BigInt> = GradedMap::jacobian(f);
    let j = k - f.degree() as i64 + 1;
    dim_s(k) - if j < 0 { 0 } else { map.rank(j) }
}

/// `dim M(f)_k` for `k = 0 ..= 3d`.
pub fn hilbert_table(ranks: &JacobianRanks) -> Vec<usize> {
    (0..=3 * ranks.d as i64).map(|k| ranks.hilbert(k)).collect()
}

/// Stabilized value of the Hilbert function and the first degree of the
/// stable stretch.
///
/// The table must be constant from some `k0 ≤ 3d-3` through `3d`, so at least
/// four equal values close the table. A smooth curve has `dim M(f)_{3d-6} = 1`
/// and zero afterwards, so `k0` may exceed `3d-6`.
pub fn stabilized_value(table: &[usize], d: u32) -> Result<(usize, u32)> {
    let top = 3 * d as usize;
    if table.len() != top + 1 {
        return Err(Error::Internal(format!("Hilbert table has {} entries, expected {}", table.len(), top + 1)));
    }
    let tau = table[top];
    let mut k0 = top;
    while k0 > 0 && table[k0 - 1] == tau {
        k0 -= 1;
    }
    if k0 + 3 > top {
        return Err(Error::NotReduced(format!(
            "dim M(f)_k is not constant on {}..={} (values {:?})",
            top - 3,
            top,
            &table[top - 3..]
        )));
    }
    Ok((tau, k0 as u32))
}

/// The Tjurina number: the stable value of the Hilbert function of `M(f)`.
pub fn tjurina(f: &HomogeneousPoly) -> Result<usize> {
    let d = f.degree();
    if d < 3 {
        return Err(Error::DegreeTooSmall(d));
    }
    let map: GradedMap<BigInt> = GradedMap::jacobian(f);
    let ranks: Vec<usize> = (0..=2 * d as i64 + 1).map(|j| map.rank(j)).collect();
    let table = hilbert_table(&JacobianRanks { d, ranks });
    stabilized_value(&table, d).map(|v| v.0)
}
