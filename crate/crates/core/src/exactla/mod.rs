//! Exact integer linear algebra: Smith normal form, determinants, cokernels
//! and signatures of symmetric forms.

mod matrix;
mod signature;
mod snf;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use matrix::{block_diag, IntMatrix};
pub use signature::signature;
pub use snf::{smith_normal_form, SnfResult};

use crate::abelian::FiniteAbelianGroup;
use crate::error::Result;

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    m.require_square("determinant")?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    if let Some(small) = determinant_small(m) {
        return Ok(BigInt::from(small));
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// Parity of `det(M)` by elimination over GF(2).
pub fn determinant_is_odd(m: &IntMatrix) -> Result<bool> {
    m.require_square("determinant")?;
    let n = m.rows();
    let words = n.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut bits = vec![0u64; words];
            for (j, x) in m.row(i).iter().enumerate() {
                if x.is_odd() {
                    bits[j / 64] |= 1 << (j % 64);
                }
            }
            bits
        })
        .collect();
    for k in 0..n {
        let (w, bit) = (k / 64, 1u64 << (k % 64));
        let Some(p) = (k..n).find(|&i| rows[i][w] & bit != 0) else {
            return Ok(false);
        };
        rows.swap(k, p);
        let pivot = rows[k].clone();
        for row in rows.iter_mut().skip(k + 1) {
            if row[w] & bit != 0 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
    }
    Ok(true)
}

/// Bareiss in checked `i128`; `None` on any overflow.
fn determinant_small(m: &IntMatrix) -> Option<i128> {
    let n = m.rows();
    let mut a = m.to_small_rows()?;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Some(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
        }
        prev = a[k][k];
    }
    a[n - 1][n - 1].checked_mul(sign)
}

/// Cokernel of `M` read as a map from column space to row space: returns the
/// free rank `rows - rank(M)` and the torsion subgroup.
pub fn cokernel(m: &IntMatrix) -> (usize, FiniteAbelianGroup) {
    let snf = smith_normal_form(m);
    let free_rank = m.rows() - snf.rank();
    let torsion = FiniteAbelianGroup::from_chain_unchecked(
        snf.invariant_factors()
            .into_iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect(),
    );
    (free_rank, torsion)
}
