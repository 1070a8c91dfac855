use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, PrimInt, Signed, Zero};

use super::IntMatrix;
use crate::error::Result;

/// Signature of a symmetric integer form by exact congruence diagonalization.
///
/// Elimination is fraction-free: the trailing block is kept as `scale * C`
/// where `C` is the rational Schur complement and `scale` the previous pivot,
/// so every update divides exactly. The rational pivot at each step is
/// `b[k][k] / scale`.
///
/// A zero pivot with a nonzero row is repaired before elimination: swap in a
/// later nonzero diagonal entry if the coupled index has one, otherwise apply
/// `x_k -> x_k + x_j`, which puts `2 * a_kj` on the diagonal.
pub fn signature(q: &IntMatrix) -> Result<i64> {
    q.require_symmetric("signature")?;
    if let Some(small) = signature_small(q) {
        return Ok(small);
    }
    let n = q.rows();
    let mut b: Vec<Vec<BigInt>> = q.to_rows();
    let mut scale = BigInt::one();

    let mut sig = 0i64;
    for k in 0..n {
        if b[k][k].is_zero() {
            let Some(j) = (k + 1..n).find(|&j| !b[k][j].is_zero()) else {
                continue;
            };
            if !b[j][j].is_zero() {
                b.swap(k, j);
                for row in b.iter_mut() {
                    row.swap(k, j);
                }
            } else {
                for c in 0..n {
                    let v = b[j][c].clone();
                    b[k][c] += v;
                }
                for row in b.iter_mut() {
                    let v = row[j].clone();
                    row[k] += v;
                }
            }
        }
        let pivot = std::mem::take(&mut b[k][k]);
        if pivot.is_positive() == scale.is_positive() {
            sig += 1;
        } else {
            sig -= 1;
        }
        for i in k + 1..n {
            for j in i..n {
                let num = &pivot * &b[i][j] - &b[i][k] * &b[k][j];
                let (v, r) = num.div_rem(&scale);
                debug_assert!(r.is_zero(), "fraction-free update must divide exactly");
                b[i][j] = v.clone();
                b[j][i] = v;
            }
        }
        for i in k + 1..n {
            b[i][k] = BigInt::zero();
            b[k][i] = BigInt::zero();
        }
        scale = pivot;
    }
    Ok(sig)
}

/// Same elimination in checked machine integers, trying `i64` before `i128`;
/// `None` when both overflow.
fn signature_small(q: &IntMatrix) -> Option<i64> {
    let wide = q.to_small_rows()?;
    let narrow: Vec<Vec<i64>> = wide
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect();
    signature_checked(narrow).or_else(|| signature_checked(wide))
}

fn signature_checked<T: PrimInt + Signed>(mut b: Vec<Vec<T>>) -> Option<i64> {
    let n = b.len();
    let zero = T::zero();
    let mut scale = T::one();
    let mut sig = 0i64;
    for k in 0..n {
        if b[k][k] == zero {
            let Some(j) = (k + 1..n).find(|&j| b[k][j] != zero) else {
                continue;
            };
            if b[j][j] != zero {
                b.swap(k, j);
                for row in b.iter_mut() {
                    row.swap(k, j);
                }
            } else {
                for c in 0..n {
                    b[k][c] = b[k][c].checked_add(&b[j][c])?;
                }
                for row in b.iter_mut() {
                    row[k] = row[k].checked_add(&row[j])?;
                }
            }
        }
        let pivot = b[k][k];
        sig += if (pivot > zero) == (scale > zero) {
            1
        } else {
            -1
        };
        for i in k + 1..n {
            for j in i..n {
                let num = pivot
                    .checked_mul(&b[i][j])?
                    .checked_sub(&b[i][k].checked_mul(&b[k][j])?)?;
                debug_assert!((num % scale).is_zero());
                let v = num / scale;
                b[i][j] = v;
                b[j][i] = v;
            }
        }
        for i in k + 1..n {
            b[i][k] = zero;
            b[k][i] = zero;
        }
        scale = pivot;
    }
    Some(sig)
}
