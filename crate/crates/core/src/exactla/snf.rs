use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith normal form `U * M * V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal of `D`, length `min(rows, cols)`, nonnegative, each entry
    /// dividing the next.
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.d
            .diagonal()
            .iter()
            .take_while(|x| !x.is_zero())
            .count()
    }

    /// Nonzero diagonal entries, units included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

/// Position of a nonzero entry of least absolute value in the lower-right
/// submatrix starting at `(t, t)`. Ties go to the first in row-major order.
fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let mag = x.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                best = Some(((i, j), mag));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn first_non_multiple(a: &IntMatrix, t: usize) -> Option<usize> {
    let p = &a[(t, t)];
    (t + 1..a.rows()).find(|&i| (t + 1..a.cols()).any(|j| !a[(i, j)].is_multiple_of(p)))
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    'diag: for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&a, t) else {
                break 'diag;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut cleared = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                cleared &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                cleared &= a[(t, j)].is_zero();
            }
            if !cleared {
                // a remainder smaller than the pivot is now in row or column t
                continue;
            }
            match first_non_multiple(&a, t) {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult { u, d: a, v }
}
