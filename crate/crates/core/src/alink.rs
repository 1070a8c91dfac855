//! Alinking number of `(S^2, T^2)`-links.
//!
//! The input is the map `H^1(S^4 - L_S) -> H^1(L_T) = Z^2` induced by
//! inclusion, as a 2-row integer matrix. The invariant reads the cokernel
//! `Z^2 / Im`:
//!
//! | cokernel      | value |
//! |---------------|-------|
//! | `Z + Z`       | 0     |
//! | `Z`           | 1     |
//! | `Z + Z/n`     | n (n >= 2) |
//!
//! Any other cokernel shape is reported as an error.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{cokernel, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap(IntMatrix);

impl InducedMap {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != 2 {
            return Err(Error::RowCount {
                op: "induced map",
                expected: 2,
                rows: matrix.rows(),
            });
        }
        Ok(Self(matrix))
    }

    pub fn zero() -> Self {
        Self(IntMatrix::zeros(2, 0))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }
}

pub fn alinking(iota: &InducedMap) -> Result<BigInt> {
    let (free_rank, torsion) = cokernel(&iota.0);
    match (free_rank, torsion.invariant_factors()) {
        (2, []) => Ok(BigInt::zero()),
        (1, []) => Ok(BigInt::one()),
        (1, [n]) => Ok(n.clone()),
        _ => Err(Error::OutsideClassification {
            free_rank,
            torsion: torsion.to_string(),
        }),
    }
}

pub fn mod2_alinking(iota: &InducedMap) -> Result<u8> {
    Ok(if alinking(iota)?.is_even() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(rows: &[Vec<i64>]) -> InducedMap {
        InducedMap::new(IntMatrix::try_from_rows(rows, None).unwrap()).unwrap()
    }

    fn v(rows: &[Vec<i64>]) -> Result<BigInt> {
        alinking(&map(rows))
    }

    #[test]
    fn three_branches() {
        assert_eq!(alinking(&InducedMap::zero()).unwrap(), BigInt::zero());
        assert_eq!(v(&[vec![0], vec![0]]).unwrap(), BigInt::zero());
        assert_eq!(v(&[vec![1], vec![0]]).unwrap(), BigInt::one());
        assert_eq!(v(&[vec![2], vec![4]]).unwrap(), BigInt::from(2));
        assert_eq!(v(&[vec![3], vec![0]]).unwrap(), BigInt::from(3));
        assert_eq!(v(&[vec![6, 4], vec![0, 0]]).unwrap(), BigInt::from(2));
    }

    #[test]
    fn mod_two() {
        assert_eq!(mod2_alinking(&map(&[vec![2], vec![4]])).unwrap(), 0);
        assert_eq!(mod2_alinking(&map(&[vec![3], vec![0]])).unwrap(), 1);
        assert_eq!(mod2_alinking(&InducedMap::zero()).unwrap(), 0);
    }

    #[test]
    fn outside_classification() {
        // rank-2 image: finite cokernel
        assert!(matches!(
            v(&[vec![1, 0], vec![0, 3]]),
            Err(Error::OutsideClassification { free_rank: 0, .. })
        ));
        assert!(matches!(
            v(&[vec![1, 0], vec![0, 1]]),
            Err(Error::OutsideClassification { free_rank: 0, .. })
        ));
    }

    #[test]
    fn needs_two_rows() {
        assert!(matches!(
            InducedMap::new(IntMatrix::zeros(3, 1)),
            Err(Error::RowCount { rows: 3, .. })
        ));
    }
}
