//! Finite abelian groups in invariant-factor form.
//!
//! A group is stored as its divisibility chain `d_1 | d_2 | ... | d_k` with
//! every `d_i >= 2`; the empty chain is the trivial group. Because the chain
//! is canonical, isomorphism is list equality. Elementary divisors are only
//! computed when asked for.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactla::{cokernel, IntMatrix};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    factors: Vec<BigInt>,
}

/// Cokernel of a presentation matrix split into free rank and torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub free_rank: usize,
    pub torsion: FiniteAbelianGroup,
}

impl Presentation {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }
}

/// Reads `M` as a presentation matrix (relations are columns). For a square
/// `M` with nonzero determinant the group is finite; otherwise the torsion
/// part comes back with `free_rank > 0`.
pub fn from_presentation(m: &IntMatrix) -> Presentation {
    let (free_rank, torsion) = cokernel(m);
    Presentation { free_rank, torsion }
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_cyclic_orders([BigInt::from(n)]).expect("positive order")
    }

    pub(crate) fn from_chain_unchecked(factors: Vec<BigInt>) -> Self {
        debug_assert!(Self::check_chain(&factors).is_ok());
        Self { factors }
    }

    fn check_chain(factors: &[BigInt]) -> std::result::Result<(), &'static str> {
        if factors.iter().any(|d| *d < BigInt::from(2)) {
            return Err("every invariant factor must be at least 2");
        }
        if factors.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err("each invariant factor must divide the next");
        }
        Ok(())
    }

    /// Wraps a chain that is already canonical.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Result<Self> {
        match Self::check_chain(&factors) {
            Ok(()) => Ok(Self { factors }),
            Err(reason) => Err(Error::InvalidGroup { factors, reason }),
        }
    }

    /// `Z/n_1 + Z/n_2 + ...` for arbitrary positive orders, brought into
    /// canonical form by repeated `(a, b) -> (gcd, lcm)` exchanges.
    pub fn from_cyclic_orders<I: IntoIterator<Item = BigInt>>(orders: I) -> Result<Self> {
        let mut xs: Vec<BigInt> = orders.into_iter().collect();
        if xs.iter().any(|n| !n.is_positive()) {
            return Err(Error::InvalidGroup {
                factors: xs,
                reason: "cyclic orders must be positive",
            });
        }
        xs.retain(|n| !n.is_one());
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                let g = xs[i].gcd(&xs[j]);
                let l = xs[i].lcm(&xs[j]);
                xs[i] = g;
                xs[j] = l;
            }
        }
        xs.retain(|n| !n.is_one());
        Ok(Self { factors: xs })
    }

    pub fn from_elementary_divisors<I: IntoIterator<Item = (BigInt, u32)>>(divisors: I) -> Self {
        Self::from_cyclic_orders(
            divisors
                .into_iter()
                .map(|(p, k)| num_traits::pow(p, k as usize)),
        )
        .expect("prime powers are positive")
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    /// Prime-power decomposition as `(p, k)` pairs, sorted, with repetition.
    pub fn elementary_divisors(&self) -> Vec<(BigInt, u32)> {
        let mut out: Vec<(BigInt, u32)> = self
            .factors
            .iter()
            .flat_map(|d| factor(d.clone()))
            .collect();
        out.sort();
        out
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic_orders(self.factors.iter().chain(&other.factors).cloned())
            .expect("invariant factors are positive")
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self == other
    }

    /// Returns `H` with `self = H + H` when one exists.
    ///
    /// The chain of `H + H` is the chain of `H` with every factor repeated, so
    /// this is the same as asking that each elementary divisor `p^k` occur an
    /// even number of times.
    pub fn is_double(&self) -> Option<Self> {
        if self.factors.len() % 2 != 0 {
            return None;
        }
        let mut half = Vec::with_capacity(self.factors.len() / 2);
        for pair in self.factors.chunks(2) {
            if pair[0] != pair[1] {
                return None;
            }
            half.push(pair[0].clone());
        }
        Some(Self { factors: half })
    }
}

/// Given `A + B = X + X` and `B + C = Y + Y`, produces `P` with `A + C = P + P`.
///
/// Every elementary divisor then has even total multiplicity in `A + C`, and
/// `P` takes half of each.
pub fn transitive_double(
    a: &FiniteAbelianGroup,
    b: &FiniteAbelianGroup,
    c: &FiniteAbelianGroup,
) -> Result<FiniteAbelianGroup> {
    if a.direct_sum(b).is_double().is_none() {
        return Err(Error::Precondition {
            hypothesis: "A + B",
        });
    }
    if b.direct_sum(c).is_double().is_none() {
        return Err(Error::Precondition {
            hypothesis: "B + C",
        });
    }
    Ok(a.direct_sum(c)
        .is_double()
        .expect("A + C is a double whenever A + B and B + C are"))
}

fn factor(mut n: BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut k = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            k += 1;
        }
        if k > 0 {
            out.push((p.clone(), k));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("0");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "Z{d}")?;
        }
        Ok(())
    }
}

impl Serialize for FiniteAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.factors.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for FiniteAbelianGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        let factors = raw
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| de::Error::custom(format!("invalid integer {s:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Self::from_invariant_factors(factors).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use num_traits::Zero;

    fn g(factors: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::from_cyclic_orders(factors.iter().map(|&x| BigInt::from(x))).unwrap()
    }

    fn chain(x: &FiniteAbelianGroup) -> Vec<u64> {
        x.invariant_factors()
            .iter()
            .map(|d| u64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn presentations_from_knot_forms() {
        let p = from_presentation(&IntMatrix::from_rows(&[[2, 1], [1, 2]]));
        assert!(p.is_finite());
        assert_eq!(chain(&p.torsion), vec![3]);
        let p = from_presentation(&IntMatrix::from_rows(&[[2, 1], [1, -2]]));
        assert_eq!(chain(&p.torsion), vec![5]);
        assert!(from_presentation(&IntMatrix::identity(4))
            .torsion
            .is_trivial());
    }

    #[test]
    fn presentation_with_free_part() {
        let p = from_presentation(&IntMatrix::from_rows(&[[2, 0], [0, 0]]));
        assert_eq!(p.free_rank, 1);
        assert!(!p.is_finite());
        assert_eq!(chain(&p.torsion), vec![2]);
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(chain(&g(&[2]).direct_sum(&g(&[2]))), vec![2, 2]);
        assert_eq!(chain(&g(&[2]).direct_sum(&g(&[3]))), vec![6]);
        let sum = g(&[4, 2]).direct_sum(&g(&[8]));
        let merged: Vec<BigInt> = [2u64, 2, 2, 1, 1, 1]
            .iter()
            .zip([1u32, 2, 3, 0, 0, 0])
            .filter(|&(_, k)| k > 0)
            .map(|(&p, k)| BigInt::from(p).pow(k))
            .collect();
        assert!(oracle::isomorphic(sum.invariant_factors(), &merged));
        assert_eq!(chain(&sum), vec![2, 4, 8]);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(g(&[6]).is_isomorphic(&g(&[2, 3])));
        assert!(!g(&[4]).is_isomorphic(&g(&[2, 2])));
        assert!(FiniteAbelianGroup::trivial().is_isomorphic(&g(&[])));
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(g(&[3]).is_double(), None);
        assert_eq!(g(&[5]).is_double(), None);
        assert_eq!(g(&[2, 2]).is_double(), Some(g(&[2])));
        let big = g(&[2, 2, 4, 4]);
        let half = big.is_double().unwrap();
        assert_eq!(chain(&half), vec![2, 4]);
        assert!(oracle::is_double_of(
            big.invariant_factors(),
            half.invariant_factors()
        ));
        assert_eq!(
            FiniteAbelianGroup::trivial().is_double(),
            Some(FiniteAbelianGroup::trivial())
        );
        // Z2 + Z6 = Z2 + Z2 + Z3: the 3-part has odd multiplicity
        assert_eq!(g(&[2, 6]).is_double(), None);
        assert!(!oracle::is_some_double(&[BigInt::from(2), BigInt::from(6)]));
    }

    #[test]
    fn transitive_double_examples() {
        let (a, b, c) = (g(&[2]), g(&[2, 4, 4]), g(&[2]));
        assert!(oracle::is_double_of(
            a.direct_sum(&b).invariant_factors(),
            g(&[2, 4]).invariant_factors()
        ));
        assert!(oracle::is_double_of(
            b.direct_sum(&c).invariant_factors(),
            g(&[2, 4]).invariant_factors()
        ));
        let p = transitive_double(&a, &b, &c).unwrap();
        assert!(oracle::is_double_of(
            a.direct_sum(&c).invariant_factors(),
            p.invariant_factors()
        ));
        assert_eq!(p, g(&[2]));

        let t = FiniteAbelianGroup::trivial();
        assert_eq!(transitive_double(&t, &t, &t).unwrap(), t);

        let z8 = g(&[8]);
        assert_eq!(transitive_double(&z8, &z8, &z8).unwrap(), z8);
    }

    #[test]
    fn transitive_double_names_failing_hypothesis() {
        let err = transitive_double(&g(&[2]), &g(&[3]), &g(&[3])).unwrap_err();
        assert_eq!(
            err,
            Error::Precondition {
                hypothesis: "A + B"
            }
        );
        let err = transitive_double(&g(&[3]), &g(&[3]), &g(&[5])).unwrap_err();
        assert_eq!(
            err,
            Error::Precondition {
                hypothesis: "B + C"
            }
        );
    }

    #[test]
    fn elementary_divisors_round_trip() {
        let x = g(&[2, 12, 360]);
        let ed = x.elementary_divisors();
        assert_eq!(FiniteAbelianGroup::from_elementary_divisors(ed), x);
    }

    #[test]
    fn rejects_bad_chains() {
        let bad = |v: &[i64]| {
            FiniteAbelianGroup::from_invariant_factors(v.iter().map(|&x| BigInt::from(x)).collect())
        };
        assert!(bad(&[2, 3]).is_err());
        assert!(bad(&[1, 2]).is_err());
        assert!(bad(&[2, 4]).is_ok());
        assert!(FiniteAbelianGroup::from_cyclic_orders([BigInt::zero()]).is_err());
    }

    #[test]
    fn rendering_and_json() {
        assert_eq!(g(&[2, 4, 8]).to_string(), "Z2 ⊕ Z4 ⊕ Z8");
        assert_eq!(FiniteAbelianGroup::trivial().to_string(), "0");
        let json = serde_json::to_string(&g(&[2, 4])).unwrap();
        assert_eq!(json, r#"["2","4"]"#);
        assert_eq!(
            serde_json::from_str::<FiniteAbelianGroup>(&json).unwrap(),
            g(&[2, 4])
        );
        assert!(serde_json::from_str::<FiniteAbelianGroup>(r#"["2","3"]"#).is_err());
    }
}
