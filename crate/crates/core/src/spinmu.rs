//! Rokhlin mu-invariants of 2-knots from Seifert matrices and even bounding
//! forms.
//!
//! Two routes are supported. For the 2-twist spin of a 1-knot with Seifert
//! matrix `S`, the punctured branched double cover is a Seifert hypersurface,
//! it bounds a spin 4-manifold with intersection form `S + S^T`, and the
//! cover has a unique spin structure because `det(S + S^T)` is odd. So mu is
//! `sigma(S + S^T) mod 16`. More generally any even form with odd determinant
//! bounding the capped hypersurface gives mu as its signature mod 16.
//!
//! Sign convention: `[[1,1],[0,1]]` has `sigma(S + S^T) = +2`, so it gives
//! mu = 2; its mirror gives 14.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::abelian::{from_presentation, FiniteAbelianGroup};
use crate::error::{Error, Result};
use crate::exactla::{block_diag, determinant, determinant_is_odd, signature, IntMatrix};

/// Seifert matrix of a 1-knot: square with `det(S - S^T) = +-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    pub fn unknot() -> Self {
        Self(IntMatrix::zeros(0, 0))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn genus(&self) -> usize {
        self.0.rows() / 2
    }
}

pub fn validate_seifert(s: IntMatrix) -> Result<SeifertMatrix> {
    s.require_square("validate_seifert")?;
    let det = determinant(&(&s - &s.transpose()))?;
    if det.abs().is_one() {
        Ok(SeifertMatrix(s))
    } else {
        Err(Error::NotKnotSeifert { det })
    }
}

impl TryFrom<IntMatrix> for SeifertMatrix {
    type Error = Error;

    fn try_from(s: IntMatrix) -> Result<Self> {
        validate_seifert(s)
    }
}

/// `S + S^T`, the intersection form of the bounding 4-manifold.
pub fn intersection_form(s: &SeifertMatrix) -> IntMatrix {
    &s.0 + &s.0.transpose()
}

/// First homology of the branched double cover, presented by `S + S^T`.
pub fn branched_double_cover_h1(s: &SeifertMatrix) -> FiniteAbelianGroup {
    let p = from_presentation(&intersection_form(s));
    debug_assert!(p.is_finite(), "knot forms have odd determinant");
    p.torsion
}

/// Residue class mod 16, stored as `0..=15`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mu(u8);

impl Mu {
    pub const ZERO: Mu = Mu(0);

    pub fn new(value: i64) -> Self {
        Mu(value.rem_euclid(16) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl From<i64> for Mu {
    fn from(value: i64) -> Self {
        Mu::new(value)
    }
}

impl Add for Mu {
    type Output = Mu;

    fn add(self, rhs: Mu) -> Mu {
        Mu((self.0 + rhs.0) % 16)
    }
}

impl std::iter::Sum for Mu {
    fn sum<I: Iterator<Item = Mu>>(iter: I) -> Mu {
        iter.fold(Mu::ZERO, Add::add)
    }
}

impl fmt::Display for Mu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 16", self.0)
    }
}

/// Symmetric form with even diagonal and odd determinant: the intersection
/// form of a spin 4-manifold whose boundary has a unique spin structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenForm {
    form: IntMatrix,
    det: BigInt,
}

impl EvenForm {
    pub fn new(q: IntMatrix) -> Result<Self> {
        check_even_unimodular_mod2(&q)?;
        let det = determinant(&q)?;
        Ok(Self { form: q, det })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.form
    }

    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    pub fn signature(&self) -> i64 {
        signature(&self.form).expect("validated symmetric")
    }

    pub fn mu(&self) -> Mu {
        Mu::new(self.signature())
    }

    /// Homology of the boundary 3-manifold, presented by the form.
    pub fn boundary_h1(&self) -> FiniteAbelianGroup {
        from_presentation(&self.form).torsion
    }
}

/// mu of the 2-twist spin of the knot with Seifert matrix `S`.
pub fn mu_two_twist_spin(s: &SeifertMatrix) -> Result<Mu> {
    let q = intersection_form(s);
    let det = determinant(&q)?;
    if det.is_even() {
        return Err(Error::SpinNotUnique { det });
    }
    Ok(Mu::new(signature(&q)?))
}

pub fn mu_from_even_form(q: &IntMatrix) -> Result<Mu> {
    check_even_unimodular_mod2(q)?;
    Ok(Mu::new(signature(q)?))
}

/// Symmetric, even diagonal, odd determinant.
fn check_even_unimodular_mod2(q: &IntMatrix) -> Result<()> {
    q.require_symmetric("even form")?;
    if let Some((index, entry)) = q
        .diagonal()
        .into_iter()
        .enumerate()
        .find(|(_, d)| d.is_odd())
    {
        return Err(Error::FormNotEven { index, entry });
    }
    if !determinant_is_odd(q)? {
        return Err(Error::SpinNotUnique {
            det: determinant(q)?,
        });
    }
    Ok(())
}

/// mu of a boundary link whose components have Seifert matrices `components`:
/// the sum of component invariants, which agrees with mu of the block sum of
/// their forms.
pub fn mu_boundary_link_sum(components: &[SeifertMatrix]) -> Result<Mu> {
    let total = components
        .iter()
        .map(mu_two_twist_spin)
        .sum::<Result<Mu>>()?;
    debug_assert_eq!(
        {
            let block = components
                .iter()
                .map(intersection_form)
                .fold(IntMatrix::zeros(0, 0), |acc, q| block_diag(&acc, &q));
            mu_from_even_form(&block)
        },
        Ok(total)
    );
    Ok(total)
}

/// A 2-knot as far as the invariants here can see it: a Seifert hypersurface
/// capped off to a closed 3-manifold bounding a known even form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoKnot {
    /// 2-twist spin of a 1-knot; the form is `S + S^T`.
    TwoTwistSpin(SeifertMatrix),
    /// Any 2-knot with a Seifert hypersurface whose closure bounds this form.
    Bounded(EvenForm),
}

impl TwoKnot {
    pub fn trivial() -> Self {
        TwoKnot::TwoTwistSpin(SeifertMatrix::unknot())
    }

    pub fn form(&self) -> IntMatrix {
        match self {
            TwoKnot::TwoTwistSpin(s) => intersection_form(s),
            TwoKnot::Bounded(q) => q.matrix().clone(),
        }
    }

    pub fn mu(&self) -> Result<Mu> {
        match self {
            TwoKnot::TwoTwistSpin(s) => mu_two_twist_spin(s),
            TwoKnot::Bounded(q) => Ok(q.mu()),
        }
    }

    /// First homology of the Seifert hypersurface used for the torsion test.
    pub fn hypersurface_h1(&self) -> FiniteAbelianGroup {
        match self {
            TwoKnot::TwoTwistSpin(s) => branched_double_cover_h1(s),
            TwoKnot::Bounded(q) => q.boundary_h1(),
        }
    }
}

impl From<SeifertMatrix> for TwoKnot {
    fn from(s: SeifertMatrix) -> Self {
        TwoKnot::TwoTwistSpin(s)
    }
}

impl From<EvenForm> for TwoKnot {
    fn from(q: EvenForm) -> Self {
        TwoKnot::Bounded(q)
    }
}
