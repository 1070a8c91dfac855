//! Obstructions to ribbon-move equivalence of 2-knots.
//!
//! Two necessary conditions are checked, in order:
//!
//! 1. ribbon-move equivalent 2-links have equal mu-invariants;
//! 2. for equivalent `L1`, `L2` with any Seifert hypersurfaces `W1`, `W2`, the
//!    torsion of `H1(W1) + H1(W2)` is `G + G` for some finite abelian `G`.
//!
//! The hypersurface used for a 2-twist spin is the punctured branched double
//! cover. A verdict either names the condition that fails or reports that
//! none does; it never claims the knots are equivalent.

use std::fmt;

use crate::abelian::FiniteAbelianGroup;
use crate::error::Result;
use crate::spinmu::{Mu, TwoKnot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conclusion {
    ObstructedByMu,
    ObstructedByTorsion,
    NoObstructionFound,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::ObstructedByMu => "ObstructedByMu",
            Conclusion::ObstructedByTorsion => "ObstructedByTorsion",
            Conclusion::NoObstructionFound => "NoObstructionFound",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The mu-invariants differ.
    ObstructedByMu { left: Mu, right: Mu },
    /// The combined torsion is not a double.
    ObstructedByTorsion { torsion: FiniteAbelianGroup },
    /// Both tests pass: equal mu and `torsion = half + half`.
    NoObstructionFound {
        mu: Mu,
        torsion: FiniteAbelianGroup,
        half: FiniteAbelianGroup,
    },
}

pub const MU_TAG: &str = "mu-invariance under ribbon moves";
pub const TORSION_TAG: &str = "G+G torsion condition on Seifert hypersurfaces";

impl Verdict {
    pub fn conclusion(&self) -> Conclusion {
        match self {
            Verdict::ObstructedByMu { .. } => Conclusion::ObstructedByMu,
            Verdict::ObstructedByTorsion { .. } => Conclusion::ObstructedByTorsion,
            Verdict::NoObstructionFound { .. } => Conclusion::NoObstructionFound,
        }
    }

    pub fn is_obstructed(&self) -> bool {
        !matches!(self, Verdict::NoObstructionFound { .. })
    }

    /// The necessary condition that fired, if any.
    pub fn theorem_tag(&self) -> Option<&'static str> {
        match self {
            Verdict::ObstructedByMu { .. } => Some(MU_TAG),
            Verdict::ObstructedByTorsion { .. } => Some(TORSION_TAG),
            Verdict::NoObstructionFound { .. } => None,
        }
    }

    pub fn explanation(&self) -> String {
        match self {
            Verdict::ObstructedByMu { left, right } => format!(
                "mu differs ({} vs {}); ribbon-move equivalent 2-knots have equal mu",
                left.value(),
                right.value()
            ),
            Verdict::ObstructedByTorsion { torsion } => format!(
                "torsion {torsion} of H1(W1) + H1(W2) is not of the form G + G, \
                 so the 2-knots are not ribbon-move equivalent"
            ),
            Verdict::NoObstructionFound { mu, torsion, half } => format!(
                "mu agrees ({}) and torsion {torsion} = G + G with G = {half}; \
                 no obstruction found, equivalence is not decided",
                mu.value()
            ),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.conclusion(), self.explanation())
    }
}

pub fn obstruct_ribbon_equivalent(a: &TwoKnot, b: &TwoKnot) -> Result<Verdict> {
    let (left, right) = (a.mu()?, b.mu()?);
    if left != right {
        return Ok(Verdict::ObstructedByMu { left, right });
    }
    let torsion = a.hypersurface_h1().direct_sum(&b.hypersurface_h1());
    Ok(match torsion.is_double() {
        None => Verdict::ObstructedByTorsion { torsion },
        Some(half) => Verdict::NoObstructionFound {
            mu: left,
            torsion,
            half,
        },
    })
}

/// Compares against the trivial 2-knot, whose 3-ball hypersurface has no
/// homology.
pub fn obstruct_ribbon_trivial(k: &TwoKnot) -> Result<Verdict> {
    obstruct_ribbon_equivalent(k, &TwoKnot::trivial())
}
