//! Exact obstructions to ribbon-move equivalence of 2-knots.
//!
//! Built on arbitrary-precision integer linear algebra ([`exactla`]): Smith
//! normal forms, determinants, and signatures computed without floating
//! point. On top of that sit finite abelian groups ([`abelian`]), the
//! mu-invariant of twist-spun knots ([`spinmu`]), the ribbon-move verdict
//! engine ([`obstruct`]), Seifert matrices of braid closures ([`braid`]), and
//! the alinking number of `(S^2, T^2)`-links ([`alink`]).

pub mod abelian;
pub mod alink;
pub mod braid;
mod error;
pub mod exactla;
pub mod obstruct;
pub mod spinmu;

#[cfg(test)]
mod oracle;

pub use abelian::{from_presentation, transitive_double, FiniteAbelianGroup, Presentation};
pub use alink::{alinking, mod2_alinking, InducedMap};
pub use braid::{alexander_at, catalog, seifert_matrix_from_braid, BraidWord, CatalogEntry};
pub use error::{Error, Result};
pub use exactla::{
    block_diag, cokernel, determinant, determinant_is_odd, signature, smith_normal_form, IntMatrix,
    SnfResult,
};
pub use obstruct::{obstruct_ribbon_equivalent, obstruct_ribbon_trivial, Conclusion, Verdict};
pub use spinmu::{
    branched_double_cover_h1, intersection_form, mu_boundary_link_sum, mu_from_even_form,
    mu_two_twist_spin, validate_seifert, EvenForm, Mu, SeifertMatrix, TwoKnot,
};
