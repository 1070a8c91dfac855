use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("{op}: expected a matrix with {expected} rows, got {rows}")]
    RowCount {
        op: &'static str,
        expected: usize,
        rows: usize,
    },

    #[error("matrix has {entries} entries, expected {rows}x{cols}")]
    Shape {
        rows: usize,
        cols: usize,
        entries: usize,
    },

    #[error("form is not symmetric: entry ({row},{col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },

    #[error("not a knot Seifert matrix: det(S - S^T) = {det}, expected +1 or -1")]
    NotKnotSeifert { det: BigInt },

    #[error("form not even: diagonal entry {index} is {entry}")]
    FormNotEven { index: usize, entry: BigInt },

    #[error("spin structure not unique; recipe inapplicable (form determinant {det} is even)")]
    SpinNotUnique { det: BigInt },

    #[error("invalid invariant factors {factors:?}: {reason}")]
    InvalidGroup {
        factors: Vec<BigInt>,
        reason: &'static str,
    },

    #[error("precondition failed: {hypothesis} is not of the form G + G")]
    Precondition { hypothesis: &'static str },

    #[error("braid letter {letter} is out of range for {strands} strands")]
    BraidLetter { letter: i64, strands: usize },

    #[error("braid must have at least one strand")]
    NoStrands,

    #[error("not a knot: braid closure has {components} components")]
    NotAKnot { components: usize },

    #[error("unknown catalog entry {name:?}; available: {}", available.join(", "))]
    UnknownCatalog {
        name: String,
        available: Vec<&'static str>,
    },

    #[error("cokernel Z^{free_rank} + torsion {torsion} is outside the alinking classification")]
    OutsideClassification { free_rank: usize, torsion: String },
}
