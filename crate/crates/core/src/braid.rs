//! Seifert matrices from braid closures, plus the built-in knot catalog.
//!
//! Conventions: letter `+i` is a right-handed crossing between strands `i`
//! and `i+1`, `-i` its inverse. The Seifert surface of the closure is one disk
//! per strand joined by a half-twisted band at each crossing. For every pair
//! of consecutive occurrences of the same generator index there is one loop
//! through the two bands. Entries are signed so that the positive trefoil
//! braid `[1, 1, 1]` has `sigma(S + S^T) = +2`, matching the catalog trefoil.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactla::{determinant, IntMatrix};
use crate::spinmu::{validate_seifert, EvenForm, SeifertMatrix, TwoKnot};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&letter) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(Error::BraidLetter { letter, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    fn index(letter: i64) -> usize {
        letter.unsigned_abs() as usize
    }

    /// Number of components of the closure: cycles of the underlying
    /// permutation.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = Self::index(l);
            perm.swap(i - 1, i);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
        cycles
    }

    /// Rotates the word left by `k` letters (a conjugation).
    pub fn rotated(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Adds a strand and appends `+-n` where `n` was the old strand count.
    pub fn stabilized(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let n = self.strands as i64;
        letters.push(if positive { n } else { -n });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Markov destabilization while the first or last generator occurs
    /// exactly once. The letter is rotated to the end of the word and
    /// dropped together with its outer strand.
    pub fn reduced(&self) -> Self {
        let mut w = self.clone();
        loop {
            if w.strands < 2 {
                return w;
            }
            let last = w.strands - 1;
            let count = |idx: usize| w.letters.iter().filter(|&&l| Self::index(l) == idx).count();
            if count(last) == 1 {
                let p = w
                    .letters
                    .iter()
                    .position(|&l| Self::index(l) == last)
                    .unwrap();
                let mut letters = w.letters[p + 1..].to_vec();
                letters.extend_from_slice(&w.letters[..p]);
                w = Self {
                    strands: w.strands - 1,
                    letters,
                };
            } else if count(1) == 1 {
                let p = w.letters.iter().position(|&l| Self::index(l) == 1).unwrap();
                let mut letters = w.letters[p + 1..].to_vec();
                letters.extend_from_slice(&w.letters[..p]);
                for l in &mut letters {
                    *l -= l.signum();
                }
                w = Self {
                    strands: w.strands - 1,
                    letters,
                };
            } else {
                return w;
            }
        }
    }
}

/// Seifert matrix of the closure of `w`, which must be a knot.
pub fn seifert_matrix_from_braid(w: &BraidWord) -> Result<SeifertMatrix> {
    let components = w.components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let w = w.reduced();
    let x = &w.letters;
    let idx = |p: usize| BraidWord::index(x[p]);

    // next[p]: following position with the same generator index
    let next: Vec<Option<usize>> = (0..x.len())
        .map(|p| (p + 1..x.len()).find(|&q| idx(q) == idx(p)))
        .collect();
    let loops: Vec<(usize, usize)> = next
        .iter()
        .enumerate()
        .filter_map(|(p, q)| q.map(|q| (p, q)))
        .collect();

    let n = loops.len();
    let mut s = IntMatrix::zeros(n, n);
    for (a, &(i, hi)) in loops.iter().enumerate() {
        s[(a, a)] = BigInt::from((x[i] + x[hi]).signum());
        for (b, &(j, hj)) in loops.iter().enumerate().skip(a + 1) {
            if hi > hj || hi < j {
                // nested or disjoint
                continue;
            }
            if hi == j {
                // consecutive loops sharing the band at position j
                if x[j] > 0 {
                    s[(a, b)] = BigInt::from(-1);
                } else {
                    s[(b, a)] = BigInt::from(1);
                }
            } else if idx(i) == idx(j) + 1 {
                s[(b, a)] = BigInt::from(1);
            } else if idx(j) == idx(i) + 1 {
                s[(a, b)] = BigInt::from(-1);
            }
        }
    }
    validate_seifert(s)
}

/// `det(S - t S^T)`, the Alexander polynomial evaluated at `t`.
pub fn alexander_at(s: &SeifertMatrix, t: &BigInt) -> BigInt {
    let m = s.matrix();
    determinant(&(m - &m.transpose().scale(t))).expect("Seifert matrices are square")
}

/// Positive-definite E8 form (Cartan matrix): even, unimodular, signature 8.
/// The Poincare homology sphere bounds it.
pub fn e8_form() -> IntMatrix {
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut q = IntMatrix::identity(8).scale(&BigInt::from(2));
    for (a, b) in edges {
        q[(a, b)] = BigInt::from(-1);
        q[(b, a)] = BigInt::from(-1);
    }
    q
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// Seifert matrix of the underlying 1-knot.
    pub seifert: SeifertMatrix,
    pub braid: BraidWord,
    /// Even form bounding the capped Seifert hypersurface, when the 2-knot is
    /// not the 2-twist spin of `seifert`.
    pub bounding_form: Option<IntMatrix>,
}

impl CatalogEntry {
    pub fn two_knot(&self) -> Result<TwoKnot> {
        Ok(match &self.bounding_form {
            Some(q) => TwoKnot::Bounded(EvenForm::new(q.clone())?),
            None => TwoKnot::TwoTwistSpin(self.seifert.clone()),
        })
    }
}

pub const CATALOG_NAMES: [&str; 4] = ["unknot", "trefoil", "figure8", "poincare"];

pub fn catalog(name: &str) -> Result<CatalogEntry> {
    let seifert =
        |rows: &[[i64; 2]]| validate_seifert(IntMatrix::from_rows(rows)).expect("catalog");
    let braid = |n, l: &[i64]| BraidWord::new(n, l.to_vec()).expect("catalog");
    let entry = match name {
        "unknot" => CatalogEntry {
            name: "unknot",
            description: "trivial knot; its spin is the trivial 2-knot",
            seifert: SeifertMatrix::unknot(),
            braid: braid(1, &[]),
            bounding_form: None,
        },
        "trefoil" => CatalogEntry {
            name: "trefoil",
            description: "2-twist spun trefoil",
            seifert: seifert(&[[1, 1], [0, 1]]),
            braid: braid(2, &[1, 1, 1]),
            bounding_form: None,
        },
        "figure8" => CatalogEntry {
            name: "figure8",
            description: "2-twist spun figure-eight knot",
            seifert: seifert(&[[1, 1], [0, -1]]),
            braid: braid(3, &[1, -2, 1, -2]),
            bounding_form: None,
        },
        "poincare" => CatalogEntry {
            name: "poincare",
            description: "5-twist spun trefoil; Seifert hypersurface is the punctured \
                          Poincare homology sphere, bounding the E8 form",
            seifert: seifert(&[[1, 1], [0, 1]]),
            braid: braid(2, &[1, 1, 1]),
            bounding_form: Some(e8_form()),
        },
        _ => {
            return Err(Error::UnknownCatalog {
                name: name.to_string(),
                available: CATALOG_NAMES.to_vec(),
            })
        }
    };
    Ok(entry)
}

/// `|det|`, `sigma` and cover homology of `S + S^T`: the congruence data the
/// braid constructor is checked against.
pub fn form_invariants(s: &SeifertMatrix) -> (BigInt, i64, crate::abelian::FiniteAbelianGroup) {
    let q = crate::spinmu::intersection_form(s);
    (
        determinant(&q).expect("square").abs(),
        crate::exactla::signature(&q).expect("symmetric"),
        crate::spinmu::branched_double_cover_h1(s),
    )
}
