//! Random corpora shared by the property and acceptance suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use ribbon_core::{
    block_diag, catalog, validate_seifert, FiniteAbelianGroup, IntMatrix, SeifertMatrix,
};

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(rows, cols, entries).unwrap()
}

/// Product of random elementary matrices (row additions, swaps, negations).
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    if n == 0 {
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 | 1 if i != j => {
                let k = BigInt::from(*[-2i64, -1, 1, 2].choose(rng).unwrap());
                let mut e = IntMatrix::identity(n);
                e[(i, j)] = k;
                p = &e * &p;
            }
            2 => {
                let mut e = IntMatrix::identity(n);
                e[(i, i)] = BigInt::from(0);
                e[(j, j)] = BigInt::from(0);
                e[(i, j)] = BigInt::from(1);
                e[(j, i)] = BigInt::from(1);
                p = &e * &p;
            }
            _ => {
                let mut e = IntMatrix::identity(n);
                e[(i, i)] = BigInt::from(-1);
                p = &e * &p;
            }
        }
    }
    p
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> IntMatrix {
    let mut q = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = BigInt::from(rng.gen_range(-bound..=bound));
            q[(i, j)] = x.clone();
            q[(j, i)] = x;
        }
    }
    q
}

/// Symmetric matrices with many zeros, zero diagonals, or deficient rank, to
/// hit the zero-pivot paths.
pub fn random_degenerate_symmetric<R: Rng>(rng: &mut R, n: usize) -> IntMatrix {
    match rng.gen_range(0..3) {
        0 => {
            let mut q = random_symmetric(rng, n, 3);
            for i in 0..n {
                for j in 0..n {
                    if i <= j && rng.gen_bool(0.6) {
                        q[(i, j)] = BigInt::from(0);
                        q[(j, i)] = BigInt::from(0);
                    }
                }
            }
            q
        }
        1 => {
            let mut q = random_symmetric(rng, n, 3);
            for i in 0..n {
                q[(i, i)] = BigInt::from(0);
            }
            q
        }
        _ => {
            let k = rng.gen_range(0..=n);
            let b = random_matrix(rng, n, k, 3);
            let d = IntMatrix::from_diagonal((0..k).map(|_| BigInt::from(rng.gen_range(-2..=2))));
            &(&b * &d) * &b.transpose()
        }
    }
}

/// Chain `d_1 | ... | d_k` with `k <= max_len` and every `d_i <= max_factor`.
pub fn random_group<R: Rng>(rng: &mut R, max_len: usize, max_factor: u64) -> FiniteAbelianGroup {
    let len = rng.gen_range(0..=max_len);
    let mut chain: Vec<u64> = Vec::new();
    if len > 0 {
        chain.push(rng.gen_range(2..=max_factor));
        while chain.len() < len {
            let top = *chain.last().unwrap();
            let divisors: Vec<u64> = (2..=top).filter(|d| top % d == 0).collect();
            chain.push(*divisors.choose(rng).unwrap());
        }
    }
    chain.reverse();
    FiniteAbelianGroup::from_invariant_factors(chain.into_iter().map(BigInt::from).collect())
        .unwrap()
}

fn seeds() -> Vec<IntMatrix> {
    ["unknot", "trefoil", "figure8"]
        .iter()
        .map(|n| catalog(n).unwrap().seifert.into_matrix())
        .collect()
}

/// `[[S, v, 0], [0, 0, 1], [0, 0, 0]]` or its transpose-pattern twin: an
/// elementary S-equivalence enlargement. The form gains a hyperbolic summand.
pub fn stabilize<R: Rng>(rng: &mut R, s: &IntMatrix) -> IntMatrix {
    let n = s.rows();
    let mut out = block_diag(s, &IntMatrix::zeros(2, 2));
    let column = rng.gen_bool(0.5);
    for i in 0..n {
        let x = BigInt::from(rng.gen_range(-2..=2));
        if column {
            out[(i, n)] = x;
        } else {
            out[(n, i)] = x;
        }
    }
    if column {
        out[(n, n + 1)] = BigInt::from(1);
    } else {
        out[(n + 1, n)] = BigInt::from(1);
    }
    out
}

/// Valid Seifert matrix of size at most `max_size`, grown from catalog seeds
/// by block sums, mirroring, stabilization and unimodular congruence.
pub fn random_seifert<R: Rng>(rng: &mut R, max_size: usize) -> SeifertMatrix {
    let seeds = seeds();
    let mut s = seeds.choose(rng).unwrap().clone();
    for _ in 0..rng.gen_range(0..6) {
        match rng.gen_range(0..4) {
            0 if s.rows() + 2 <= max_size => {
                let t = seeds.choose(rng).unwrap();
                s = block_diag(&s, t);
            }
            1 if s.rows() + 2 <= max_size => s = stabilize(rng, &s),
            2 => s = -&s,
            _ => {
                let p = random_unimodular(rng, s.rows(), 4);
                s = &(&p.transpose() * &s) * &p;
            }
        }
    }
    validate_seifert(s).expect("generated matrix must be a knot Seifert matrix")
}

/// Knot-closing braid word, by rejection.
pub fn random_knot_braid<R: Rng>(
    rng: &mut R,
    max_strands: usize,
    max_len: usize,
) -> ribbon_core::BraidWord {
    loop {
        let strands = rng.gen_range(1..=max_strands);
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<i64> = if strands == 1 {
            Vec::new()
        } else {
            (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..strands as i64);
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect()
        };
        let w = ribbon_core::BraidWord::new(strands, letters).unwrap();
        if w.components() == 1 {
            return w;
        }
    }
}
