//! Brute-force reference computations for tests.
//!
//! Nothing here touches the library's own algorithms: determinants come from
//! cofactor expansion, invariant factors from gcds of minors, signatures from
//! Sturm sequences on the characteristic polynomial, and group questions from
//! counting elements killed by `k`. Integration tests pull this file in with
//! `#[path]`, so it must only depend on external crates.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rows = Vec<Vec<BigInt>>;

pub fn rows_i64(rows: &[Vec<i64>]) -> Rows {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &Rows) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Rows = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det_cofactor(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors (nonzero diagonal of the Smith form) as ratios of
/// determinantal divisors: `d_k = gcd of all k x k minors`.
pub fn invariant_factors_by_minors(m: &Rows, cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let minor: Rows = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                g = g.gcd(&det_cofactor(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let q = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            let t = &q * c;
            r[i + shift] -= t;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn derivative(p: &Poly) -> Poly {
    let mut d: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut d);
    d
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn eval(p: &Poly, x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Distinct real roots of `p` in `(0, inf)` and `(-inf, 0)`, assuming `p(0) != 0`.
fn distinct_roots_by_sign(p: &Poly) -> (usize, usize) {
    let mut seq = vec![p.clone(), derivative(p)];
    while !seq.last().unwrap().is_empty() {
        let n = seq.len();
        let r = poly_rem(&seq[n - 2], &seq[n - 1]);
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq.pop();
    let at_zero = variations(seq.iter().map(|q| sign_of(&eval(q, &BigRational::zero()))));
    let at_pos_inf = variations(seq.iter().map(|q| sign_of(q.last().unwrap())));
    let at_neg_inf = variations(seq.iter().map(|q| {
        let s = sign_of(q.last().unwrap());
        if (q.len() - 1) % 2 == 0 {
            s
        } else {
            -s
        }
    }));
    (at_zero - at_pos_inf, at_neg_inf - at_zero)
}

/// Characteristic polynomial `det(xI - A)` by Faddeev-LeVerrier, coefficients
/// from the constant term upward.
pub fn char_poly(a: &Rows) -> Vec<BigRational> {
    let n = a.len();
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let am: Vec<Vec<BigRational>> = a.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    s += &am[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &am[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Signature of a symmetric matrix: positive minus negative eigenvalues,
/// counted with multiplicity through the chain `p, gcd(p, p'), ...`.
pub fn sturm_signature(a: &Rows) -> i64 {
    let mut p = char_poly(a);
    while p.first().is_some_and(Zero::is_zero) {
        p.remove(0);
    }
    let (mut pos, mut neg) = (0usize, 0usize);
    while p.len() > 1 {
        let (dp, dn) = distinct_roots_by_sign(&p);
        pos += dp;
        neg += dn;
        p = poly_gcd(&p, &derivative(&p));
    }
    pos as i64 - neg as i64
}

/// `|{x in G : kx = 0}|` for `G = Z/d_1 + ... + Z/d_m`.
pub fn killed_by(orders: &[BigInt], k: &BigInt) -> BigInt {
    orders.iter().map(|d| d.gcd(k)).product()
}

fn exponent(orders: &[BigInt]) -> BigInt {
    orders.iter().fold(BigInt::one(), |acc, d| acc.lcm(d))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            let other = n / &i;
            if other != i {
                out.push(other);
            }
        }
        i += 1;
    }
    out
}

/// Two finite abelian groups, given as lists of cyclic orders, are isomorphic
/// iff they have the same number of elements killed by every `k`.
pub fn isomorphic(a: &[BigInt], b: &[BigInt]) -> bool {
    let e = exponent(a).lcm(&exponent(b));
    divisors(&e)
        .iter()
        .all(|k| killed_by(a, k) == killed_by(b, k))
}

/// `g = p + p` checked by element counting.
pub fn is_double_of(g: &[BigInt], p: &[BigInt]) -> bool {
    let e = exponent(g).lcm(&exponent(p));
    divisors(&e).iter().all(|k| {
        let h = killed_by(p, k);
        killed_by(g, k) == &h * &h
    })
}

/// A finite abelian group is some `H + H` iff every killed-by count is a
/// perfect square.
pub fn is_some_double(g: &[BigInt]) -> bool {
    divisors(&exponent(g)).iter().all(|k| {
        let c = killed_by(g, k);
        let r = c.sqrt();
        &r * &r == c
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn oracle_sanity() {
        assert_eq!(det_cofactor(&rows_i64(&[vec![2, 1], vec![1, 2]])), b(3));
        assert_eq!(
            invariant_factors_by_minors(&rows_i64(&[vec![2, 4], vec![6, 8]]), 2),
            vec![b(2), b(4)]
        );
        assert_eq!(sturm_signature(&rows_i64(&[vec![1, 0], vec![0, 1]])), 2);
        assert_eq!(sturm_signature(&rows_i64(&[vec![0, 1], vec![1, 0]])), 0);
        assert_eq!(sturm_signature(&rows_i64(&[vec![-3, 0], vec![0, 0]])), -1);
        assert!(isomorphic(&[b(6)], &[b(2), b(3)]));
        assert!(!isomorphic(&[b(4)], &[b(2), b(2)]));
        assert!(is_some_double(&[b(2), b(2), b(4), b(4)]));
        assert!(!is_some_double(&[b(3)]));
        assert!(!is_some_double(&[b(2), b(4)]));
    }
}
