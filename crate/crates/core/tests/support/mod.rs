//! Helpers shared by the integration test targets: the paper's example
//! matrices, seeded random generators for the matrix families under test, and
//! the structural bound checks every returned companion must satisfy.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;

use quasicartan::matrix::{IntMatrix, Rational};

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows)
}

pub fn paper_b() -> IntMatrix {
    m(&[&[0, 1, 1, 0], &[-1, 0, 0, 1], &[-1, 0, 0, 1], &[0, -1, -1, 0]])
}

pub fn paper_c() -> IntMatrix {
    m(&[&[2, -1, 1, 0], &[-1, 2, 0, 1], &[1, 0, 2, 1], &[0, 1, 1, 2]])
}

pub fn paper_c_plus() -> IntMatrix {
    m(&[&[2, 1, 1, 0], &[1, 2, 0, 1], &[1, 0, 2, 1], &[0, 1, 1, 2]])
}

/// Skew-symmetric matrix with every off-diagonal magnitude 1.
pub fn all_ones_skew(n: usize) -> IntMatrix {
    let mut b = IntMatrix::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            b[(i, j)] = BigInt::from(1);
            b[(j, i)] = BigInt::from(-1);
        }
    }
    b
}

/// Uniform random matrix with entries in `[lo, hi]`.
pub fn random_matrix(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> IntMatrix {
    let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(lo..=hi)).collect();
    IntMatrix::from_flat_i64(n, &entries).expect("length matches")
}

/// Random symmetrizable matrix via `c_ij = s_ij * d_j` with `S` symmetric:
/// `diag(d)` is then a symmetrizer.
pub fn random_symmetrizable(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let mut c = IntMatrix::zero(n);
    for i in 0..n {
        c[(i, i)] = BigInt::from(rng.gen_range(-2..=2i64));
        for j in i + 1..n {
            let s = rng.gen_range(-2..=2i64);
            c[(i, j)] = BigInt::from(s * d[j]);
            c[(j, i)] = BigInt::from(s * d[i]);
        }
    }
    c
}

/// Random skew-symmetrizable matrix via `b_ij = u * t * d_j`,
/// `b_ji = -u * t * d_i`: `diag(d)` is then a skew-symmetrizer. Magnitudes
/// stay within `t_max * d_max`.
pub fn random_skew_symmetrizable(rng: &mut impl Rng, n: usize, t_max: i64) -> IntMatrix {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    let mut b = IntMatrix::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let t = rng.gen_range(0..=t_max);
            if t == 0 {
                continue;
            }
            let u = if rng.gen_bool(0.5) { 1 } else { -1 };
            b[(i, j)] = BigInt::from(u * t * d[j]);
            b[(j, i)] = BigInt::from(-u * t * d[i]);
        }
    }
    b
}

/// Random fully dense skew-symmetrizable 4x4 with all `|b_ij|` in {1, 2}.
///
/// With `d_i` in {1, 2}, any such matrix has `|b_ij| = mu_ij * d_j` and
/// `|b_ji| = mu_ij * d_i` for a per-pair factor `mu_ij` keeping both
/// magnitudes in range; sampling `d`, the skew sign pattern, and `mu` covers
/// the whole family.
pub fn random_dense_skew_4x4(rng: &mut impl Rng) -> IntMatrix {
    let n = 4;
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    let mut b = IntMatrix::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let u = if rng.gen_bool(0.5) { 1 } else { -1 };
            // mu doubled to stay integral: mu2 = 2 * mu_ij
            let mu2: i64 = match (d[i], d[j]) {
                (1, 1) => [2, 4][rng.gen_range(0..2)],
                (2, 2) => [1, 2][rng.gen_range(0..2)],
                _ => 2,
            };
            b[(i, j)] = BigInt::from(u * mu2 * d[j] / 2);
            b[(j, i)] = BigInt::from(-u * mu2 * d[i] / 2);
        }
    }
    b
}

/// Applies a +-1 diagonal conjugation `X C X`.
pub fn conjugate_by_signs(c: &IntMatrix, signs: &[i64]) -> IntMatrix {
    let n = c.n();
    let mut out = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = c.entry(i, j) * BigInt::from(signs[i] * signs[j]);
        }
    }
    out
}

/// Scales every diagonal entry of a symmetrizer by a positive rational.
pub fn scale_symmetrizer(
    d: &quasicartan::matrix::Symmetrizer,
    factor: &Rational,
) -> quasicartan::matrix::Symmetrizer {
    quasicartan::matrix::Symmetrizer {
        kind: d.kind,
        diag: d.diag.iter().map(|x| x * factor).collect(),
    }
}

/// Structural bounds every positive quasi-Cartan matrix satisfies:
/// `0 <= c_ij * c_ji <= 3`, tightened to `<= 2` inside connected blocks of
/// size >= 3, and `0 <= c_ik * c_kj * c_ji <= 2` for distinct triples.
pub fn assert_companion_bounds(c: &IntMatrix) {
    let n = c.n();
    let components = c.connected_components();
    let zero = BigInt::from(0);
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    for i in 0..n {
        for j in i + 1..n {
            let product = c.entry(i, j) * c.entry(j, i);
            assert!(product >= zero, "pair product negative at ({i}, {j}): {c:?}");
            let same_block = components.block_of(i) == components.block_of(j);
            let limit = if same_block && components.block_size_of(i) >= 3 {
                &two
            } else {
                &three
            };
            assert!(
                &product <= limit,
                "pair product {product} over limit at ({i}, {j}): {c:?}"
            );
        }
    }
    if n < 3 {
        return;
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let triple = c.entry(i, k) * c.entry(k, j) * c.entry(j, i);
                assert!(
                    triple >= zero && triple <= two,
                    "triple product {triple} out of range at ({i}, {j}, {k}): {c:?}"
                );
            }
        }
    }
}
