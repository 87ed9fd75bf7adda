//! Brute-force reference implementations, deliberately slow and simple.
//!
//! These exist to cross-validate the real algorithms: the cycle-product
//! characterization of symmetrizability, first-row cofactor determinants, and
//! a literal exhaustive companion search that tests every candidate with the
//! all-principal-minors route instead of the leading-minor one. They ship in
//! the library (not just the test tree) so the CLI can expose them behind
//! `--oracle` for desk-scale cross-checks.

use std::error::Error;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::companion::{c_plus, CompanionResult, FastPath};
use crate::matrix::IntMatrix;
use crate::positivity::all_principal_minors_positive;

/// Largest dimension the cycle and cofactor oracles accept.
pub const ORACLE_MAX_DIM: usize = 8;
/// Largest dimension the exhaustive companion oracle accepts.
pub const EXHAUSTIVE_MAX_DIM: usize = 4;

/// Input too large for the requested brute-force oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeLimitExceeded {
    pub n: usize,
    pub limit: usize,
}

impl fmt::Display for SizeLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matrix dimension {} exceeds the oracle limit {}",
            self.n, self.limit
        )
    }
}

impl Error for SizeLimitExceeded {}

/// Symmetrizability by the cycle-product characterization: symmetric by signs
/// and, around every simple cycle of length >= 3, the clockwise and
/// counterclockwise entry products coincide.
///
/// Sequences with repeated indices factor into simple cycles, so checking
/// simple cycles only is equivalent.
pub fn cycle_symmetrizable(a: &IntMatrix) -> Result<bool, SizeLimitExceeded> {
    let n = a.n();
    if n > ORACLE_MAX_DIM {
        return Err(SizeLimitExceeded { n, limit: ORACLE_MAX_DIM });
    }
    if !a.is_symmetric_by_signs() {
        return Ok(false);
    }
    // Enumerate each simple cycle once up to rotation by anchoring it at its
    // smallest index.
    for anchor in 0..n {
        let rest: Vec<usize> = (anchor + 1..n).collect();
        let mut cycle = vec![anchor];
        if !cycles_balanced(a, &mut cycle, &rest) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cycles_balanced(a: &IntMatrix, cycle: &mut Vec<usize>, available: &[usize]) -> bool {
    if cycle.len() >= 3 {
        let mut forward = BigInt::one();
        let mut backward = BigInt::one();
        for w in 0..cycle.len() {
            let (i, j) = (cycle[w], cycle[(w + 1) % cycle.len()]);
            forward *= a.entry(i, j);
            backward *= a.entry(j, i);
        }
        if forward != backward {
            return false;
        }
    }
    for (pos, &next) in available.iter().enumerate() {
        let mut remaining = available.to_vec();
        remaining.remove(pos);
        cycle.push(next);
        let ok = cycles_balanced(a, cycle, &remaining);
        cycle.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Determinant by first-row cofactor expansion; the reference for the
/// fraction-free implementation.
pub fn cofactor_determinant(a: &IntMatrix) -> Result<BigInt, SizeLimitExceeded> {
    let n = a.n();
    if n > ORACLE_MAX_DIM {
        return Err(SizeLimitExceeded { n, limit: ORACLE_MAX_DIM });
    }
    Ok(cofactor_rec(a))
}

fn cofactor_rec(a: &IntMatrix) -> BigInt {
    let n = a.n();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return a.entry(0, 0).clone();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if a.entry(0, j).is_zero() {
            continue;
        }
        let keep_rows: Vec<usize> = (1..n).collect();
        let keep_cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let minor = IntMatrix::from_rows(
            keep_rows
                .iter()
                .map(|&r| keep_cols.iter().map(|&c| a.entry(r, c).clone()).collect())
                .collect(),
        );
        let term = a.entry(0, j) * cofactor_rec(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Literal exhaustive companion search: C+ first, then every sign vector over
/// all unordered pairs (zero pairs included), each candidate tested with
/// [`all_principal_minors_positive`] — a different positivity route than the
/// search under test.
pub fn exhaustive_companion(b: &IntMatrix) -> Result<CompanionResult, SizeLimitExceeded> {
    let n = b.n();
    if n > EXHAUSTIVE_MAX_DIM {
        return Err(SizeLimitExceeded { n, limit: EXHAUSTIVE_MAX_DIM });
    }
    let mut tried = 0u64;
    let candidate = c_plus(b);
    tried += 1;
    if all_principal_minors_positive(&candidate) {
        return Ok(CompanionResult {
            companion: Some(candidate),
            assignments_tried: tried,
            fast_path: FastPath::None,
        });
    }
    let all_pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let m = all_pairs.len();
    for counter in 0..(1u64 << m) {
        let signs: Vec<i8> = (0..m)
            .map(|p| if counter >> (m - 1 - p) & 1 == 1 { 1 } else { -1 })
            .collect();
        let mut candidate = IntMatrix::zero(n);
        for i in 0..n {
            candidate[(i, i)] = BigInt::from(2);
        }
        for (p, &(i, j)) in all_pairs.iter().enumerate() {
            let s = BigInt::from(signs[p]);
            candidate[(i, j)] = &s * b.entry(i, j).abs();
            candidate[(j, i)] = &s * b.entry(j, i).abs();
        }
        tried += 1;
        if all_principal_minors_positive(&candidate) {
            return Ok(CompanionResult {
                companion: Some(candidate),
                assignments_tried: tried,
                fast_path: FastPath::None,
            });
        }
    }
    Ok(CompanionResult {
        companion: None,
        assignments_tried: tried,
        fast_path: FastPath::None,
    })
}
