//! Search for a positive quasi-Cartan companion of a skew-symmetrizable
//! matrix.
//!
//! A companion of `B` is a matrix `C` with diagonal 2 and `|c_ij| = |b_ij|`
//! off the diagonal; sign-symmetric candidates are automatically symmetrizable
//! with the same symmetrizer as `B`, so the search space is one sign per
//! nonzero unordered pair. [`find_positive_companion`] tries `C+` (all signs
//! positive) first, then enumerates sign assignments in lexicographic order,
//! testing each candidate with the leading-minor positivity check.
//!
//! Structure theorems shrink the work: for `n <= 3`, for fully dense `B`, and
//! (per block) for disconnected `B`, the `C+` test alone already decides, and
//! any positive companion must satisfy `0 <= c_ij*c_ji <= 3` (`<= 2` inside
//! connected blocks of size >= 3) and `0 <= c_ik*c_kj*c_ji <= 2`. Both the
//! fast paths and the resulting pruning are verdict-preserving and can be
//! disabled through [`SearchOptions`].

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde_json::{Number, Value};

use crate::io;
use crate::matrix::{ComponentPartition, IntMatrix};
use crate::positivity::is_positive;
use crate::symmetrize::{check_skew_symmetrizable, FailureReason};

/// One sign choice per unordered off-diagonal pair `{i, j}` (keys `i < j`)
/// with `b_ij != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignAssignment {
    pub signs: BTreeMap<(usize, usize), i8>,
}

impl SignAssignment {
    /// The nonzero unordered pair set of `b`, in lexicographic order.
    pub fn pairs_of(b: &IntMatrix) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for i in 0..b.n() {
            for j in i + 1..b.n() {
                if !b.entry(i, j).is_zero() {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }

    fn from_slice(pairs: &[(usize, usize)], signs: &[i8]) -> SignAssignment {
        SignAssignment {
            signs: pairs.iter().copied().zip(signs.iter().copied()).collect(),
        }
    }

    /// The companion candidate this assignment generates: diagonal 2 and
    /// `c_ij = x_ij * |b_ij|`, `c_ji = x_ij * |b_ji|` for each pair.
    pub fn candidate(&self, b: &IntMatrix) -> IntMatrix {
        let mut c = IntMatrix::zero(b.n());
        for i in 0..b.n() {
            c[(i, i)] = BigInt::from(2);
        }
        for (&(i, j), &sign) in &self.signs {
            let s = BigInt::from(sign);
            c[(i, j)] = &s * b.entry(i, j).abs();
            c[(j, i)] = &s * b.entry(j, i).abs();
        }
        c
    }
}

/// Which shortcut, if any, produced the decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FastPath {
    /// Decided by the plain search (C+ exhausted or enumeration completed).
    None,
    /// `n <= 2`: the C+ test alone decides.
    TwoByTwo,
    /// `n == 3`: the C+ test alone decides.
    ThreeByThree,
    /// All off-diagonal entries nonzero: the C+ test alone decides.
    Dense,
    /// C+ itself turned out positive on the general path.
    CPlusFirst,
    /// Disconnected input solved per connected block.
    ComponentSplit,
}

impl FastPath {
    pub fn as_str(self) -> &'static str {
        match self {
            FastPath::None => "none",
            FastPath::TwoByTwo => "two_by_two",
            FastPath::ThreeByThree => "three_by_three",
            FastPath::Dense => "dense",
            FastPath::CPlusFirst => "cplus_first",
            FastPath::ComponentSplit => "component_split",
        }
    }

    pub fn from_str_opt(s: &str) -> Option<FastPath> {
        Some(match s {
            "none" => FastPath::None,
            "two_by_two" => FastPath::TwoByTwo,
            "three_by_three" => FastPath::ThreeByThree,
            "dense" => FastPath::Dense,
            "cplus_first" => FastPath::CPlusFirst,
            "component_split" => FastPath::ComponentSplit,
            _ => return None,
        })
    }
}

/// Outcome of a companion search. `companion` is `Some` exactly when a
/// positive quasi-Cartan companion was found; `assignments_tried` counts the
/// candidates actually tested for positivity (including the initial C+).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionResult {
    pub companion: Option<IntMatrix>,
    pub assignments_tried: u64,
    pub fast_path: FastPath,
}

impl CompanionResult {
    pub fn found(&self) -> bool {
        self.companion.is_some()
    }

    /// JSON form: `{"assignments_tried": N, "companion": matrix|null,
    /// "fast_path": "...", "found": bool}`.
    pub fn to_json_value(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert(
            "assignments_tried".into(),
            Value::Number(Number::from(self.assignments_tried)),
        );
        obj.insert(
            "companion".into(),
            self.companion
                .as_ref()
                .map_or(Value::Null, io::matrix_to_json_value),
        );
        obj.insert("fast_path".into(), Value::String(self.fast_path.as_str().into()));
        obj.insert("found".into(), Value::Bool(self.found()));
        Value::Object(obj)
    }

    pub fn from_json_value(v: &Value) -> Result<Self, String> {
        let obj = v.as_object().ok_or("companion result: expected object")?;
        let assignments_tried = obj
            .get("assignments_tried")
            .and_then(Value::as_u64)
            .ok_or("companion result: missing assignments_tried")?;
        let fast_path = obj
            .get("fast_path")
            .and_then(Value::as_str)
            .and_then(FastPath::from_str_opt)
            .ok_or("companion result: bad fast_path")?;
        let companion = match obj.get("companion") {
            Some(Value::Null) | None => None,
            Some(v) => Some(io::matrix_from_json_value(v).map_err(|e| e.to_string())?),
        };
        let found = obj
            .get("found")
            .and_then(Value::as_bool)
            .ok_or("companion result: missing found")?;
        if found != companion.is_some() {
            return Err("companion result: found flag contradicts companion".into());
        }
        Ok(CompanionResult {
            companion,
            assignments_tried,
            fast_path,
        })
    }
}

/// Tuning knobs for [`find_positive_companion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Apply the pair/triple product bounds as pruning rules.
    pub prune: bool,
    /// Use the small-dimension, dense and per-component shortcuts.
    pub fast_paths: bool,
    /// Maximum number of sign assignments the enumeration may visit before
    /// giving up with [`CompanionError::CapExceeded`].
    pub cap: u64,
}

pub const DEFAULT_SEARCH_CAP: u64 = 1 << 24;

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune: true,
            fast_paths: true,
            cap: DEFAULT_SEARCH_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompanionError {
    /// The input is not skew-symmetrizable, so "quasi-Cartan companion" is
    /// not defined for it.
    NotSkewSymmetrizable(FailureReason),
    /// The sign enumeration hit the configured budget without reaching a
    /// decision. Never returned when the search space was fully covered.
    CapExceeded { cap: u64 },
    /// Matrices of different dimensions were passed to the verifier.
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for CompanionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompanionError::NotSkewSymmetrizable(r) => {
                write!(f, "matrix is not skew-symmetrizable: {r}")
            }
            CompanionError::CapExceeded { cap } => {
                write!(f, "undecided: assignment cap {cap} exceeded")
            }
            CompanionError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
        }
    }
}

impl Error for CompanionError {}

/// The canonical companion candidate: entrywise absolute value off the
/// diagonal, diagonal all 2.
pub fn c_plus(b: &IntMatrix) -> IntMatrix {
    let mut c = b.entrywise_abs();
    for i in 0..b.n() {
        c[(i, i)] = BigInt::from(2);
    }
    c
}

/// Searches for a positive quasi-Cartan companion of a skew-symmetrizable
/// matrix; see the module docs for the search order.
///
/// Errors on inputs that are not skew-symmetrizable, and reports an honest
/// [`CompanionError::CapExceeded`] instead of a false negative when the sign
/// enumeration would exceed `options.cap`.
pub fn find_positive_companion(
    b: &IntMatrix,
    options: &SearchOptions,
) -> Result<CompanionResult, CompanionError> {
    if let Some(reason) = check_skew_symmetrizable(b).failure() {
        return Err(CompanionError::NotSkewSymmetrizable(*reason));
    }
    search_validated(b, options)
}

fn search_validated(
    b: &IntMatrix,
    options: &SearchOptions,
) -> Result<CompanionResult, CompanionError> {
    let n = b.n();
    if options.fast_paths {
        if n <= 2 {
            return Ok(decide_by_c_plus(b, FastPath::TwoByTwo));
        }
        if n == 3 {
            return Ok(decide_by_c_plus(b, FastPath::ThreeByThree));
        }
        if is_dense(b) {
            return Ok(decide_by_c_plus(b, FastPath::Dense));
        }
        let components = b.connected_components();
        if components.len() > 1 {
            return search_per_component(b, options, &components);
        }
    }
    general_search(b, options)
}

fn is_dense(b: &IntMatrix) -> bool {
    (0..b.n()).all(|i| (0..b.n()).all(|j| i == j || !b.entry(i, j).is_zero()))
}

/// Paths on which positivity of C+ is equivalent to the existence of any
/// positive companion.
fn decide_by_c_plus(b: &IntMatrix, fast_path: FastPath) -> CompanionResult {
    let candidate = c_plus(b);
    let verdict = is_positive(&candidate)
        .expect("C+ of a skew-sign-symmetric matrix is symmetric by signs");
    CompanionResult {
        companion: verdict.positive.then_some(candidate),
        assignments_tried: 1,
        fast_path,
    }
}

/// A block-diagonal matrix is positive iff each block is, so solve the blocks
/// independently and scatter their companions back to the original indices.
fn search_per_component(
    b: &IntMatrix,
    options: &SearchOptions,
    components: &ComponentPartition,
) -> Result<CompanionResult, CompanionError> {
    let mut assembled = IntMatrix::zero(b.n());
    for i in 0..b.n() {
        assembled[(i, i)] = BigInt::from(2);
    }
    let mut tried = 0u64;
    for block in components.blocks() {
        let sub = b.principal_submatrix(block);
        let result = search_validated(&sub, options)?;
        tried += result.assignments_tried;
        match result.companion {
            Some(c) => {
                for (bi, &i) in block.iter().enumerate() {
                    for (bj, &j) in block.iter().enumerate() {
                        if bi != bj {
                            assembled[(i, j)] = c.entry(bi, bj).clone();
                        }
                    }
                }
            }
            None => {
                return Ok(CompanionResult {
                    companion: None,
                    assignments_tried: tried,
                    fast_path: FastPath::ComponentSplit,
                })
            }
        }
    }
    Ok(CompanionResult {
        companion: Some(assembled),
        assignments_tried: tried,
        fast_path: FastPath::ComponentSplit,
    })
}

/// C+ first, then lexicographic sign enumeration (first pair most
/// significant, -1 before +1), with optional pruning.
fn general_search(
    b: &IntMatrix,
    options: &SearchOptions,
) -> Result<CompanionResult, CompanionError> {
    let pairs = SignAssignment::pairs_of(b);
    let not_found = |tried| CompanionResult {
        companion: None,
        assignments_tried: tried,
        fast_path: FastPath::None,
    };

    let triangles = triangle_pair_indices(b, &pairs);
    if options.prune && !magnitude_bounds_satisfiable(b, &pairs, &triangles) {
        // Every candidate has the same entry magnitudes, so no sign choice
        // can repair an out-of-range pair or triple product.
        return Ok(not_found(0));
    }

    let mut tried = 0u64;
    let candidate = c_plus(b);
    tried += 1;
    if is_positive(&candidate)
        .expect("C+ of a skew-sign-symmetric matrix is symmetric by signs")
        .positive
    {
        return Ok(CompanionResult {
            companion: Some(candidate),
            assignments_tried: tried,
            fast_path: FastPath::CPlusFirst,
        });
    }
    if pairs.is_empty() {
        // The lone assignment regenerates C+; the search space is exhausted.
        return Ok(not_found(tried));
    }

    let mut signs = vec![-1i8; pairs.len()];
    let mut enumerated = 0u64;
    loop {
        if enumerated == options.cap {
            return Err(CompanionError::CapExceeded { cap: options.cap });
        }
        enumerated += 1;
        if !(options.prune && violates_triangle_signs(&signs, &triangles)) {
            let assignment = SignAssignment::from_slice(&pairs, &signs);
            let candidate = assignment.candidate(b);
            tried += 1;
            if is_positive(&candidate)
                .expect("sign-symmetric candidate")
                .positive
            {
                return Ok(CompanionResult {
                    companion: Some(candidate),
                    assignments_tried: tried,
                    fast_path: FastPath::None,
                });
            }
        }
        if !increment(&mut signs) {
            return Ok(not_found(tried));
        }
    }
}

/// Advances the sign vector to the lexicographic successor (-1 < +1, first
/// position most significant). Returns false after the last vector (all +1).
fn increment(signs: &mut [i8]) -> bool {
    for s in signs.iter_mut().rev() {
        if *s < 0 {
            *s = 1;
            return true;
        }
        *s = -1;
    }
    false
}

/// Triangles of the nonzero pattern, as index triples into `pairs`.
fn triangle_pair_indices(
    b: &IntMatrix,
    pairs: &[(usize, usize)],
) -> Vec<(usize, usize, usize)> {
    let n = b.n();
    let mut pair_index = vec![usize::MAX; n * n];
    for (p, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i * n + j] = p;
    }
    let idx = |i: usize, j: usize| {
        let p = pair_index[i * n + j];
        (p != usize::MAX).then_some(p)
    };
    let mut triangles = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if let (Some(p1), Some(p2), Some(p3)) = (idx(i, j), idx(j, k), idx(i, k)) {
                    triangles.push((p1, p2, p3));
                }
            }
        }
    }
    triangles
}

/// Sign-independent necessary conditions on any positive companion:
/// `|b_ij*b_ji| <= 3` on every pair (`<= 2` inside connected blocks of size
/// >= 3) and both orientations of every triangle product bounded by 2.
fn magnitude_bounds_satisfiable(
    b: &IntMatrix,
    pairs: &[(usize, usize)],
    triangles: &[(usize, usize, usize)],
) -> bool {
    let components = b.connected_components();
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    for &(i, j) in pairs {
        let product = b.entry(i, j).magnitude() * b.entry(j, i).magnitude();
        let limit = if components.block_size_of(i) >= 3 { &two } else { &three };
        if &product > limit {
            return false;
        }
    }
    for &(p1, p2, p3) in triangles {
        let (i, j) = pairs[p1];
        let (_, k) = pairs[p2];
        debug_assert_eq!(pairs[p3], (i, k));
        let forward =
            b.entry(i, j).magnitude() * b.entry(j, k).magnitude() * b.entry(k, i).magnitude();
        let backward =
            b.entry(j, i).magnitude() * b.entry(k, j).magnitude() * b.entry(i, k).magnitude();
        if forward > two || backward > two {
            return false;
        }
    }
    true
}

/// A nonzero triple product must be positive, i.e. the three pair signs of
/// every triangle must multiply to +1.
fn violates_triangle_signs(signs: &[i8], triangles: &[(usize, usize, usize)]) -> bool {
    triangles
        .iter()
        .any(|&(p1, p2, p3)| signs[p1] * signs[p2] * signs[p3] != 1)
}

/// Checks that `c` is a positive quasi-Cartan companion of `b`: diagonal all
/// 2, matching off-diagonal magnitudes, symmetric by signs, and positive.
///
/// This is the polynomial-time certificate check for the companion-existence
/// problem; it never searches.
pub fn verify_companion(b: &IntMatrix, c: &IntMatrix) -> Result<bool, CompanionError> {
    if b.n() != c.n() {
        return Err(CompanionError::DimensionMismatch {
            left: b.n(),
            right: c.n(),
        });
    }
    let two = BigInt::from(2);
    for i in 0..c.n() {
        if *c.entry(i, i) != two {
            return Ok(false);
        }
        for j in 0..c.n() {
            if i != j && c.entry(i, j).magnitude() != b.entry(i, j).magnitude() {
                return Ok(false);
            }
        }
    }
    if !c.is_symmetric_by_signs() {
        return Ok(false);
    }
    Ok(is_positive(c).expect("sign symmetry checked above").positive)
}
