//! Deciding symmetrizability and constructing symmetrizers.
//!
//! [`check_symmetrizable`] walks an ordered worklist, propagating diagonal
//! values `d_j = d_i * a_ij / a_ji` along nonzero pairs and rejecting on sign
//! or ratio conflicts; a full verification pass runs after propagation. The
//! total number of pair inspections is O(n^2) and is reported in the outcome.
//!
//! [`find_symmetrizer`] is the same propagation without any checking, for
//! inputs already known to be symmetrizable; it stops as soon as every
//! diagonal value is assigned (linear time when the first row reaches
//! everything).

use std::collections::VecDeque;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{Number, Value};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::matrix::{ComponentPartition, IntMatrix, Rational, Symmetrizer, SymmetrizerKind};

/// The concrete pair (0-based) on which a symmetrizability check failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// `a_ij`, `a_ji` have incompatible signs for the requested kind, or
    /// exactly one of them is zero. For the skew check, a nonzero diagonal
    /// entry is reported as `SignViolation { i, j: i }`.
    SignViolation { i: usize, j: usize },
    /// Propagation assigned `d_i` and `d_j` values that contradict the
    /// defining equation on this pair.
    RatioConflict { i: usize, j: usize },
}

impl FailureReason {
    pub fn indices(&self) -> (usize, usize) {
        match *self {
            FailureReason::SignViolation { i, j } | FailureReason::RatioConflict { i, j } => (i, j),
        }
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            FailureReason::SignViolation { .. } => "sign_violation",
            FailureReason::RatioConflict { .. } => "ratio_conflict",
        }
    }

    pub fn to_json_value(&self) -> Value {
        let (i, j) = self.indices();
        let mut obj = serde_json::Map::new();
        obj.insert("i".into(), Value::Number(Number::from((i + 1) as u64)));
        obj.insert("j".into(), Value::Number(Number::from((j + 1) as u64)));
        obj.insert("kind".into(), Value::String(self.kind_str().into()));
        Value::Object(obj)
    }
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.indices();
        match self {
            FailureReason::SignViolation { .. } => {
                write!(f, "sign violation at ({}, {})", i + 1, j + 1)
            }
            FailureReason::RatioConflict { .. } => {
                write!(f, "ratio conflict at ({}, {})", i + 1, j + 1)
            }
        }
    }
}

/// Decision of a (skew-)symmetrizability check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetrizeVerdict {
    /// A positive diagonal certificate exists; here is one.
    Symmetrizable(Symmetrizer),
    /// No certificate exists; a concrete violated pair is named.
    NotSymmetrizable(FailureReason),
}

/// Outcome of [`check_symmetrizable`] / [`check_skew_symmetrizable`],
/// including the number of pair inspections performed (propagation plus
/// verification), for complexity instrumentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizeOutcome {
    pub verdict: SymmetrizeVerdict,
    pub pairs_inspected: usize,
}

impl SymmetrizeOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self.verdict, SymmetrizeVerdict::Symmetrizable(_))
    }

    pub fn witness(&self) -> Option<&Symmetrizer> {
        match &self.verdict {
            SymmetrizeVerdict::Symmetrizable(d) => Some(d),
            SymmetrizeVerdict::NotSymmetrizable(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&FailureReason> {
        match &self.verdict {
            SymmetrizeVerdict::Symmetrizable(_) => None,
            SymmetrizeVerdict::NotSymmetrizable(r) => Some(r),
        }
    }

    /// JSON form used by the CLI `symmetrizable` subcommand.
    pub fn to_json_value(&self, key: &str) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert(
            "failure".into(),
            self.failure().map_or(Value::Null, |r| r.to_json_value()),
        );
        obj.insert(
            "pairs_inspected".into(),
            Value::Number(Number::from(self.pairs_inspected as u64)),
        );
        obj.insert(key.into(), Value::Bool(self.is_yes()));
        obj.insert(
            "symmetrizer".into(),
            self.witness().map_or(Value::Null, |d| d.to_json_value()),
        );
        Value::Object(obj)
    }
}

/// Decides whether `a` is symmetrizable and returns a positive rational
/// symmetrizer when it is.
pub fn check_symmetrizable(a: &IntMatrix) -> SymmetrizeOutcome {
    check(a, SymmetrizerKind::Symmetric)
}

/// Skew analogue of [`check_symmetrizable`]: decides whether a positive
/// diagonal `D` exists with `D*b` skew-symmetric. Uses the propagation rule
/// `d_j = -d_i * b_ij / b_ji` and requires a zero diagonal and strictly
/// negative products on nonzero pairs.
pub fn check_skew_symmetrizable(b: &IntMatrix) -> SymmetrizeOutcome {
    check(b, SymmetrizerKind::Skew)
}

fn check(a: &IntMatrix, kind: SymmetrizerKind) -> SymmetrizeOutcome {
    let n = a.n();
    let mut inspected = 0usize;
    let no = |reason, inspected| SymmetrizeOutcome {
        verdict: SymmetrizeVerdict::NotSymmetrizable(reason),
        pairs_inspected: inspected,
    };

    if kind == SymmetrizerKind::Skew {
        for i in 0..n {
            if !a.entry(i, i).is_zero() {
                return no(FailureReason::SignViolation { i, j: i }, inspected);
            }
        }
    }

    let mut diag: Vec<Option<Rational>> = vec![None; n];
    let mut worklist: VecDeque<usize> = (0..n).collect();
    while let Some(i) = worklist.pop_front() {
        if diag[i].is_none() {
            // First index visited in its component.
            diag[i] = Some(Rational::one());
        }
        let d_i = diag[i].clone().expect("seeded above");
        let snapshot: Vec<usize> = worklist.iter().copied().collect();
        for j in snapshot {
            inspected += 1;
            let a_ij = a.entry(i, j);
            let a_ji = a.entry(j, i);
            if a_ij.is_zero() || a_ji.is_zero() {
                if !a_ij.is_zero() || !a_ji.is_zero() {
                    return no(FailureReason::SignViolation { i, j }, inspected);
                }
                continue;
            }
            let sign_ok = match kind {
                SymmetrizerKind::Symmetric => a_ij.sign() == a_ji.sign(),
                SymmetrizerKind::Skew => a_ij.sign() != a_ji.sign(),
            };
            if !sign_ok {
                return no(FailureReason::SignViolation { i, j }, inspected);
            }
            let pos = worklist.iter().position(|&x| x == j).expect("j still queued");
            worklist.remove(pos);
            worklist.push_front(j);
            let ratio = &d_i * Rational::new(a_ij.clone(), a_ji.clone());
            let propagated = match kind {
                SymmetrizerKind::Symmetric => ratio,
                SymmetrizerKind::Skew => -ratio,
            };
            match &diag[j] {
                Some(d_j) => {
                    if *d_j != propagated {
                        return no(FailureReason::RatioConflict { i, j }, inspected);
                    }
                }
                None => diag[j] = Some(propagated),
            }
        }
    }

    let diag: Vec<Rational> = diag.into_iter().map(|d| d.expect("all indices popped")).collect();
    // Verification pass: propagation is provably sufficient, but re-checking
    // every pair costs nothing asymptotically and pins soundness.
    for i in 0..n {
        for j in i + 1..n {
            inspected += 1;
            let lhs = &diag[i] * Rational::from(a.entry(i, j).clone());
            let rhs = &diag[j] * Rational::from(a.entry(j, i).clone());
            let ok = match kind {
                SymmetrizerKind::Symmetric => lhs == rhs,
                SymmetrizerKind::Skew => lhs == -rhs,
            };
            if !ok {
                return no(FailureReason::RatioConflict { i, j }, inspected);
            }
        }
    }
    SymmetrizeOutcome {
        verdict: SymmetrizeVerdict::Symmetrizable(Symmetrizer { kind, diag }),
        pairs_inspected: inspected,
    }
}

/// Constructs a symmetrizer for a matrix promised to be symmetrizable,
/// stopping as soon as every diagonal value has been assigned.
///
/// No checking is performed: on a non-symmetrizable input this still returns
/// some diagonal (possibly not positive, possibly not a certificate) and
/// never panics. Callers wanting validation use [`check_symmetrizable`].
pub fn find_symmetrizer(a: &IntMatrix) -> Symmetrizer {
    let n = a.n();
    let mut diag: Vec<Option<Rational>> = vec![None; n];
    let mut unassigned = n;
    let mut worklist: VecDeque<usize> = (0..n).collect();
    while unassigned > 0 {
        let Some(i) = worklist.pop_front() else { break };
        if diag[i].is_none() {
            diag[i] = Some(Rational::one());
            unassigned -= 1;
        }
        let d_i = diag[i].clone().expect("seeded above");
        let snapshot: Vec<usize> = worklist.iter().copied().collect();
        for j in snapshot {
            if a.entry(j, i).is_zero() {
                continue;
            }
            let pos = worklist.iter().position(|&x| x == j).expect("j still queued");
            worklist.remove(pos);
            worklist.push_front(j);
            if diag[j].is_none() {
                diag[j] = Some(&d_i * Rational::new(a.entry(i, j).clone(), a.entry(j, i).clone()));
                unassigned -= 1;
            }
        }
    }
    Symmetrizer {
        kind: SymmetrizerKind::Symmetric,
        diag: diag.into_iter().map(|d| d.unwrap_or_else(Rational::one)).collect(),
    }
}

/// Rescales a symmetrizer per connected component to the componentwise
/// minimal certificate with positive integer entries.
///
/// Within each block the entries are multiplied by the LCM of their
/// denominators and divided by the GCD of the resulting numerators. Scaling
/// is a per-component symmetry of the defining equation, so the result
/// certifies the same matrix.
pub fn integer_normalize(d: &Symmetrizer, components: &ComponentPartition) -> Symmetrizer {
    let mut diag = d.diag.clone();
    for block in components.blocks() {
        let lcm = block
            .iter()
            .map(|&i| diag[i].denom().clone())
            .fold(BigInt::one(), |acc, x| acc.lcm(&x));
        let nums: Vec<BigInt> = block
            .iter()
            .map(|&i| (&diag[i] * Rational::from(lcm.clone())).to_integer())
            .collect();
        let gcd = nums.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let gcd = if gcd.is_zero() { BigInt::one() } else { gcd };
        for (&i, num) in block.iter().zip(nums) {
            diag[i] = Rational::from(num / &gcd);
        }
    }
    Symmetrizer { kind: d.kind, diag }
}
