//! Positivity of symmetrizable matrices via leading principal minors.
//!
//! For a symmetrizable `C`, positivity of the symmetrized form, positivity of
//! all principal minors, and positivity of all leading principal minors are
//! equivalent, so [`is_positive`] checks the n leading minors (ascending, with
//! early exit) using one exact determinant per size. The subset-exponential
//! [`all_principal_minors_positive`] exists as the independent second route
//! for tests and the CLI oracle mode.

use std::error::Error;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{Number, Value};

use crate::matrix::IntMatrix;

/// Leading principal minors in ascending block size: `minors[k-1]` is the
/// determinant of the top-left `k` x `k` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSequence {
    pub minors: Vec<BigInt>,
}

impl MinorSequence {
    /// Computes all `n` leading principal minors.
    pub fn compute(c: &IntMatrix) -> MinorSequence {
        MinorSequence {
            minors: (1..=c.n())
                .map(|k| c.leading_principal_submatrix(k).determinant())
                .collect(),
        }
    }
}

/// Result of [`is_positive`]. `minors_checked` holds exactly the minors that
/// were evaluated: all `n` when positive, otherwise the prefix ending at the
/// first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityVerdict {
    pub positive: bool,
    /// Smallest leading block size whose minor is `<= 0` (1-based size).
    pub first_failure: Option<usize>,
    pub minors_checked: MinorSequence,
}

impl PositivityVerdict {
    /// JSON form: `{"first_failure": k|null, "minors": ["2", ...],
    /// "positive": bool}` with minors as decimal strings.
    pub fn to_json_value(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert(
            "first_failure".into(),
            self.first_failure
                .map_or(Value::Null, |k| Value::Number(Number::from(k as u64))),
        );
        obj.insert(
            "minors".into(),
            Value::Array(
                self.minors_checked
                    .minors
                    .iter()
                    .map(|m| Value::String(m.to_string()))
                    .collect(),
            ),
        );
        obj.insert("positive".into(), Value::Bool(self.positive));
        Value::Object(obj)
    }

    pub fn from_json_value(v: &Value) -> Result<Self, String> {
        let obj = v.as_object().ok_or("verdict: expected object")?;
        let positive = obj
            .get("positive")
            .and_then(Value::as_bool)
            .ok_or("verdict: missing positive")?;
        let first_failure = match obj.get("first_failure") {
            Some(Value::Null) | None => None,
            Some(v) => Some(v.as_u64().ok_or("verdict: bad first_failure")? as usize),
        };
        let minors = obj
            .get("minors")
            .and_then(Value::as_array)
            .ok_or("verdict: missing minors")?
            .iter()
            .map(|x| {
                x.as_str()
                    .ok_or_else(|| "verdict: minor not a string".to_string())
                    .and_then(|s| s.parse::<BigInt>().map_err(|e| e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PositivityVerdict {
            positive,
            first_failure,
            minors_checked: MinorSequence { minors },
        })
    }
}

/// Input to [`is_positive`] was not symmetric by signs, so the leading-minor
/// criterion would be meaningless; the first violating pair is reported
/// (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotSymmetricBySigns {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for NotSymmetricBySigns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matrix is not symmetric by signs at pair ({}, {})",
            self.i + 1,
            self.j + 1
        )
    }
}

impl Error for NotSymmetricBySigns {}

/// Decides positivity of a symmetrizable matrix by its leading principal
/// minors, evaluated in ascending size with early exit on the first minor
/// `<= 0`.
///
/// The caller promises `c` is symmetrizable; as a guard, inputs that are not
/// even symmetric by signs are rejected with an error rather than answered.
pub fn is_positive(c: &IntMatrix) -> Result<PositivityVerdict, NotSymmetricBySigns> {
    if let Some((i, j)) = c.sign_symmetry_violation() {
        return Err(NotSymmetricBySigns { i, j });
    }
    let mut minors = Vec::with_capacity(c.n());
    for k in 1..=c.n() {
        let minor = c.leading_principal_submatrix(k).determinant();
        let failed = !minor.is_positive();
        minors.push(minor);
        if failed {
            return Ok(PositivityVerdict {
                positive: false,
                first_failure: Some(k),
                minors_checked: MinorSequence { minors },
            });
        }
    }
    Ok(PositivityVerdict {
        positive: true,
        first_failure: None,
        minors_checked: MinorSequence { minors },
    })
}

/// True iff every principal minor (all non-empty index subsets) is strictly
/// positive. Exponential in `n`; intended for test-scale matrices.
pub fn all_principal_minors_positive(c: &IntMatrix) -> bool {
    let n = c.n();
    assert!(n < usize::BITS as usize, "subset enumeration overflow");
    for mask in 1usize..(1 << n) {
        let keep: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if !c.principal_submatrix(&keep).determinant().is_positive() {
            return false;
        }
    }
    true
}
