//! Full classification of a matrix and its JSON rendering.
//!
//! [`classify`] runs every check on one input: sign symmetry both ways,
//! symmetrizability and skew-symmetrizability with witnesses, positivity when
//! symmetrizable, companion search when skew-symmetrizable, and connectivity.
//! Witnesses are re-verified before the report is handed out.

use serde_json::{Number, Value};

use crate::companion::{
    find_positive_companion, verify_companion, CompanionError, CompanionResult, SearchOptions,
};
use crate::matrix::{ComponentPartition, IntMatrix, Symmetrizer};
use crate::positivity::{is_positive, PositivityVerdict};
use crate::symmetrize::{
    check_skew_symmetrizable, check_symmetrizable, integer_normalize,
};

/// Everything the classifier knows about one matrix.
///
/// Presence rules: `symmetrizer` is `Some` iff the matrix is symmetrizable,
/// `skew_symmetrizer` iff skew-symmetrizable, `positive` iff symmetrizable,
/// and `companion` iff skew-symmetrizable and the search reached a decision.
/// `companion_undecided` marks the one remaining case: the search budget ran
/// out before a decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub input_dims: usize,
    pub symmetric_by_signs: bool,
    pub skew_symmetric_by_signs: bool,
    pub symmetrizer: Option<Symmetrizer>,
    pub skew_symmetrizer: Option<Symmetrizer>,
    pub positive: Option<PositivityVerdict>,
    pub companion: Option<CompanionResult>,
    pub companion_undecided: bool,
    pub connected: bool,
    pub components: ComponentPartition,
}

impl ClassificationReport {
    pub fn symmetrizable(&self) -> bool {
        self.symmetrizer.is_some()
    }

    pub fn skew_symmetrizable(&self) -> bool {
        self.skew_symmetrizer.is_some()
    }

    pub fn to_json_value(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert(
            "companion".into(),
            self.companion
                .as_ref()
                .map_or(Value::Null, CompanionResult::to_json_value),
        );
        obj.insert("companion_undecided".into(), Value::Bool(self.companion_undecided));
        obj.insert("components".into(), self.components.to_json_value());
        obj.insert("connected".into(), Value::Bool(self.connected));
        obj.insert(
            "input_dims".into(),
            Value::Number(Number::from(self.input_dims as u64)),
        );
        obj.insert(
            "positive".into(),
            self.positive
                .as_ref()
                .map_or(Value::Null, PositivityVerdict::to_json_value),
        );
        obj.insert(
            "skew_symmetric_by_signs".into(),
            Value::Bool(self.skew_symmetric_by_signs),
        );
        obj.insert("skew_symmetrizable".into(), Value::Bool(self.skew_symmetrizable()));
        obj.insert(
            "skew_symmetrizer".into(),
            self.skew_symmetrizer
                .as_ref()
                .map_or(Value::Null, Symmetrizer::to_json_value),
        );
        obj.insert("symmetric_by_signs".into(), Value::Bool(self.symmetric_by_signs));
        obj.insert("symmetrizable".into(), Value::Bool(self.symmetrizable()));
        obj.insert(
            "symmetrizer".into(),
            self.symmetrizer
                .as_ref()
                .map_or(Value::Null, Symmetrizer::to_json_value),
        );
        Value::Object(obj)
    }
}

/// Classifies `m`, running the companion search with `options` when the
/// matrix is skew-symmetrizable.
///
/// `integer_symmetrizer` rescales both witnesses to the componentwise-minimal
/// positive integer form. A capped-out companion search is reported through
/// `companion_undecided` instead of an error; everything else in the report
/// is still filled in.
pub fn classify(
    m: &IntMatrix,
    options: &SearchOptions,
    integer_symmetrizer: bool,
) -> ClassificationReport {
    let components = m.connected_components();
    let normalize = |d: Symmetrizer| {
        if integer_symmetrizer {
            integer_normalize(&d, &components)
        } else {
            d
        }
    };

    let symmetrizer = check_symmetrizable(m).witness().cloned().map(normalize);
    let skew_symmetrizer = check_skew_symmetrizable(m).witness().cloned().map(normalize);

    let positive = symmetrizer
        .as_ref()
        .map(|_| is_positive(m).expect("symmetrizable implies symmetric by signs"));

    let mut companion_undecided = false;
    let companion = if skew_symmetrizer.is_some() {
        match find_positive_companion(m, options) {
            Ok(result) => Some(result),
            Err(CompanionError::CapExceeded { .. }) => {
                companion_undecided = true;
                None
            }
            Err(e) => unreachable!("search on validated input: {e}"),
        }
    } else {
        None
    };

    // Re-verify witnesses before emission.
    if let Some(d) = &symmetrizer {
        assert!(d.certifies(m), "symmetrizer failed re-verification");
    }
    if let Some(d) = &skew_symmetrizer {
        assert!(d.certifies(m), "skew-symmetrizer failed re-verification");
    }
    if let Some(c) = companion.as_ref().and_then(|r| r.companion.as_ref()) {
        assert!(
            verify_companion(m, c).expect("dimensions match"),
            "companion failed re-verification"
        );
    }

    ClassificationReport {
        input_dims: m.n(),
        symmetric_by_signs: m.is_symmetric_by_signs(),
        skew_symmetric_by_signs: m.is_skew_symmetric_by_signs(),
        symmetrizer,
        skew_symmetrizer,
        positive,
        companion,
        companion_undecided,
        connected: components.len() <= 1,
        components,
    }
}
