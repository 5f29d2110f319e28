//! Outcome of one identity/theorem sweep.

use serde::Serialize;

/// First failing parameter tuple of a sweep, with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub parameters: Vec<i64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub parameters: Vec<Vec<i64>>,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn pass(identity_id: &str, parameters: Vec<Vec<i64>>) -> Self {
        VerificationReport {
            identity_id: identity_id.to_string(),
            parameters,
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(
        identity_id: &str,
        parameters: Vec<Vec<i64>>,
        counterexample: Counterexample,
    ) -> Self {
        VerificationReport {
            identity_id: identity_id.to_string(),
            parameters,
            passed: false,
            counterexample: Some(counterexample),
        }
    }

    /// Folds many reports for the same identity into one sweep report,
    /// keeping the first counterexample.
    pub fn merge(identity_id: &str, reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        let mut parameters = Vec::new();
        let mut counterexample = None;
        for r in reports {
            parameters.extend(r.parameters);
            if counterexample.is_none() {
                counterexample = r.counterexample;
            }
        }
        VerificationReport {
            identity_id: identity_id.to_string(),
            parameters,
            passed: counterexample.is_none(),
            counterexample,
        }
    }
}
