use serde::Serialize;

use crate::scalar::Scalar;

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(
        check: impl Into<String>,
        input: impl Into<String>,
        expected: impl ToString,
        got: impl ToString,
        pass: bool,
    ) -> Self {
        CheckRecord {
            check: check.into(),
            input: input.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        }
    }

    /// Record comparing two scalars for exact equality.
    pub fn scalar(check: impl Into<String>, input: impl Into<String>, expected: &Scalar, got: &Scalar) -> Self {
        Self::new(check, input, expected, got, expected == got)
    }

    /// Record for a boolean property; `expected`/`got` read `true`/`false`.
    pub fn holds(check: impl Into<String>, input: impl Into<String>, ok: bool) -> Self {
        Self::new(check, input, true, ok, ok)
    }
}
