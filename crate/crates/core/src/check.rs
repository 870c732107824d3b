use serde::Serialize;

/// Outcome of one named exact verification, with the first counterexample
/// found when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(check: impl Into<String>) -> Self {
        Verdict { check: check.into(), pass: true, witness: None }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict { check: check.into(), pass: false, witness: Some(witness.into()) }
    }

    /// Pass unless `witness` is `Some`.
    pub fn from_witness(check: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Verdict::pass(check),
            Some(w) => Verdict::fail(check, w),
        }
    }
}
