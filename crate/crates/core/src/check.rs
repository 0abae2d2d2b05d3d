//! Named relation checks with exact witnesses.

use std::fmt::Display;

use serde::Serialize;

/// Outcome of checking one identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Both sides when they differ, or a short note.
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    /// `lhs == rhs`, recording both sides on failure.
    pub fn equal<T: PartialEq + Display>(name: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        let pass = lhs == rhs;
        let detail = if pass { String::new() } else { format!("lhs = {lhs}; rhs = {rhs}") };
        Check::new(name, pass, detail)
    }

    pub fn failed(name: impl Into<String>, err: impl Display) -> Self {
        Check::new(name, false, format!("error: {err}"))
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
