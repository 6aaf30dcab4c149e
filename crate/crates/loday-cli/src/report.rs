//! Machine-readable reports printed by `loday check` and
//! `loday construct`.
//!
//! Reports are plain serde structures emitted as pretty JSON with keys
//! in declaration order, so rerunning a command on the same input
//! yields byte-identical output.

use loday_core::{CheckReport, Counterexample, Defect};
use serde::Serialize;

/// Exit code for "every requested check holds".
pub const EXIT_HOLDS: i32 = 0;
/// Exit code for usage or input errors.
pub const EXIT_USAGE: i32 = 1;
/// Exit code for "an axiom or precondition is violated".
pub const EXIT_VIOLATED: i32 = 2;

/// Serialized image of a [`Defect`].
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DefectDto {
    /// A vector-valued equation left this nonzero vector.
    Vector { entries: Vec<String> },
    /// A form-valued equation left this nonzero scalar.
    Scalar { value: String },
}

/// Serialized image of a [`Counterexample`]: which equation failed, on
/// which basis tuple, and by how much.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleDto {
    pub equation: String,
    pub basis_tuple: Vec<usize>,
    pub defect: DefectDto,
}

impl From<&Counterexample> for CounterexampleDto {
    fn from(ce: &Counterexample) -> CounterexampleDto {
        let defect = match &ce.defect {
            Defect::Vector(v) => DefectDto::Vector {
                entries: v.iter().map(ToString::to_string).collect(),
            },
            Defect::Scalar(c) => DefectDto::Scalar {
                value: c.to_string(),
            },
        };
        CounterexampleDto {
            equation: ce.equation_label.clone(),
            basis_tuple: ce.basis_tuple.clone(),
            defect,
        }
    }
}

/// One named check outcome inside a report.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    /// What was checked ("leibniz", "precondition: novikov-dialgebra", ...).
    pub target: String,
    /// Whether it held; absent for informational rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    /// First failure, in deterministic order, when `holds` is false.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleDto>,
    /// Free-form annotation ("skipped (--force)", ...).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    /// A verdict row from a core check report.
    #[must_use]
    pub fn from_check(target: &str, report: &CheckReport) -> Verdict {
        Verdict {
            target: target.to_owned(),
            holds: Some(report.holds),
            counterexample: report.counterexample.as_ref().map(CounterexampleDto::from),
            note: None,
        }
    }

    /// A bare pass/fail row with no counterexample.
    #[must_use]
    pub fn flag(target: &str, holds: bool) -> Verdict {
        Verdict {
            target: target.to_owned(),
            holds: Some(holds),
            counterexample: None,
            note: None,
        }
    }

    /// An informational row.
    #[must_use]
    pub fn note(target: &str, note: &str) -> Verdict {
        Verdict {
            target: target.to_owned(),
            holds: None,
            counterexample: None,
            note: Some(note.to_owned()),
        }
    }

    /// Attaches an annotation.
    #[must_use]
    pub fn with_note(mut self, note: &str) -> Verdict {
        self.note = Some(note.to_owned());
        self
    }
}

/// The full report for one command invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// Canonical echo of the command that produced the report.
    pub command: String,
    /// One row per check, in the order they ran.
    pub verdicts: Vec<Verdict>,
    /// The process exit code implied by the verdicts.
    pub exit_code: i32,
}

impl Report {
    /// Builds a report, deriving the exit code: 0 when every verdict
    /// with a truth value holds, 2 otherwise.
    #[must_use]
    pub fn new(command: String, verdicts: Vec<Verdict>) -> Report {
        let all_hold = verdicts.iter().all(|v| v.holds.unwrap_or(true));
        Report {
            command,
            verdicts,
            exit_code: if all_hold { EXIT_HOLDS } else { EXIT_VIOLATED },
        }
    }

    /// Pretty JSON plus trailing newline; byte-stable for equal inputs.
    #[must_use]
    pub fn render(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization is infallible");
        text.push('\n');
        text
    }
}
