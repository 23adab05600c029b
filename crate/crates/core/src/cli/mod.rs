//! Ring documents, the example family and the command-line front end.

mod commands;
mod document;
mod family;
mod report;

pub use commands::{family_numerator, run_command, verify_family, CommandOutcome};
pub use document::{LoadedRing, RingDocument};
pub use family::{build_family, FamilySpec};
pub use report::{Report, REPORT_KEYS};
