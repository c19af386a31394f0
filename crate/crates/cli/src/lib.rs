//! File formats, run reports and command implementations behind the
//! `hopfgen` binary.

pub mod commands;
pub mod report;
pub mod schema;

pub use commands::{builtin_hopf, load_input, Input, Options};
pub use report::{RunReport, REPORT_VERSION, TAG_REGISTRY};
