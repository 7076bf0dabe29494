//! Command-line front end: a JSON document format for graded structures and
//! commands that verify, build and twist them.

pub mod command;
pub mod document;
pub mod render;

pub use command::{run, Command, Flags, Outcome, ReportDocument, RunError};
pub use document::{parse, Document, InputError};
