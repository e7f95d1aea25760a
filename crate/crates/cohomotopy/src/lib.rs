//! JSON documents, reports and the command-line front end for `cohomotopy-core`.

pub mod cli;
pub mod document;
pub mod report;

pub use document::{DocError, ManifoldDocument};
pub use report::ReportDocument;
