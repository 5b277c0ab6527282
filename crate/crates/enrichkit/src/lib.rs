//! File formats, random corpora, reports and command dispatch for `enrichkit-core`.

pub mod corpus;
pub mod report;
pub mod run;
pub mod spec;
