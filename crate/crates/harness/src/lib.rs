//! Corpus, check registry, runner and reports for verifying conductor
//! statements on finite ring extensions.

pub mod checks;
pub mod context;
pub mod corpus;
pub mod dsl;
pub mod report;
pub mod runner;
pub mod table_file;

pub use checks::{registry, Check, Verdict};
pub use context::PairContext;
pub use corpus::{Corpus, CorpusSpec};
pub use runner::{run, CheckRecord, RunOptions};
