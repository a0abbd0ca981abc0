//! Corpus pipeline around the `linkgram` parser: normalization, utterance
//! splitting, batch parsing with summary statistics, and ASCII diagrams.

pub mod app;
pub mod corpus;
pub mod normalize;
pub mod render;
pub mod stats;

use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub use corpus::{
    parse_sentence, run_batch, split_utterance, BatchReport, CorpusOptions, Outcome, Parsed, Piece, SentenceRecord,
};
pub use normalize::{normalize, MergeList, NormalizeOptions};
pub use render::{layout, render_ascii, Arc};
pub use stats::BatchStats;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Dictionary {
        path: String,
        source: linkgram::DictionaryError,
    },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    /// 1 for usage and dictionary problems, 2 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Dictionary { .. } => 1,
            CliError::Io { .. } => 2,
        }
    }
}
