use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DictionaryError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: connector head `NL` is reserved")]
    ReservedConnector { line: usize, column: usize },
    #[error("{line}: word `{word}` is defined more than once")]
    DuplicateWord { word: String, line: usize },
    #[error("invalid connector name `{0}`")]
    InvalidConnector(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("cannot parse an empty sentence")]
    EmptySentence,
    #[error("sentence has {words} words, the limit is {limit}")]
    TooManyWords { words: usize, limit: usize },
    #[error("memo table exceeded {limit} entries")]
    ResourceLimit { limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute-force search is capped at {cap} words, got {words}")]
    TooManyWords { words: usize, cap: usize },
}
