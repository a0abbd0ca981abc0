//! A link-grammar parser that also handles ungrammatical input.
//!
//! Sentences that have no legal linkage are parsed with null links: unlabeled
//! links between neighbouring words that hold otherwise disconnected pieces
//! together. The parser reports the number of legal linkages, the fewest null
//! links any linkage needs, and how many linkages attain that minimum.
//!
//! ```
//! use linkgram::{desk_dictionary, parse_tokens, ParseOptions};
//!
//! let dict = desk_dictionary();
//! let r = parse_tokens(&dict, &["mary", "liked", "the", "movie", "too"], &ParseOptions::default()).unwrap();
//! assert_eq!((r.grammatical_count, r.min_cost, r.min_cost_count), (0, 1, 1));
//! ```

pub mod dictionary;
pub mod engine;
pub mod error;
pub mod linkage;
pub mod pruning;
pub mod sentence;

pub use dictionary::{
    build_extended_dictionary, connectors_match, expand_disjuncts, parse_dictionary, Connector, ConnectorName,
    Dictionary, Direction, Disjunct, ExpressionTree,
};
pub use engine::{parse, Cost, Count, Engine, EngineOptions, ParseResult, PassCounters};
pub use error::{DictionaryError, OracleError, ParseError};
pub use linkage::{
    brute_force_oracle, decompose_chained, enumerate_linkages, validate_linkage, Link, LinkLabel, Linkage,
    OracleReport, Violation, WordChoice,
};
pub use pruning::{DisjunctTable, FastMatchIndex, PruneStats};
pub use sentence::{prepare, PrepareOptions, PreparedSentence};

/// Source of the bundled dictionary.
pub const DESK_DICTIONARY: &str = include_str!("../data/desk.dict");

pub fn desk_dictionary() -> Dictionary {
    Dictionary::parse(DESK_DICTIONARY).expect("bundled dictionary parses")
}

/// Options for the whole pipeline, from lookup to the three passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub max_link_length: Option<usize>,
    pub prune: bool,
    pub wall: bool,
    pub engine: EngineOptions,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_link_length: None,
            prune: true,
            wall: false,
            engine: EngineOptions::default(),
        }
    }
}

impl ParseOptions {
    pub fn prepare_options(&self) -> PrepareOptions {
        PrepareOptions {
            robust: true,
            max_link_length: self.max_link_length,
            prune: self.prune,
            wall: self.wall,
        }
    }

    pub fn engine_options(&self) -> EngineOptions {
        EngineOptions {
            max_link_length: self.max_link_length,
            ..self.engine
        }
    }
}

/// Looks up, prunes and parses one tokenized sentence.
pub fn parse_tokens<S: AsRef<str>>(
    dict: &Dictionary,
    tokens: &[S],
    opts: &ParseOptions,
) -> Result<ParseResult, ParseError> {
    let prepared = prepare(dict, tokens, &opts.prepare_options());
    let mut result = parse(&prepared.index, opts.engine_options())?;
    result.prune_stats = prepared.stats;
    Ok(result)
}
