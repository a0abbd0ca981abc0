//! Splitting utterances into sentences and parsing a corpus.

use std::time::{Duration, Instant};

use linkgram::{prepare, Dictionary, Engine, EngineOptions, Linkage, ParseError, PrepareOptions, PruneStats};
use rayon::prelude::*;

use crate::normalize::{normalize, MergeList, NormalizeOptions};
use crate::stats::BatchStats;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusOptions {
    pub max_tokens_per_sentence: usize,
    /// Sentences shorter than this are skipped.
    pub min_words: usize,
    pub max_link_length: Option<usize>,
    pub lowercase_fold: bool,
    pub strip_punctuation: bool,
    /// Linkages enumerated per sentence.
    pub linkage_limit: usize,
    pub wall: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            max_tokens_per_sentence: 25,
            min_words: 4,
            max_link_length: None,
            lowercase_fold: true,
            strip_punctuation: true,
            linkage_limit: 10,
            wall: false,
        }
    }
}

impl CorpusOptions {
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Usage(m.to_owned()));
        if self.min_words == 0 {
            return bad("--min-words must be at least 1");
        }
        if self.max_tokens_per_sentence < self.min_words {
            return bad("--max-tokens must be at least --min-words");
        }
        if self.max_link_length == Some(0) {
            return bad("--max-link-length must be at least 1");
        }
        if self.linkage_limit == 0 {
            return bad("--linkage-limit must be at least 1");
        }
        Ok(())
    }

    pub fn normalize_options(&self) -> NormalizeOptions {
        NormalizeOptions {
            lowercase_fold: self.lowercase_fold,
            strip_punctuation: self.strip_punctuation,
        }
    }

    pub fn prepare_options(&self) -> PrepareOptions {
        PrepareOptions {
            robust: true,
            max_link_length: self.max_link_length,
            prune: true,
            wall: self.wall,
        }
    }

    pub fn engine_options(&self) -> EngineOptions {
        EngineOptions {
            max_link_length: self.max_link_length,
            ..EngineOptions::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub tokens: Vec<String>,
    pub skipped: bool,
}

/// Plain greedy chunking from the left. Nothing clever is attempted at the
/// boundaries; any smarter splitter can replace this one.
pub fn split_utterance(tokens: &[String], opts: &CorpusOptions) -> Vec<Piece> {
    tokens
        .chunks(opts.max_tokens_per_sentence)
        .map(|c| Piece {
            tokens: c.to_vec(),
            skipped: c.len() < opts.min_words,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub grammatical_count: u128,
    pub min_cost: u32,
    pub min_cost_count: u128,
    pub linkages: Vec<Linkage>,
    pub truncated: bool,
    pub prune_stats: PruneStats,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Skipped,
    Parsed(Parsed),
    Failed(ParseError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SentenceRecord {
    /// Zero-based line of the corpus.
    pub utterance: usize,
    /// Zero-based piece within the utterance.
    pub piece: usize,
    /// The words handed to the parser, including the wall if any.
    pub words: Vec<String>,
    /// Tokens of the piece as split, without the wall.
    pub tokens: usize,
    pub unknown_words: bool,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl SentenceRecord {
    pub fn is_skipped(&self) -> bool {
        self.outcome == Outcome::Skipped
    }

    pub fn parsed(&self) -> Option<&Parsed> {
        match &self.outcome {
            Outcome::Parsed(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BatchReport {
    pub records: Vec<SentenceRecord>,
    pub stats: BatchStats,
}

/// Parses one sentence and enumerates up to `opts.linkage_limit` of its
/// minimum-cost linkages.
pub fn parse_sentence<S: AsRef<str>>(
    dict: &Dictionary,
    tokens: &[S],
    opts: &CorpusOptions,
) -> (Vec<String>, bool, Result<Parsed, ParseError>) {
    let prepared = prepare(dict, tokens, &opts.prepare_options());
    let unknown = prepared.unknown.iter().skip(usize::from(opts.wall)).any(|&u| u);
    let result = Engine::new(&prepared.index, opts.engine_options()).and_then(|mut e| {
        let r = e.run()?;
        let (linkages, truncated) = linkgram::enumerate_linkages(&mut e, opts.linkage_limit);
        e.check_limit()?;
        Ok(Parsed {
            grammatical_count: r.grammatical_count,
            min_cost: r.min_cost,
            min_cost_count: r.min_cost_count,
            linkages,
            truncated,
            prune_stats: prepared.stats,
        })
    });
    (prepared.words, unknown, result)
}

/// Normalizes, splits and parses every line of `corpus`. Sentences are parsed
/// in parallel; records come back in corpus order.
pub fn run_batch(
    corpus: &str,
    dict: &Dictionary,
    merges: &MergeList,
    opts: &CorpusOptions,
) -> Result<BatchReport, CliError> {
    opts.validate()?;
    let norm = opts.normalize_options();
    let mut jobs = Vec::new();
    for (utterance, line) in corpus.lines().enumerate() {
        let tokens = normalize(line, &norm, merges);
        for (piece, p) in split_utterance(&tokens, opts).into_iter().enumerate() {
            jobs.push((utterance, piece, p));
        }
    }
    let records: Vec<SentenceRecord> = jobs
        .into_par_iter()
        .map(|(utterance, piece, p)| {
            let n = p.tokens.len();
            if p.skipped {
                return SentenceRecord {
                    utterance,
                    piece,
                    words: p.tokens,
                    tokens: n,
                    unknown_words: false,
                    outcome: Outcome::Skipped,
                    elapsed: Duration::ZERO,
                };
            }
            let start = Instant::now();
            let (words, unknown_words, result) = parse_sentence(dict, &p.tokens, opts);
            SentenceRecord {
                utterance,
                piece,
                words,
                tokens: n,
                unknown_words,
                outcome: match result {
                    Ok(p) => Outcome::Parsed(p),
                    Err(e) => Outcome::Failed(e),
                },
                elapsed: start.elapsed(),
            }
        })
        .collect();
    let stats = BatchStats::from_records(&records);
    Ok(BatchReport { records, stats })
}
