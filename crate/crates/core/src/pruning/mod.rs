//! Pre-parse reductions: expression pruning on formula trees, power pruning
//! on expanded disjuncts and the fast-match candidate index.

mod expression;
mod fast_match;
mod power;

pub use expression::{expression_prune, SentenceExpressions};
pub use fast_match::{build_fast_match, fast_match_lookup, FastMatchIndex, WordIndex};
pub use power::power_prune;

use crate::dictionary::Disjunct;

/// Per-word disjunct lists for one sentence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DisjunctTable {
    words: Vec<Vec<Disjunct>>,
}

impl DisjunctTable {
    pub fn new(words: Vec<Vec<Disjunct>>) -> Self {
        DisjunctTable { words }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, w: usize) -> &[Disjunct] {
        &self.words[w]
    }

    pub fn words(&self) -> &[Vec<Disjunct>] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Vec<Disjunct>> {
        self.words
    }

    pub fn disjunct_count(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }

    /// Applies [`crate::dictionary::extend_disjuncts`] to every word.
    pub fn extended(&self) -> DisjunctTable {
        DisjunctTable::new(
            self.words
                .iter()
                .map(|ds| crate::dictionary::extend_disjuncts(ds))
                .collect(),
        )
    }
}

/// Sizes before and after each reduction, reported by `--verbose`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PruneStats {
    pub leaves_before: usize,
    pub leaves_after: usize,
    pub expression_passes: usize,
    pub disjuncts_expanded: usize,
    pub disjuncts_after_power: usize,
    pub power_passes: usize,
}

/// Can a left connector `k`-th nearest (0-based) on word `w` link to a right
/// connector `j`-th nearest on word `v < w`? Positions must leave room for
/// the nearer links on both words, and the link must respect the length
/// bound.
pub(crate) fn span_admissible(v: usize, w: usize, j: usize, k: usize, max_link_length: Option<usize>) -> bool {
    let dist = w - v;
    dist > j && dist > k && max_link_length.is_none_or(|m| dist <= m)
}
