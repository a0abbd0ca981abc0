//! Dictionaries: connector names, formulas, disjunct expansion and the
//! NL-extended grammar.

mod connector;
mod expr;
mod extended;
mod parse;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

pub use connector::{Connector, ConnectorName, Direction, NULL_LINK_HEAD};
pub use expr::{Disjunct, ExpressionTree};
pub use extended::{build_extended_dictionary, extend_disjuncts};

use crate::error::DictionaryError;

/// Token whose definition is used for words missing from the dictionary.
pub const UNKNOWN_WORD: &str = "<UNKNOWN-WORD>";
/// Token prepended to sentences when walls are enabled.
pub const LEFT_WALL: &str = "LEFT-WALL";

/// Word definitions, immutable once built.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dictionary {
    entries: BTreeMap<String, ExpressionTree>,
}

/// Result of looking a word up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup<'a> {
    Known(&'a ExpressionTree),
    /// The word is undefined and the `<UNKNOWN-WORD>` entry stands in for it.
    Unknown(&'a ExpressionTree),
    Missing,
}

impl Lookup<'_> {
    pub fn is_known(&self) -> bool {
        matches!(self, Lookup::Known(_))
    }
}

impl Dictionary {
    pub fn parse(text: &str) -> Result<Self, DictionaryError> {
        parse::parse_entries(text).map(|entries| Dictionary { entries })
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (String, ExpressionTree)>) -> Self {
        Dictionary {
            entries: entries.into_iter().collect(),
        }
    }

    pub fn get(&self, word: &str) -> Option<&ExpressionTree> {
        self.entries.get(word)
    }

    pub fn lookup(&self, word: &str) -> Lookup<'_> {
        match (self.entries.get(word), self.unknown_entry()) {
            (Some(t), _) => Lookup::Known(t),
            (None, Some(t)) => Lookup::Unknown(t),
            (None, None) => Lookup::Missing,
        }
    }

    pub fn unknown_entry(&self) -> Option<&ExpressionTree> {
        self.entries.get(UNKNOWN_WORD)
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &ExpressionTree)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Renders the dictionary in its file format, one entry per word.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (word, tree) in &self.entries {
            writeln!(out, "{word}: {tree};").unwrap();
        }
        out
    }
}

impl FromStr for Dictionary {
    type Err = DictionaryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Dictionary::parse(s)
    }
}

/// Parses a dictionary file. Multi-word headers bind one formula to each word.
pub fn parse_dictionary(text: &str) -> Result<Dictionary, DictionaryError> {
    Dictionary::parse(text)
}

/// Expands a formula into its (deduplicated) disjunct list.
pub fn expand_disjuncts(tree: &ExpressionTree) -> Vec<Disjunct> {
    tree.expand()
}

/// Name-level match rule; see [`ConnectorName::matches`].
pub fn connectors_match(a: &ConnectorName, b: &ConnectorName) -> bool {
    a.matches(b)
}
