//! Turning raw utterances into tokens.

use std::collections::BTreeMap;

use crate::CliError;

/// Word sequences to be joined with `_` into a single token, such as
/// `you know` into `you_know`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MergeList {
    // first word -> continuations, longest first
    by_first: BTreeMap<String, Vec<Vec<String>>>,
}

impl MergeList {
    pub fn new() -> Self {
        Self::default()
    }

    /// One phrase of two or more words per line. Blank lines and lines
    /// starting with `#` are ignored. Phrases are case folded.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut list = MergeList::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let words: Vec<String> = line.split_whitespace().map(str::to_lowercase).collect();
            if words.len() < 2 {
                return Err(CliError::Usage(format!(
                    "merge list line {}: expected at least two words",
                    i + 1
                )));
            }
            list.insert(&words);
        }
        Ok(list)
    }

    pub fn insert<S: AsRef<str>>(&mut self, phrase: &[S]) {
        let (first, rest) = phrase.split_first().expect("nonempty phrase");
        let rest: Vec<String> = rest.iter().map(|s| s.as_ref().to_owned()).collect();
        let entry = self.by_first.entry(first.as_ref().to_owned()).or_default();
        if !entry.contains(&rest) {
            entry.push(rest);
            entry.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.by_first.is_empty()
    }

    /// Greedy left to right, longest phrase first.
    pub fn apply(&self, tokens: Vec<String>) -> Vec<String> {
        if self.is_empty() {
            return tokens;
        }
        let mut out = Vec::with_capacity(tokens.len());
        let mut i = 0;
        while i < tokens.len() {
            let hit = self.by_first.get(&tokens[i]).and_then(|conts| {
                conts
                    .iter()
                    .find(|c| tokens[i + 1..].len() >= c.len() && tokens[i + 1..i + 1 + c.len()] == c[..])
            });
            match hit {
                Some(c) => {
                    out.push(tokens[i..=i + c.len()].join("_"));
                    i += c.len() + 1;
                }
                None => {
                    out.push(tokens[i].clone());
                    i += 1;
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizeOptions {
    pub lowercase_fold: bool,
    pub strip_punctuation: bool,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            lowercase_fold: true,
            strip_punctuation: true,
        }
    }
}

/// Splits on whitespace, then optionally drops punctuation and folds case,
/// then applies the merges. Apostrophes and underscores are kept so that
/// `haven't` and pre-merged tokens survive; a typographic apostrophe becomes
/// `'`. Tokens left empty are dropped.
pub fn normalize(text: &str, opts: &NormalizeOptions, merges: &MergeList) -> Vec<String> {
    let tokens = text
        .split_whitespace()
        .map(|t| {
            let t: String = if opts.strip_punctuation {
                t.chars()
                    .map(|c| if c == '\u{2019}' { '\'' } else { c })
                    .filter(|&c| c.is_alphanumeric() || c == '\'' || c == '_')
                    .collect()
            } else {
                t.to_owned()
            };
            if opts.lowercase_fold {
                t.to_lowercase()
            } else {
                t
            }
        })
        .filter(|t| !t.is_empty())
        .collect();
    merges.apply(tokens)
}
