use std::collections::BTreeMap;

use super::DisjunctTable;
use crate::dictionary::ConnectorName;

/// Candidate tables for one word. Values are indices into the word's
/// disjunct list.
///
/// Disjuncts are keyed on the head of the connector a span parser consumes
/// first, which is the outermost one of each list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WordIndex {
    pub left: BTreeMap<String, Vec<usize>>,
    pub right: BTreeMap<String, Vec<usize>>,
    pub nil_left: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FastMatchIndex {
    table: DisjunctTable,
    words: Vec<WordIndex>,
}

impl FastMatchIndex {
    pub fn table(&self) -> &DisjunctTable {
        &self.table
    }

    pub fn word(&self, w: usize) -> &WordIndex {
        &self.words[w]
    }

    /// Indices of the disjuncts of `w` whose outer left connector matches
    /// `l` or whose outer right connector matches `r`, ascending. With both
    /// absent, the disjuncts with an empty left list.
    pub fn lookup(&self, w: usize, l: Option<&ConnectorName>, r: Option<&ConnectorName>) -> Vec<usize> {
        let entry = &self.words[w];
        if l.is_none() && r.is_none() {
            return entry.nil_left.clone();
        }
        let ds = self.table.word(w);
        let mut out = Vec::new();
        if let Some(l) = l {
            if let Some(bucket) = entry.left.get(l.head()) {
                out.extend(
                    bucket
                        .iter()
                        .copied()
                        .filter(|&i| ds[i].outer_left().is_some_and(|c| c.matches(l))),
                );
            }
        }
        if let Some(r) = r {
            if let Some(bucket) = entry.right.get(r.head()) {
                out.extend(
                    bucket
                        .iter()
                        .copied()
                        .filter(|&i| ds[i].outer_right().is_some_and(|c| c.matches(r))),
                );
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub fn build_fast_match(table: DisjunctTable) -> FastMatchIndex {
    let words = table
        .words()
        .iter()
        .map(|ds| {
            let mut idx = WordIndex::default();
            for (i, d) in ds.iter().enumerate() {
                match d.outer_left() {
                    Some(c) => idx.left.entry(c.head().to_owned()).or_default().push(i),
                    None => idx.nil_left.push(i),
                }
                if let Some(c) = d.outer_right() {
                    idx.right.entry(c.head().to_owned()).or_default().push(i);
                }
            }
            idx
        })
        .collect();
    FastMatchIndex { table, words }
}

pub fn fast_match_lookup(
    idx: &FastMatchIndex,
    w: usize,
    l: Option<&ConnectorName>,
    r: Option<&ConnectorName>,
) -> Vec<usize> {
    idx.lookup(w, l, r)
}
