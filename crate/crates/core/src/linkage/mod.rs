//! Linkages: representation, validation, decomposition, enumeration from the
//! engine, and the brute-force oracle.

mod chained;
mod oracle;
mod validate;

use std::fmt;

pub use chained::{decompose_chained, is_canonical, Component, ComponentKind};
pub use oracle::{brute_force_oracle, count_extended_legal, OracleReport, ORACLE_MAX_WORDS};
pub use validate::{validate_linkage, Violation};

use crate::dictionary::ConnectorName;
use crate::engine::Engine;
use crate::pruning::DisjunctTable;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkLabel {
    Connector(ConnectorName),
    Null,
}

impl LinkLabel {
    pub fn is_null(&self) -> bool {
        matches!(self, LinkLabel::Null)
    }
}

impl fmt::Display for LinkLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkLabel::Connector(name) => write!(f, "{name}"),
            LinkLabel::Null => f.write_str("@NULL"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Link {
    pub left: usize,
    pub right: usize,
    pub label: LinkLabel,
}

impl Link {
    pub fn new(left: usize, right: usize, label: LinkLabel) -> Self {
        Link { left, right, label }
    }

    pub fn null(left: usize) -> Self {
        Link::new(left, left + 1, LinkLabel::Null)
    }

    pub fn is_null(&self) -> bool {
        self.label.is_null()
    }
}

/// How a word takes part in a linkage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordChoice {
    /// Index into the word's disjunct list.
    Disjunct(usize),
    /// The word makes no real links; it hangs on null links only.
    Isolated,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Linkage {
    /// Sorted by `(left, right, label)`.
    pub links: Vec<Link>,
    pub choices: Vec<WordChoice>,
}

impl Linkage {
    /// Builds a linkage with its links in canonical order.
    pub fn new(mut links: Vec<Link>, choices: Vec<WordChoice>) -> Self {
        links.sort();
        Linkage { links, choices }
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    /// Number of null links.
    pub fn cost(&self) -> usize {
        self.links.iter().filter(|l| l.is_null()).count()
    }

    pub fn isolated_words(&self) -> usize {
        self.choices.iter().filter(|c| **c == WordChoice::Isolated).count()
    }

    /// The same linkage with disjunct choices pointing into `to` instead of
    /// `from`, matched by value. `None` if a chosen disjunct is missing.
    pub fn reindex(&self, from: &DisjunctTable, to: &DisjunctTable) -> Option<Linkage> {
        let choices = self
            .choices
            .iter()
            .enumerate()
            .map(|(w, ch)| match *ch {
                WordChoice::Disjunct(i) => {
                    let d = &from.word(w)[i];
                    to.word(w).iter().position(|e| e == d).map(WordChoice::Disjunct)
                }
                WordChoice::Isolated => Some(WordChoice::Isolated),
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Linkage {
            links: self.links.clone(),
            choices,
        })
    }

    /// One line per link, `L R LABEL`, in canonical order.
    pub fn to_text(&self) -> String {
        self.links
            .iter()
            .map(|l| format!("{} {} {}\n", l.left, l.right, l.label))
            .collect()
    }
}

/// Linkages of the minimum cost, in the engine's recursion order, at most
/// `limit` of them. The flag says whether the limit cut the list short.
pub fn enumerate_linkages(engine: &mut Engine, limit: usize) -> (Vec<Linkage>, bool) {
    let total = engine.count_min_cost();
    let linkages = engine.enumerate(limit);
    let truncated = total > linkages.len() as u128;
    (linkages, truncated)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let lk = Linkage::new(
            vec![
                Link::null(1),
                Link::new(0, 1, LinkLabel::Connector("Ss".parse().unwrap())),
            ],
            vec![WordChoice::Disjunct(0), WordChoice::Disjunct(0), WordChoice::Isolated],
        );
        assert_eq!(lk.to_text(), "0 1 Ss\n1 2 @NULL\n");
        assert_eq!(lk.cost(), 1);
        assert_eq!(lk.isolated_words(), 1);
    }
}
