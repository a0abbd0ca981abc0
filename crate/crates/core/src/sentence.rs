//! From tokens to the pruned, indexed disjunct table the engine consumes.

use crate::dictionary::{Dictionary, Lookup, LEFT_WALL};
use crate::pruning::{build_fast_match, power_prune, DisjunctTable, FastMatchIndex, PruneStats, SentenceExpressions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrepareOptions {
    /// Null links allowed; relaxes power pruning accordingly.
    pub robust: bool,
    pub max_link_length: Option<usize>,
    /// Expression and power pruning. Turning it off never changes counts.
    pub prune: bool,
    /// Prepend [`LEFT_WALL`] to the tokens.
    pub wall: bool,
}

impl Default for PrepareOptions {
    fn default() -> Self {
        PrepareOptions {
            robust: true,
            max_link_length: None,
            prune: true,
            wall: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PreparedSentence {
    pub words: Vec<String>,
    /// Words looked up through `<UNKNOWN-WORD>` or missing altogether.
    pub unknown: Vec<bool>,
    pub index: FastMatchIndex,
    pub stats: PruneStats,
}

impl PreparedSentence {
    pub fn table(&self) -> &DisjunctTable {
        self.index.table()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

pub fn prepare<S: AsRef<str>>(dict: &Dictionary, tokens: &[S], opts: &PrepareOptions) -> PreparedSentence {
    let mut words: Vec<String> = Vec::with_capacity(tokens.len() + 1);
    if opts.wall {
        words.push(LEFT_WALL.to_owned());
    }
    words.extend(tokens.iter().map(|t| t.as_ref().to_owned()));
    let mut unknown = Vec::with_capacity(words.len());
    let trees = words
        .iter()
        .map(|w| {
            let lookup = dict.lookup(w);
            unknown.push(!lookup.is_known());
            match lookup {
                Lookup::Known(t) | Lookup::Unknown(t) => Some(t.clone()),
                Lookup::Missing => None,
            }
        })
        .collect();
    let mut exprs = SentenceExpressions::new(trees);
    let mut stats = PruneStats {
        leaves_before: exprs.leaf_count(),
        ..PruneStats::default()
    };
    if opts.prune {
        stats.expression_passes = exprs.prune(opts.max_link_length);
    }
    stats.leaves_after = exprs.leaf_count();
    let table = DisjunctTable::new(
        exprs
            .into_trees()
            .into_iter()
            .map(|t| t.map(|t| t.expand()).unwrap_or_default())
            .collect(),
    );
    stats.disjuncts_expanded = table.disjunct_count();
    let table = if opts.prune {
        let (t, passes) = power_prune(table, opts.robust, opts.max_link_length);
        stats.power_passes = passes;
        t
    } else {
        table
    };
    stats.disjuncts_after_power = table.disjunct_count();
    PreparedSentence {
        words,
        unknown,
        index: build_fast_match(table),
        stats,
    }
}

/// Same pipeline, straight from a table; used when the disjuncts come from
/// somewhere other than a dictionary.
pub fn prepare_table(table: DisjunctTable, opts: &PrepareOptions) -> (FastMatchIndex, PruneStats) {
    let mut stats = PruneStats {
        disjuncts_expanded: table.disjunct_count(),
        ..PruneStats::default()
    };
    let table = if opts.prune {
        let (t, passes) = power_prune(table, opts.robust, opts.max_link_length);
        stats.power_passes = passes;
        t
    } else {
        table
    };
    stats.disjuncts_after_power = table.disjunct_count();
    (build_fast_match(table), stats)
}
