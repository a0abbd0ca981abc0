use rustc_hash::FxHashMap;

use crate::dictionary::{ConnectorName, Direction, ExpressionTree};

/// Working copies of the formulas of one sentence. `None` marks a word whose
/// formula can no longer be satisfied (or that had none to begin with).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SentenceExpressions {
    trees: Vec<Option<ExpressionTree>>,
}

impl SentenceExpressions {
    pub fn new(trees: Vec<Option<ExpressionTree>>) -> Self {
        SentenceExpressions { trees }
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[Option<ExpressionTree>] {
        &self.trees
    }

    pub fn into_trees(self) -> Vec<Option<ExpressionTree>> {
        self.trees
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().flatten().map(|t| t.leaves().len()).sum()
    }

    /// Prunes in place and returns the number of directional passes run.
    pub fn prune(&mut self, max_link_length: Option<usize>) -> usize {
        let mut passes = 0;
        loop {
            let before = self.leaf_count();
            let alive_before = self.trees.iter().filter(|t| t.is_some()).count();
            self.sweep(Direction::Left, max_link_length);
            self.sweep(Direction::Right, max_link_length);
            passes += 2;
            let alive_after = self.trees.iter().filter(|t| t.is_some()).count();
            if self.leaf_count() == before && alive_after == alive_before {
                return passes;
            }
        }
    }

    /// One pass. With `Direction::Left`, words are visited left to right and
    /// their left leaves are checked against the right leaves seen so far.
    fn sweep(&mut self, checked: Direction, max_link_length: Option<usize>) {
        let n = self.trees.len();
        let order: Vec<usize> = match checked {
            Direction::Left => (0..n).collect(),
            Direction::Right => (0..n).rev().collect(),
        };
        let mut seen: FxHashMap<String, Vec<(usize, ConnectorName)>> = FxHashMap::default();
        for w in order {
            let Some(tree) = self.trees[w].take() else {
                continue;
            };
            let pruned = tree.retain_leaves(&mut |c| {
                if c.direction != checked {
                    return true;
                }
                seen.get(c.name.head()).is_some_and(|cands| {
                    cands
                        .iter()
                        .any(|(v, name)| max_link_length.is_none_or(|m| v.abs_diff(w) <= m) && name.matches(&c.name))
                })
            });
            if let Some(t) = &pruned {
                for leaf in t.leaves() {
                    if leaf.direction != checked {
                        seen.entry(leaf.name.head().to_owned())
                            .or_default()
                            .push((w, leaf.name.clone()));
                    }
                }
            }
            self.trees[w] = pruned;
        }
    }
}

/// Deletes formula leaves that cannot find a partner on the side they point
/// to, together with everything joined to them by `&`, until nothing changes.
pub fn expression_prune(exprs: SentenceExpressions, max_link_length: Option<usize>) -> SentenceExpressions {
    let mut exprs = exprs;
    exprs.prune(max_link_length);
    exprs
}
