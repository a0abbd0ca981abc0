use super::{Link, Linkage, WordChoice};
use crate::pruning::DisjunctTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Legal,
    IsolatedWord,
}

/// A connected piece of a linkage once its null links are removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Ascending word indices.
    pub words: Vec<usize>,
    /// The real links among `words`, original indices.
    pub links: Vec<Link>,
    pub kind: ComponentKind,
}

impl Component {
    /// The component as a linkage of its own, with words renumbered from 0,
    /// together with the matching slice of the disjunct table.
    pub fn restrict(&self, lk: &Linkage, table: &DisjunctTable) -> (Linkage, DisjunctTable) {
        let pos = |w: usize| self.words.binary_search(&w).unwrap();
        let links = self
            .links
            .iter()
            .map(|l| Link::new(pos(l.left), pos(l.right), l.label.clone()))
            .collect();
        let choices = self.words.iter().map(|&w| lk.choices[w]).collect();
        let sub = DisjunctTable::new(self.words.iter().map(|&w| table.word(w).to_vec()).collect());
        (Linkage::new(links, choices), sub)
    }
}

/// Splits a chained linkage at its null links into legal linkages and
/// isolated words, ordered by first word.
pub fn decompose_chained(lk: &Linkage) -> Vec<Component> {
    let n = lk.len();
    let mut comp = vec![usize::MAX; n];
    let mut adj = vec![Vec::new(); n];
    for l in lk.links.iter().filter(|l| !l.is_null()) {
        adj[l.left].push(l.right);
        adj[l.right].push(l.left);
    }
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut words = vec![start];
        comp[start] = id;
        let mut i = 0;
        while i < words.len() {
            for &u in &adj[words[i]] {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    words.push(u);
                }
            }
            i += 1;
        }
        words.sort_unstable();
        let kind = if words.len() == 1 && lk.choices[start] == WordChoice::Isolated {
            ComponentKind::IsolatedWord
        } else {
            ComponentKind::Legal
        };
        out.push(Component {
            words,
            links: Vec::new(),
            kind,
        });
    }
    for l in lk.links.iter().filter(|l| !l.is_null()) {
        out[comp[l.left]].links.push(l.clone());
    }
    out
}

/// Is `lk` one of the linkages the engine counts? Each chained linkage has
/// exactly one counted representative with the same minimum-cost structure:
/// words use a nonempty disjunct or stay isolated, and every null link
/// `(x, x + 1)` is a bridge whose right side lies entirely after `x`.
pub fn is_canonical(lk: &Linkage, table: &DisjunctTable) -> bool {
    if lk
        .choices
        .iter()
        .enumerate()
        .any(|(w, ch)| matches!(*ch, WordChoice::Disjunct(i) if table.word(w)[i].is_empty()))
    {
        return false;
    }
    let n = lk.len();
    lk.links.iter().filter(|l| l.is_null()).all(|null| {
        let x = null.left;
        let mut adj = vec![Vec::new(); n];
        for l in lk.links.iter().filter(|l| *l != null) {
            adj[l.left].push(l.right);
            adj[l.right].push(l.left);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![x + 1];
        seen[x + 1] = true;
        while let Some(v) = stack.pop() {
            if v <= x {
                return false;
            }
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        true
    })
}
