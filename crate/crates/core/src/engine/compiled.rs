use rustc_hash::FxHashMap;

use crate::dictionary::ConnectorName;
use crate::pruning::FastMatchIndex;

/// Position 0 of the arena: the empty connector list.
pub(crate) const NIL: u32 = 0;

/// A sentence's disjuncts with every connector list laid out once in an
/// arena, farthest connector first, so that a list tail is a single `u32`.
pub(crate) struct Compiled {
    pub words: usize,
    pub names: Vec<ConnectorName>,
    matches: Vec<bool>,
    /// `(connector id, next position)` per arena slot; slot 0 is unused.
    nodes: Vec<(u32, u32)>,
    /// `(left list, right list)` per word and disjunct.
    pub disjuncts: Vec<Vec<(u32, u32)>>,
    /// Disjuncts whose outer left connector matches a given connector id.
    by_left: Vec<Vec<Vec<u32>>>,
    by_right: Vec<Vec<Vec<u32>>>,
    pub nil_left: Vec<Vec<u32>>,
    /// `nil_left` without the empty disjunct.
    pub nil_left_nonempty: Vec<Vec<u32>>,
    max_link_length: Option<usize>,
}

impl Compiled {
    pub fn new(index: &FastMatchIndex, max_link_length: Option<usize>) -> Self {
        let table = index.table();
        let mut ids: FxHashMap<ConnectorName, u32> = FxHashMap::default();
        let mut names = Vec::new();
        let mut nodes = vec![(u32::MAX, NIL)];
        let mut intern = |name: &ConnectorName, names: &mut Vec<ConnectorName>| {
            *ids.entry(name.clone()).or_insert_with(|| {
                names.push(name.clone());
                (names.len() - 1) as u32
            })
        };
        let mut lay_out = |list: &[ConnectorName], names: &mut Vec<ConnectorName>| {
            let mut next = NIL;
            // nearest-first storage, so build the chain from the nearest end
            for name in list {
                let id = intern(name, names);
                nodes.push((id, next));
                next = (nodes.len() - 1) as u32;
            }
            next
        };
        let disjuncts: Vec<Vec<(u32, u32)>> = table
            .words()
            .iter()
            .map(|ds| {
                ds.iter()
                    .map(|d| (lay_out(&d.left, &mut names), lay_out(&d.right, &mut names)))
                    .collect()
            })
            .collect();
        let k = names.len();
        let mut matches = vec![false; k * k];
        for (i, a) in names.iter().enumerate() {
            for (j, b) in names.iter().enumerate() {
                matches[i * k + j] = a.matches(b);
            }
        }
        let by_left = (0..table.len())
            .map(|w| names.iter().map(|n| to_u32(index.lookup(w, Some(n), None))).collect())
            .collect();
        let by_right = (0..table.len())
            .map(|w| names.iter().map(|n| to_u32(index.lookup(w, None, Some(n)))).collect())
            .collect();
        let nil_left: Vec<Vec<u32>> = (0..table.len()).map(|w| to_u32(index.lookup(w, None, None))).collect();
        let nil_left_nonempty = nil_left
            .iter()
            .enumerate()
            .map(|(w, ds)| {
                ds.iter()
                    .copied()
                    .filter(|&d| disjuncts[w][d as usize].1 != NIL)
                    .collect()
            })
            .collect();
        Compiled {
            words: table.len(),
            names,
            matches,
            nodes,
            disjuncts,
            by_left,
            by_right,
            nil_left,
            nil_left_nonempty,
            max_link_length,
        }
    }

    pub fn conn(&self, pos: u32) -> u32 {
        self.nodes[pos as usize].0
    }

    pub fn next(&self, pos: u32) -> u32 {
        self.nodes[pos as usize].1
    }

    /// Can the list heads `a` (on the left word) and `b` (on the right word)
    /// link across `dist` words?
    pub fn link_ok(&self, a: u32, b: u32, dist: usize) -> bool {
        a != NIL
            && b != NIL
            && self.max_link_length.is_none_or(|m| dist <= m)
            && self.matches[self.conn(a) as usize * self.names.len() + self.conn(b) as usize]
    }

    pub fn label(&self, a: u32, b: u32) -> ConnectorName {
        self.names[self.conn(a) as usize].link_label(&self.names[self.conn(b) as usize])
    }

    /// Disjuncts of `w` that could link to `l` on the left or to `r` on the
    /// right, ascending.
    pub fn candidates<'a>(&'a self, w: usize, l: u32, r: u32) -> Merge<'a> {
        let pick = |table: &'a [Vec<Vec<u32>>], pos: u32| -> &'a [u32] {
            if pos == NIL {
                &[]
            } else {
                &table[w][self.conn(pos) as usize]
            }
        };
        Merge {
            a: pick(&self.by_left, l),
            b: pick(&self.by_right, r),
        }
    }
}

fn to_u32(v: Vec<usize>) -> Vec<u32> {
    v.into_iter().map(|i| i as u32).collect()
}

/// Sorted union of two ascending slices.
pub(crate) struct Merge<'a> {
    a: &'a [u32],
    b: &'a [u32],
}

impl Iterator for Merge<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        match (self.a.first(), self.b.first()) {
            (None, None) => None,
            (Some(&x), None) => {
                self.a = &self.a[1..];
                Some(x)
            }
            (None, Some(&y)) => {
                self.b = &self.b[1..];
                Some(y)
            }
            (Some(&x), Some(&y)) => {
                if x <= y {
                    self.a = &self.a[1..];
                }
                if y <= x {
                    self.b = &self.b[1..];
                }
                Some(x.min(y))
            }
        }
    }
}
