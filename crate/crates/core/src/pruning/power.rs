use super::{span_admissible, DisjunctTable};
use crate::dictionary::{ConnectorName, Disjunct};

/// Deletes disjuncts with a connector that has no admissible partner.
///
/// A partner is a matching connector on the opposite list of some disjunct of
/// another word, at a distance that leaves room for the nearer connectors of
/// both lists and respects `max_link_length`. Outside robust mode, a link
/// between the nearest connectors of two words that are not neighbours is
/// never admissible: nothing could connect the words in between. Passes
/// alternate direction until a fixpoint; returns the table and the pass count.
pub fn power_prune(table: DisjunctTable, robust: bool, max_link_length: Option<usize>) -> (DisjunctTable, usize) {
    let mut words = table.into_words();
    let mut passes = 0;
    loop {
        let mut changed = false;
        for forward in [true, false] {
            passes += 1;
            let n = words.len();
            let order: Vec<usize> = if forward {
                (0..n).collect()
            } else {
                (0..n).rev().collect()
            };
            for w in order {
                let before = words[w].len();
                let keep: Vec<bool> = words[w]
                    .iter()
                    .map(|d| survives(&words, w, d, robust, max_link_length))
                    .collect();
                let mut it = keep.into_iter();
                words[w].retain(|_| it.next().unwrap());
                changed |= words[w].len() != before;
            }
        }
        if !changed {
            return (DisjunctTable::new(words), passes);
        }
    }
}

fn survives(words: &[Vec<Disjunct>], w: usize, d: &Disjunct, robust: bool, max: Option<usize>) -> bool {
    let left_ok = d
        .left
        .iter()
        .enumerate()
        .all(|(k, c)| (0..w).any(|v| has_partner(&words[v], v, w, c, k, false, robust, max)));
    left_ok
        && d.right
            .iter()
            .enumerate()
            .all(|(j, c)| (w + 1..words.len()).any(|v| has_partner(&words[v], w, v, c, j, true, robust, max)))
}

// `c` is `pos`-th nearest on word `w`; the partner lives on the other of the
// pair `(lo, hi)`. `c_is_right` says which list of `c`'s word it sits in.
#[allow(clippy::too_many_arguments)]
fn has_partner(
    others: &[Disjunct],
    lo: usize,
    hi: usize,
    c: &ConnectorName,
    pos: usize,
    c_is_right: bool,
    robust: bool,
    max: Option<usize>,
) -> bool {
    others.iter().any(|e| {
        let list = if c_is_right { &e.left } else { &e.right };
        list.iter().enumerate().any(|(q, p)| {
            let (j, k) = if c_is_right { (pos, q) } else { (q, pos) };
            span_admissible(lo, hi, j, k, max) && (robust || hi - lo == 1 || j > 0 || k > 0) && p.matches(c)
        })
    })
}
