use std::fmt;

use super::{LinkLabel, Linkage, WordChoice};
use crate::pruning::DisjunctTable;

/// The first rule a linkage breaks, in the order the checks run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Indices out of range, a link not going left to right, or a choice
    /// list of the wrong length.
    Malformed(String),
    NullNotAdjacent {
        left: usize,
        right: usize,
    },
    /// Two links join the same pair of words.
    Exclusion {
        left: usize,
        right: usize,
    },
    Planarity {
        first: (usize, usize),
        second: (usize, usize),
    },
    Connectivity,
    /// A word marked isolated makes real links.
    Chained {
        word: usize,
    },
    /// The real links of a word do not use up its disjunct.
    Formula {
        word: usize,
    },
    /// The connectors paired by a link, ranked by distance on each side, do
    /// not match or do not give the recorded label.
    Ordering {
        left: usize,
        right: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed(m) => write!(f, "malformed linkage: {m}"),
            Violation::NullNotAdjacent { left, right } => write!(f, "null link {left}-{right} skips words"),
            Violation::Exclusion { left, right } => write!(f, "words {left} and {right} are linked twice"),
            Violation::Planarity { first, second } => {
                write!(f, "links {}-{} and {}-{} cross", first.0, first.1, second.0, second.1)
            }
            Violation::Connectivity => f.write_str("linkage is not connected"),
            Violation::Chained { word } => write!(f, "isolated word {word} has links"),
            Violation::Formula { word } => write!(f, "links of word {word} do not fit its disjunct"),
            Violation::Ordering { left, right } => write!(f, "link {left}-{right} pairs connectors that do not match"),
        }
    }
}

pub fn validate_linkage(lk: &Linkage, table: &DisjunctTable) -> Result<(), Violation> {
    let n = table.len();
    if lk.choices.len() != n {
        return Err(Violation::Malformed(format!(
            "{} choices for {n} words",
            lk.choices.len()
        )));
    }
    for (w, ch) in lk.choices.iter().enumerate() {
        if let WordChoice::Disjunct(i) = *ch {
            if i >= table.word(w).len() {
                return Err(Violation::Malformed(format!("word {w} has no disjunct {i}")));
            }
        }
    }
    for l in &lk.links {
        if l.left >= l.right || l.right >= n {
            return Err(Violation::Malformed(format!("bad link {}-{}", l.left, l.right)));
        }
    }
    for l in &lk.links {
        if l.is_null() && l.right != l.left + 1 {
            return Err(Violation::NullNotAdjacent {
                left: l.left,
                right: l.right,
            });
        }
    }
    let mut pairs: Vec<(usize, usize)> = lk.links.iter().map(|l| (l.left, l.right)).collect();
    pairs.sort_unstable();
    if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
        return Err(Violation::Exclusion {
            left: w[0].0,
            right: w[0].1,
        });
    }
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return Err(Violation::Planarity {
                    first: (a, b),
                    second: (c, d),
                });
            }
        }
    }
    if !connected(n, &pairs) {
        return Err(Violation::Connectivity);
    }

    // real partners of every word, nearest first
    let mut left_partners: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut right_partners: Vec<Vec<usize>> = vec![Vec::new(); n];
    for l in lk.links.iter().filter(|l| !l.is_null()) {
        right_partners[l.left].push(l.right);
        left_partners[l.right].push(l.left);
    }
    for w in 0..n {
        left_partners[w].sort_unstable_by(|a, b| b.cmp(a));
        right_partners[w].sort_unstable();
    }
    for (w, ch) in lk.choices.iter().enumerate() {
        let linked = !left_partners[w].is_empty() || !right_partners[w].is_empty();
        match *ch {
            WordChoice::Isolated if linked => return Err(Violation::Chained { word: w }),
            WordChoice::Isolated => {}
            WordChoice::Disjunct(i) => {
                let d = &table.word(w)[i];
                if d.left.len() != left_partners[w].len() || d.right.len() != right_partners[w].len() {
                    return Err(Violation::Formula { word: w });
                }
            }
        }
    }
    for l in &lk.links {
        let LinkLabel::Connector(label) = &l.label else {
            continue;
        };
        let (WordChoice::Disjunct(a), WordChoice::Disjunct(b)) = (lk.choices[l.left], lk.choices[l.right]) else {
            unreachable!("isolated words were rejected above");
        };
        let j = right_partners[l.left].iter().position(|&v| v == l.right).unwrap();
        let k = left_partners[l.right].iter().position(|&v| v == l.left).unwrap();
        let x = &table.word(l.left)[a].right[j];
        let y = &table.word(l.right)[b].left[k];
        if !x.matches(y) || x.link_label(y) != *label {
            return Err(Violation::Ordering {
                left: l.left,
                right: l.right,
            });
        }
    }
    Ok(())
}

fn connected(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = n > 0;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&s| s)
}
