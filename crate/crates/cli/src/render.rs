//! ASCII linkage diagrams.
//!
//! ```text
//!      +----O----+
//! +-Ss-+     +-D-+
//! |    |     |   |
//! mary liked the movie
//! ```
//!
//! Links are arcs over the words, each on the row just above everything it
//! encloses. Null links are dashed and carry no label.

use linkgram::Linkage;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
    /// Row above the baseline, from 1.
    pub level: usize,
    pub label: Option<String>,
}

/// Arcs with their rows. An arc sits one row above the highest arc it
/// encloses, so planar linkages never need crossing lines.
pub fn layout(lk: &Linkage) -> Vec<Arc> {
    let mut order: Vec<usize> = (0..lk.links.len()).collect();
    order.sort_by_key(|&i| (lk.links[i].right - lk.links[i].left, i));
    let mut arcs: Vec<Arc> = Vec::with_capacity(order.len());
    for i in order {
        let l = &lk.links[i];
        let level = 1 + arcs
            .iter()
            .filter(|a| l.left <= a.left && a.right <= l.right)
            .map(|a| a.level)
            .max()
            .unwrap_or(0);
        arcs.push(Arc {
            left: l.left,
            right: l.right,
            level,
            label: (!l.is_null()).then(|| l.label.to_string()),
        });
    }
    arcs.sort_by_key(|a| (a.left, a.right));
    arcs
}

/// Left column of each word, wide enough for the labels above it.
fn columns(words: &[&str], arcs: &[Arc]) -> Vec<usize> {
    let mut x = vec![0usize; words.len()];
    for i in 1..words.len() {
        x[i] = x[i - 1] + words[i - 1].chars().count() + 1;
        for a in arcs.iter().filter(|a| a.right == i) {
            let width = a.label.as_ref().map_or(0, |s| s.chars().count());
            x[i] = x[i].max(x[a.left] + width + 3);
        }
    }
    x
}

pub fn render_ascii<S: AsRef<str>>(lk: &Linkage, tokens: &[S]) -> String {
    let words: Vec<&str> = tokens.iter().map(AsRef::as_ref).collect();
    let arcs = layout(lk);
    let x = columns(&words, &arcs);
    let width = words.last().map_or(0, |w| x[words.len() - 1] + w.chars().count());
    let height = arcs.iter().map(|a| a.level).max().unwrap_or(0);
    // rows[0] is the row of pipes right above the words
    let mut rows = vec![vec![' '; width]; height + 1];
    for a in &arcs {
        let (from, to) = (x[a.left], x[a.right]);
        let row = &mut rows[a.level];
        let inner = to - from - 1;
        for (j, cell) in row[from + 1..to].iter_mut().enumerate() {
            let dashed = a.label.is_none() && j % 2 == 1 && j + 1 != inner;
            *cell = if dashed { ' ' } else { '-' };
        }
        if let Some(label) = &a.label {
            let start = from + 1 + (inner - label.chars().count()) / 2;
            for (j, c) in label.chars().enumerate() {
                row[start + j] = c;
            }
        }
        row[from] = '+';
        row[to] = '+';
        for below in rows[..a.level].iter_mut() {
            for col in [from, to] {
                if below[col] == ' ' {
                    below[col] = '|';
                }
            }
        }
    }
    let mut out = String::new();
    if !arcs.is_empty() {
        for row in rows.iter().rev() {
            let line: String = row.iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
    let mut base = String::new();
    for (i, w) in words.iter().enumerate() {
        while base.chars().count() < x[i] {
            base.push(' ');
        }
        base.push_str(w);
    }
    out.push_str(&base);
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkgram::{Link, LinkLabel, WordChoice};

    fn lk(links: Vec<Link>, n: usize) -> Linkage {
        Linkage::new(links, vec![WordChoice::Isolated; n])
    }

    fn conn(l: usize, r: usize, s: &str) -> Link {
        Link::new(l, r, LinkLabel::Connector(s.parse().unwrap()))
    }

    #[test]
    fn single_link() {
        let text = render_ascii(&lk(vec![conn(0, 1, "S")], 2), &["a", "b"]);
        assert_eq!(text, "+-S-+\n|   |\na   b\n");
    }

    #[test]
    fn null_link_is_dashed() {
        let text = render_ascii(&lk(vec![Link::null(0)], 2), &["uh", "huh"]);
        assert_eq!(text, "+--+\n|  |\nuh huh\n");
        let text = render_ascii(&lk(vec![Link::null(0)], 2), &["well", "so"]);
        assert_eq!(text, "+- --+\n|    |\nwell so\n");
    }

    #[test]
    fn nested_arcs_stack() {
        let l = lk(vec![conn(0, 2, "O"), conn(0, 1, "D"), conn(1, 2, "A")], 3);
        let arcs = layout(&l);
        assert_eq!(arcs.iter().map(|a| a.level).collect::<Vec<_>>(), [1, 2, 1]);
        assert_eq!(
            render_ascii(&l, &["x", "y", "z"]),
            "+---O---+\n+-D-+-A-+\n|   |   |\nx   y   z\n"
        );
    }

    #[test]
    fn unlinked_words_only() {
        assert_eq!(render_ascii(&lk(vec![], 1), &["w"]), "w\n");
    }
}
