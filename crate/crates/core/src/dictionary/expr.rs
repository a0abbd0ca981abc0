use std::fmt;

use super::connector::{Connector, ConnectorName, Direction};

/// One way a word may link: connectors to its left and to its right.
///
/// Both lists are stored nearest-word-first: `left[0]` links to the closest
/// word on the left, `left[1]` to a farther one, and likewise on the right.
/// (Printed link-grammar notation usually writes the right list farthest-first;
/// only the storage order differs.)
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Disjunct {
    pub left: Vec<ConnectorName>,
    pub right: Vec<ConnectorName>,
}

impl Disjunct {
    pub fn new(left: Vec<ConnectorName>, right: Vec<ConnectorName>) -> Self {
        Disjunct { left, right }
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// The left connector that links farthest away, i.e. the first one a
    /// span-based parser has to match.
    pub fn outer_left(&self) -> Option<&ConnectorName> {
        self.left.last()
    }

    pub fn outer_right(&self) -> Option<&ConnectorName> {
        self.right.last()
    }

    pub fn connector_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn connectors(&self) -> impl Iterator<Item = Connector> + '_ {
        let left = self.left.iter().map(|n| Connector::new(n.clone(), Direction::Left));
        let right = self.right.iter().map(|n| Connector::new(n.clone(), Direction::Right));
        left.chain(right)
    }
}

impl fmt::Display for Disjunct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[ConnectorName]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "(({})({}))", join(&self.left), join(&self.right))
    }
}

/// A word's formula as an `&` / `or` tree over connector leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExpressionTree {
    And(Vec<ExpressionTree>),
    Or(Vec<ExpressionTree>),
    Leaf(Connector),
    /// The formula `()`: satisfied by using no connectors.
    Empty,
}

impl ExpressionTree {
    pub fn leaf(name: ConnectorName, direction: Direction) -> Self {
        ExpressionTree::Leaf(Connector::new(name, direction))
    }

    /// `{e}`, i.e. `(e or ())`.
    pub fn optional(inner: ExpressionTree) -> Self {
        ExpressionTree::Or(vec![inner, ExpressionTree::Empty])
    }

    /// Expands the formula into its disjuncts, dropping duplicates while
    /// keeping the first occurrence in left-to-right traversal order.
    pub fn expand(&self) -> Vec<Disjunct> {
        let mut out = Vec::new();
        for d in self.expand_with_duplicates() {
            if !out.contains(&d) {
                out.push(d);
            }
        }
        out
    }

    /// Expansion without deduplication: one disjunct per choice of a child at
    /// every reachable `or` node.
    pub fn expand_with_duplicates(&self) -> Vec<Disjunct> {
        match self {
            ExpressionTree::Empty => vec![Disjunct::default()],
            ExpressionTree::Leaf(c) => {
                let mut d = Disjunct::default();
                match c.direction {
                    Direction::Left => d.left.push(c.name.clone()),
                    Direction::Right => d.right.push(c.name.clone()),
                }
                vec![d]
            }
            ExpressionTree::Or(children) => children
                .iter()
                .flat_map(ExpressionTree::expand_with_duplicates)
                .collect(),
            ExpressionTree::And(children) => {
                let mut acc = vec![Disjunct::default()];
                for child in children {
                    let options = child.expand_with_duplicates();
                    let mut next = Vec::with_capacity(acc.len() * options.len());
                    for a in &acc {
                        for b in &options {
                            // earlier operands sit nearer the word on both sides
                            let mut d = a.clone();
                            d.left.extend(b.left.iter().cloned());
                            d.right.extend(b.right.iter().cloned());
                            next.push(d);
                        }
                    }
                    acc = next;
                }
                acc
            }
        }
    }

    /// Builds a tree whose expansion is exactly `disjuncts` (in order).
    /// Returns `None` for an empty list, which no formula can express.
    pub fn from_disjuncts(disjuncts: &[Disjunct]) -> Option<ExpressionTree> {
        let mut alternatives: Vec<ExpressionTree> = disjuncts
            .iter()
            .map(|d| {
                let mut leaves: Vec<ExpressionTree> = d
                    .left
                    .iter()
                    .map(|n| ExpressionTree::leaf(n.clone(), Direction::Left))
                    .chain(
                        d.right
                            .iter()
                            .map(|n| ExpressionTree::leaf(n.clone(), Direction::Right)),
                    )
                    .collect();
                match leaves.len() {
                    0 => ExpressionTree::Empty,
                    1 => leaves.pop().unwrap(),
                    _ => ExpressionTree::And(leaves),
                }
            })
            .collect();
        match alternatives.len() {
            0 => None,
            1 => alternatives.pop(),
            _ => Some(ExpressionTree::Or(alternatives)),
        }
    }

    pub fn leaves(&self) -> Vec<&Connector> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Connector>) {
        match self {
            ExpressionTree::Leaf(c) => out.push(c),
            ExpressionTree::And(cs) | ExpressionTree::Or(cs) => cs.iter().for_each(|c| c.collect_leaves(out)),
            ExpressionTree::Empty => {}
        }
    }

    /// Deletes every leaf rejected by `keep`, together with the `&` context
    /// that depends on it. `None` means nothing satisfiable is left.
    pub fn retain_leaves(&self, keep: &mut impl FnMut(&Connector) -> bool) -> Option<ExpressionTree> {
        match self {
            ExpressionTree::Empty => Some(ExpressionTree::Empty),
            ExpressionTree::Leaf(c) => keep(c).then(|| self.clone()),
            ExpressionTree::And(children) => {
                let mut kept = Vec::with_capacity(children.len());
                for c in children {
                    kept.push(c.retain_leaves(keep)?);
                }
                Some(ExpressionTree::And(kept))
            }
            ExpressionTree::Or(children) => {
                let kept: Vec<_> = children.iter().filter_map(|c| c.retain_leaves(keep)).collect();
                (!kept.is_empty()).then_some(ExpressionTree::Or(kept))
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            ExpressionTree::Or(_) => 0,
            ExpressionTree::And(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for ExpressionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Nested nodes of the same kind are parenthesised so that parsing the
        // output rebuilds the same shape rather than a flattened one.
        let write_children = |f: &mut fmt::Formatter<'_>, cs: &[ExpressionTree], op: &str, prec: u8| {
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                if c.precedence() <= prec {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            }
            Ok(())
        };
        match self {
            ExpressionTree::Empty => write!(f, "()"),
            ExpressionTree::Leaf(c) => write!(f, "{c}"),
            ExpressionTree::And(cs) => write_children(f, cs, "&", 1),
            ExpressionTree::Or(cs) => write_children(f, cs, "or", 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(s: &str) -> ExpressionTree {
        let (name, sign) = s.split_at(s.len() - 1);
        let dir = if sign == "-" { Direction::Left } else { Direction::Right };
        ExpressionTree::leaf(name.parse().unwrap(), dir)
    }

    fn names(v: &[&str]) -> Vec<ConnectorName> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn determiner_noun_example() {
        let tree = ExpressionTree::And(vec![leaf("D-"), ExpressionTree::Or(vec![leaf("O-"), leaf("S+")])]);
        assert_eq!(
            tree.expand(),
            vec![
                Disjunct::new(names(&["D", "O"]), vec![]),
                Disjunct::new(names(&["D"]), names(&["S"])),
            ]
        );
    }

    #[test]
    fn empty_formula_is_one_empty_disjunct() {
        assert_eq!(ExpressionTree::Empty.expand(), vec![Disjunct::default()]);
    }

    #[test]
    fn duplicates_are_dropped() {
        let tree = ExpressionTree::Or(vec![leaf("A+"), leaf("A+"), ExpressionTree::Empty]);
        assert_eq!(tree.expand_with_duplicates().len(), 3);
        assert_eq!(tree.expand().len(), 2);
    }

    #[test]
    fn retain_drops_and_context() {
        let tree = ExpressionTree::Or(vec![ExpressionTree::And(vec![leaf("D-"), leaf("S+")]), leaf("O-")]);
        let pruned = tree.retain_leaves(&mut |c| c.name.head() != "D").unwrap();
        assert_eq!(pruned, ExpressionTree::Or(vec![leaf("O-")]));
        assert!(tree.retain_leaves(&mut |_| false).is_none());
    }

    #[test]
    fn from_disjuncts_round_trips() {
        let ds = vec![
            Disjunct::new(names(&["D", "O"]), names(&["S", "EV"])),
            Disjunct::default(),
            Disjunct::new(vec![], names(&["S"])),
        ];
        assert_eq!(ExpressionTree::from_disjuncts(&ds).unwrap().expand(), ds);
        assert!(ExpressionTree::from_disjuncts(&[]).is_none());
    }
}
