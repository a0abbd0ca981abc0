use std::fmt;
use std::str::FromStr;

use crate::error::DictionaryError;

/// Head reserved for the virtual null-link connector of the extended grammar.
pub const NULL_LINK_HEAD: &str = "NL";

/// A connector name such as `S`, `Ss`, `EVp` or `D*u`.
///
/// The head is a nonempty run of uppercase ASCII letters; the tail is a
/// possibly empty run of lowercase ASCII letters and `*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectorName {
    head: String,
    tail: String,
}

impl ConnectorName {
    pub fn new(head: &str, tail: &str) -> Result<Self, DictionaryError> {
        if head.is_empty() || !head.bytes().all(|b| b.is_ascii_uppercase()) {
            return Err(DictionaryError::InvalidConnector(format!("{head}{tail}")));
        }
        if !tail.bytes().all(|b| b.is_ascii_lowercase() || b == b'*') {
            return Err(DictionaryError::InvalidConnector(format!("{head}{tail}")));
        }
        Ok(ConnectorName {
            head: head.to_owned(),
            tail: tail.to_owned(),
        })
    }

    /// The `NL` connector used by the extended grammar.
    pub fn null_link() -> Self {
        ConnectorName {
            head: NULL_LINK_HEAD.to_owned(),
            tail: String::new(),
        }
    }

    pub fn head(&self) -> &str {
        &self.head
    }

    pub fn tail(&self) -> &str {
        &self.tail
    }

    pub fn is_null_link(&self) -> bool {
        self.head == NULL_LINK_HEAD
    }

    /// Heads must be identical; tails are compared position by position after
    /// padding the shorter one with `*`, and a `*` on either side matches anything.
    pub fn matches(&self, other: &ConnectorName) -> bool {
        if self.head != other.head {
            return false;
        }
        let (a, b) = (self.tail.as_bytes(), other.tail.as_bytes());
        (0..a.len().max(b.len())).all(|i| {
            let x = a.get(i).copied().unwrap_or(b'*');
            let y = b.get(i).copied().unwrap_or(b'*');
            x == y || x == b'*' || y == b'*'
        })
    }

    /// Label for a link joining two matching connectors: at each tail position
    /// the non-`*` character wins, trailing `*` are dropped.
    pub fn link_label(&self, other: &ConnectorName) -> ConnectorName {
        let (a, b) = (self.tail.as_bytes(), other.tail.as_bytes());
        let mut tail: Vec<u8> = (0..a.len().max(b.len()))
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(b'*');
                let y = b.get(i).copied().unwrap_or(b'*');
                if x == b'*' {
                    y
                } else {
                    x
                }
            })
            .collect();
        while tail.last() == Some(&b'*') {
            tail.pop();
        }
        ConnectorName {
            head: self.head.clone(),
            tail: String::from_utf8(tail).expect("ascii tail"),
        }
    }
}

impl fmt::Display for ConnectorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.head, self.tail)
    }
}

impl FromStr for ConnectorName {
    type Err = DictionaryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let split = s.bytes().position(|b| !b.is_ascii_uppercase()).unwrap_or(s.len());
        ConnectorName::new(&s[..split], &s[split..])
    }
}

/// Which side of the word a connector points to: `-` links leftwards, `+` rightwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn sign(self) -> char {
        match self {
            Direction::Left => '-',
            Direction::Right => '+',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Connector {
    pub name: ConnectorName,
    pub direction: Direction,
}

impl Connector {
    pub fn new(name: ConnectorName, direction: Direction) -> Self {
        Connector { name, direction }
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, self.direction.sign())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> ConnectorName {
        s.parse().unwrap()
    }

    #[test]
    fn wildcard_padding() {
        assert!(n("S").matches(&n("Ss")));
        assert!(!n("Ss").matches(&n("Sp")));
        assert!(n("EVp").matches(&n("EV")));
        assert!(n("D*u").matches(&n("Dmu")));
        assert!(!n("D").matches(&n("DS")));
    }

    // The rule restated as an exhaustive table over tails of length <= 2.
    #[test]
    fn exhaustive_tail_table() {
        let alphabet = ["", "a", "b", "*"];
        let mut tails = vec![String::new()];
        for x in &alphabet[1..] {
            tails.push(x.to_string());
            for y in &alphabet[1..] {
                tails.push(format!("{x}{y}"));
            }
        }
        let padded = |t: &str, i: usize| t.chars().nth(i).unwrap_or('*');
        for a in &tails {
            for b in &tails {
                let expected = (0..2).all(|i| {
                    let (x, y) = (padded(a, i), padded(b, i));
                    x == '*' || y == '*' || x == y
                });
                let lhs = ConnectorName::new("EV", a).unwrap();
                let rhs = ConnectorName::new("EV", b).unwrap();
                assert_eq!(lhs.matches(&rhs), expected, "{lhs} vs {rhs}");
                assert_eq!(rhs.matches(&lhs), expected);
            }
        }
    }

    #[test]
    fn labels_take_the_specific_side() {
        assert_eq!(n("S").link_label(&n("Ss")).to_string(), "Ss");
        assert_eq!(n("EVp").link_label(&n("EV")).to_string(), "EVp");
        assert_eq!(n("D*u").link_label(&n("Dm")).to_string(), "Dmu");
        assert_eq!(n("A*").link_label(&n("A")).to_string(), "A");
    }

    #[test]
    fn rejects_bad_names() {
        assert!("s".parse::<ConnectorName>().is_err());
        assert!("Sx1".parse::<ConnectorName>().is_err());
        assert!("".parse::<ConnectorName>().is_err());
        assert!("SsP".parse::<ConnectorName>().is_err());
    }
}
