//! Reader for the dictionary text format.
//!
//! ```text
//! % comment to end of line
//! mary john: S+ or O-;
//! movie: {A-} & D- & (O- or S+);
//! ```
//!
//! `&` binds tighter than `or`, both associate to the left, `{e}` is
//! `(e or ())` and `()` is the empty formula.

use std::collections::BTreeMap;

use super::connector::{ConnectorName, Direction};
use super::expr::ExpressionTree;
use crate::error::DictionaryError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Colon,
    Semi,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Amp,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_delimiter(c: char, in_formula: bool) -> bool {
    c.is_whitespace() || matches!(c, ':' | ';' | '%') || (in_formula && matches!(c, '(' | ')' | '{' | '}' | '&'))
}

// Header words may contain brackets and `&`; only formulas split on them.
fn tokenize(text: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    let mut in_formula = false;
    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let chars: Vec<(usize, char)> = line.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (_, c) = chars[i];
            let column = i + 1;
            let single = match c {
                '%' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                ':' => {
                    in_formula = true;
                    Some(Tok::Colon)
                }
                ';' => {
                    in_formula = false;
                    Some(Tok::Semi)
                }
                '(' if in_formula => Some(Tok::LParen),
                ')' if in_formula => Some(Tok::RParen),
                '{' if in_formula => Some(Tok::LBrace),
                '}' if in_formula => Some(Tok::RBrace),
                '&' if in_formula => Some(Tok::Amp),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Spanned {
                    tok,
                    line: line_no,
                    column,
                });
                i += 1;
                continue;
            }
            let start = i;
            while i < chars.len() && !is_delimiter(chars[i].1, in_formula) {
                i += 1;
            }
            let word: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push(Spanned {
                tok: Tok::Word(word),
                line: line_no,
                column,
            });
        }
    }
    out
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    last_line: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error_here(&self, message: impl Into<String>) -> DictionaryError {
        let (line, column) = match self.peek() {
            Some(t) => (t.line, t.column),
            None => (self.last_line.max(1), 1),
        };
        DictionaryError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), DictionaryError> {
        match self.peek() {
            Some(t) if t.tok == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error_here(format!("expected {what}"))),
        }
    }

    fn is_or(&self) -> bool {
        matches!(self.peek(), Some(Spanned { tok: Tok::Word(w), .. }) if w == "or")
    }

    fn or_expr(&mut self) -> Result<ExpressionTree, DictionaryError> {
        let mut items = vec![self.and_expr()?];
        while self.is_or() {
            self.pos += 1;
            items.push(self.and_expr()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            ExpressionTree::Or(items)
        })
    }

    fn and_expr(&mut self) -> Result<ExpressionTree, DictionaryError> {
        let mut items = vec![self.atom()?];
        while matches!(self.peek(), Some(Spanned { tok: Tok::Amp, .. })) {
            self.pos += 1;
            items.push(self.atom()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            ExpressionTree::And(items)
        })
    }

    fn atom(&mut self) -> Result<ExpressionTree, DictionaryError> {
        let Some(t) = self.peek().cloned() else {
            return Err(self.error_here("unexpected end of input in formula"));
        };
        match t.tok {
            Tok::LParen => {
                self.pos += 1;
                if matches!(self.peek(), Some(Spanned { tok: Tok::RParen, .. })) {
                    self.pos += 1;
                    return Ok(ExpressionTree::Empty);
                }
                let inner = self.or_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::LBrace => {
                self.pos += 1;
                let inner = self.or_expr()?;
                self.expect(Tok::RBrace, "`}`")?;
                Ok(ExpressionTree::optional(inner))
            }
            Tok::Word(ref w) if w != "or" => {
                self.pos += 1;
                connector_leaf(w, t.line, t.column)
            }
            _ => Err(self.error_here("expected a connector, `(` or `{`")),
        }
    }
}

fn connector_leaf(text: &str, line: usize, column: usize) -> Result<ExpressionTree, DictionaryError> {
    let syntax = |message: String| DictionaryError::Syntax { line, column, message };
    let (body, direction) = match text.chars().last() {
        Some('+') => (&text[..text.len() - 1], Direction::Right),
        Some('-') => (&text[..text.len() - 1], Direction::Left),
        _ => return Err(syntax(format!("connector `{text}` must end in `+` or `-`"))),
    };
    let name: ConnectorName = body
        .parse()
        .map_err(|_| syntax(format!("malformed connector `{text}`")))?;
    if name.is_null_link() {
        return Err(DictionaryError::ReservedConnector { line, column });
    }
    Ok(ExpressionTree::leaf(name, direction))
}

pub(super) fn parse_entries(text: &str) -> Result<BTreeMap<String, ExpressionTree>, DictionaryError> {
    let toks = tokenize(text);
    let last_line = toks.last().map_or(1, |t| t.line);
    let mut p = Parser {
        toks,
        pos: 0,
        last_line,
    };
    let mut entries = BTreeMap::new();
    while p.peek().is_some() {
        let mut words = Vec::new();
        loop {
            match p.next() {
                Some(Spanned {
                    tok: Tok::Word(w),
                    line,
                    ..
                }) => words.push((w, line)),
                Some(Spanned { tok: Tok::Colon, .. }) if !words.is_empty() => break,
                Some(t) => {
                    return Err(DictionaryError::Syntax {
                        line: t.line,
                        column: t.column,
                        message: "expected a word or `:`".into(),
                    })
                }
                None => return Err(p.error_here("unexpected end of input in entry header")),
            }
        }
        let formula = p.or_expr()?;
        p.expect(Tok::Semi, "`;` after formula")?;
        for (word, line) in words {
            if entries.insert(word.clone(), formula.clone()).is_some() {
                return Err(DictionaryError::DuplicateWord { word, line });
            }
        }
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(src: &str) -> ExpressionTree {
        parse_entries(&format!("w: {src};")).unwrap().remove("w").unwrap()
    }

    #[test]
    fn precedence_and_sugar() {
        assert_eq!(tree("A- & B+ or C-"), tree("(A- & B+) or C-"));
        assert_eq!(tree("{A-} & S+"), tree("(A- or ()) & S+"));
        assert_eq!(tree("()"), ExpressionTree::Empty);
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_entries("a: S+;\nb: S+ &;").unwrap_err();
        assert_eq!(
            err,
            DictionaryError::Syntax {
                line: 2,
                column: 8,
                message: "expected a connector, `(` or `{`".into()
            }
        );
        assert!(matches!(
            parse_entries("a: S;"),
            Err(DictionaryError::Syntax { line: 1, column: 4, .. })
        ));
        assert!(matches!(parse_entries("a: S+"), Err(DictionaryError::Syntax { .. })));
        assert!(matches!(parse_entries(": S+;"), Err(DictionaryError::Syntax { .. })));
    }

    #[test]
    fn reserved_and_duplicates() {
        assert_eq!(
            parse_entries("a: NL+;"),
            Err(DictionaryError::ReservedConnector { line: 1, column: 4 })
        );
        assert_eq!(
            parse_entries("a: S+;\n% c\na b: O-;"),
            Err(DictionaryError::DuplicateWord {
                word: "a".into(),
                line: 3
            })
        );
        // NLs is also the reserved head
        assert!(parse_entries("a: NLx-;").is_err());
        // but longer heads starting with NL are ordinary names
        assert!(parse_entries("a: NLX-;").is_ok());
    }

    #[test]
    fn header_words_may_contain_brackets() {
        let e = parse_entries("<UNKNOWN-WORD> rock&roll (x): A+;").unwrap();
        assert_eq!(e.len(), 3);
        assert!(e.contains_key("rock&roll") && e.contains_key("(x)"));
    }
}
