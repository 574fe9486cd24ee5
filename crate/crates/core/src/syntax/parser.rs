//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Precedence, loosest first: `|`, `&`, `U`/`R` (right-associative), then
//! the prefix operators `! X F G`. `&` and `|` associate to the left.

use thiserror::Error;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: expected {expected}, found {found}")]
    Unexpected {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("syntax error at {pos}: unknown operator `{op}`")]
    UnknownOperator { pos: usize, op: String },
    #[error("syntax error at {pos}: unbalanced parentheses ({detail})")]
    UnbalancedParens { pos: usize, detail: &'static str },
}

impl ParseError {
    /// Byte offset into the input where the error was detected.
    pub fn position(&self) -> usize {
        match self {
            ParseError::Unexpected { pos, .. }
            | ParseError::UnknownOperator { pos, .. }
            | ParseError::UnbalancedParens { pos, .. } => *pos,
        }
    }
}

pub(crate) fn is_keyword(s: &str) -> bool {
    matches!(s, "true" | "false" | "tt" | "ff")
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Next,
    Finally,
    Globally,
    Until,
    Release,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Not => "`!`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Next => "`X`".into(),
            Tok::Finally => "`F`".into(),
            Tok::Globally => "`G`".into(),
            Tok::Until => "`U`".into(),
            Tok::Release => "`R`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'X' => Tok::Next,
            b'F' => Tok::Finally,
            b'G' => Tok::Globally,
            b'U' => Tok::Until,
            b'R' => Tok::Release,
            b'a'..=b'z' => {
                let mut end = i + 1;
                while end < bytes.len()
                    && (bytes[end].is_ascii_lowercase()
                        || bytes[end].is_ascii_digit()
                        || bytes[end] == b'_')
                {
                    end += 1;
                }
                let word = &text[i..end];
                i = end;
                let tok = match word {
                    "true" | "tt" => Tok::True,
                    "false" | "ff" => Tok::False,
                    _ => Tok::Ident(word.to_string()),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                // Group runs of symbol characters so `->` or `<->` is reported whole.
                let mut end = i + text[i..].chars().next().map_or(1, char::len_utf8);
                while end < bytes.len()
                    && !bytes[end].is_ascii_alphanumeric()
                    && !b" \t\n\r()!&|".contains(&bytes[end])
                {
                    end += 1;
                }
                while !text.is_char_boundary(end) {
                    end += 1;
                }
                return Err(ParseError::UnknownOperator {
                    pos: start,
                    op: text[start..end].to_string(),
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    open: Vec<usize>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Tok::End if !self.open.is_empty() => ParseError::UnbalancedParens {
                pos: *self.open.last().unwrap(),
                detail: "`(` is never closed",
            },
            Tok::RParen if self.open.is_empty() => ParseError::UnbalancedParens {
                pos: self.pos(),
                detail: "`)` has no matching `(`",
            },
            t => ParseError::Unexpected {
                pos: self.pos(),
                expected,
                found: t.describe(),
            },
        }
    }

    fn or_expr(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and_expr()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and_expr()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn and_expr(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.binary_temporal()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.binary_temporal()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    fn binary_temporal(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        match self.peek() {
            Tok::Until => {
                self.bump();
                Ok(lhs.until(self.binary_temporal()?))
            }
            Tok::Release => {
                self.bump();
                Ok(lhs.release(self.binary_temporal()?))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let wrap: fn(Formula) -> Formula = match self.peek() {
            Tok::Not => Formula::not,
            Tok::Next => Formula::next,
            Tok::Finally => Formula::finally,
            Tok::Globally => Formula::globally,
            _ => return self.primary(),
        };
        self.bump();
        Ok(wrap(self.unary()?))
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Atom(name))
            }
            Tok::True => {
                self.bump();
                Ok(Formula::True)
            }
            Tok::False => {
                self.bump();
                Ok(Formula::False)
            }
            Tok::LParen => {
                self.open.push(self.pos());
                self.bump();
                let inner = self.or_expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)` or a binary operator"));
                }
                self.bump();
                self.open.pop();
                Ok(inner)
            }
            _ => Err(self.unexpected("a proposition, constant, `(` or prefix operator")),
        }
    }
}

/// Parses a formula from its ASCII concrete syntax.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        open: Vec::new(),
    };
    let f = p.or_expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("a binary operator or end of input"));
    }
    Ok(f)
}
