//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! iff   := imp ( "<->" iff )?
//! imp   := or  ( "->" imp )?
//! or    := and ( "|" and )*
//! and   := unary ( "&" unary )*
//! unary := "~" unary | "true" | "false" | ident | "(" iff ")"
//! ```
//!
//! Identifiers are `[A-Za-z_][A-Za-z0-9_]*`; the leading underscore is
//! accepted so that generated names read back. The Unicode connectives
//! `¬ ∧ ∨ ⇒ → ⇔ ↔ ⊤ ⊥` are accepted as alternatives.

use std::iter::Peekable;
use std::str::CharIndices;

use thiserror::Error;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    chars: Peekable<CharIndices<'a>>,
    text: &'a str,
}

impl<'a> Lexer<'a> {
    fn column(&self, byte: usize) -> usize {
        self.text[..byte].chars().count() + 1
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        while let Some(&(start, c)) = self.chars.peek() {
            let col = self.column(start);
            if c.is_whitespace() {
                self.chars.next();
                continue;
            }
            let tok = match c {
                '(' => self.single(Tok::LParen),
                ')' => self.single(Tok::RParen),
                '~' | '¬' => self.single(Tok::Not),
                '&' | '∧' => self.single(Tok::And),
                '|' | '∨' => self.single(Tok::Or),
                '⇒' | '→' => self.single(Tok::Imp),
                '⇔' | '↔' => self.single(Tok::Iff),
                '⊤' => self.single(Tok::True),
                '⊥' => self.single(Tok::False),
                '-' => {
                    self.chars.next();
                    self.expect_char('>', col, "`->`")?;
                    Tok::Imp
                }
                '<' => {
                    self.chars.next();
                    self.expect_char('-', col, "`<->`")?;
                    self.expect_char('>', col, "`<->`")?;
                    Tok::Iff
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut name = String::new();
                    while let Some(&(_, c)) = self.chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            name.push(c);
                            self.chars.next();
                        } else {
                            break;
                        }
                    }
                    match name.as_str() {
                        "true" => Tok::True,
                        "false" => Tok::False,
                        _ => Tok::Ident(name),
                    }
                }
                other => {
                    return Err(ParseError {
                        column: col,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            };
            out.push((tok, col));
        }
        out.push((Tok::End, self.column(self.text.len())));
        Ok(out)
    }

    fn single(&mut self, tok: Tok) -> Tok {
        self.chars.next();
        tok
    }

    fn expect_char(&mut self, want: char, col: usize, what: &str) -> Result<(), ParseError> {
        match self.chars.next() {
            Some((_, c)) if c == want => Ok(()),
            _ => Err(ParseError {
                column: col,
                message: format!("malformed operator, expected {what}"),
            }),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            column: self.toks[self.pos].1,
            message,
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let left = self.imp()?;
        if *self.peek() == Tok::Iff {
            self.bump();
            let right = self.iff()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let left = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let right = self.imp()?;
            return Ok(Formula::imp(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            left = Formula::or(left, self.and()?);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            left = Formula::and(left, self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::True => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::False => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(format!("expected `)`, found {}", self.peek().describe())));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(self.error(format!("expected a formula, found {}", other.describe()))),
        }
    }
}

/// Parses `text` into a [`Formula`], desugaring `~` and `<->`.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = Lexer {
        chars: text.char_indices().peekable(),
        text,
    }
    .tokens()?;
    let mut parser = Parser { toks, pos: 0 };
    let f = parser.iff()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error(format!("unexpected {}", parser.peek().describe())));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Formula {
        Formula::var(name)
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse("P -> Q -> R").unwrap(),
            Formula::imp(v("P"), Formula::imp(v("Q"), v("R")))
        );
    }

    #[test]
    fn negation_desugars() {
        assert_eq!(parse("~P").unwrap(), Formula::imp(v("P"), Formula::Bottom));
    }

    #[test]
    fn precedence_of_example_formula() {
        let expected = Formula::imp(
            Formula::and(Formula::or(v("P"), v("Q")), Formula::imp(v("Q"), Formula::Bottom)),
            v("P"),
        );
        assert_eq!(parse("(P | Q) & ~Q -> P").unwrap(), expected);
        assert_eq!(parse("(P|Q)&~Q->P").unwrap(), expected);
    }

    #[test]
    fn biconditional_is_loosest_and_right_associative() {
        let f = parse("P <-> Q -> R").unwrap();
        assert_eq!(f, Formula::iff(v("P"), Formula::imp(v("Q"), v("R"))));
        let g = parse("A <-> B <-> C").unwrap();
        assert_eq!(g, Formula::iff(v("A"), Formula::iff(v("B"), v("C"))));
    }

    #[test]
    fn and_or_left_associative() {
        assert_eq!(
            parse("A & B & C").unwrap(),
            Formula::and(Formula::and(v("A"), v("B")), v("C"))
        );
        assert_eq!(
            parse("A | B & C").unwrap(),
            Formula::or(v("A"), Formula::and(v("B"), v("C")))
        );
    }

    #[test]
    fn constants_and_identifiers() {
        assert_eq!(parse("true").unwrap(), Formula::Top);
        assert_eq!(parse("false").unwrap(), Formula::Bottom);
        assert_eq!(parse("x_1 & _p2").unwrap(), Formula::and(v("x_1"), v("_p2")));
        assert_eq!(parse("trueish").unwrap(), v("trueish"));
    }

    #[test]
    fn unicode_connectives() {
        assert_eq!(parse("¬P ∧ Q ⇒ ⊥").unwrap(), parse("~P & Q -> false").unwrap());
        assert_eq!(parse("P ↔ ⊤").unwrap(), parse("P <-> true").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("P & ").unwrap_err();
        assert_eq!(err.column, 5);
        let err = parse("(P | Q").unwrap_err();
        assert!(err.message.contains("expected `)`"), "{err}");
        let err = parse("P - Q").unwrap_err();
        assert_eq!(err.column, 3);
        let err = parse("P Q").unwrap_err();
        assert_eq!(err.column, 3);
        let err = parse("P $ Q").unwrap_err();
        assert!(err.message.contains('$'));
        assert!(parse("").is_err());
    }
}
