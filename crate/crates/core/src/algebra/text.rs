//! Textual forms of algebras and elements.
//!
//! ```text
//! algebra  := "B" | "G(" algebra ")" | "P(" algebra ("," algebra)* ")" | "J" digits
//! element  := "f" | "t" | "*" | "old(" element ")" | "(" element ("," element)* ")"
//! assignment := ident "=" element ("," ident "=" element)*
//! ```
//!
//! Elements are parsed against their algebra. A one-factor product element
//! prints without its parentheses (`old(f)` in `G(P(B))`), and either form
//! is accepted on input.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{jaskowski, AlgebraError, Element, HeytingAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    #[error("at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl fmt::Display for HeytingAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeytingAlgebra::Two => f.write_str("B"),
            HeytingAlgebra::Gamma(base) => write!(f, "G({base})"),
            HeytingAlgebra::Product(fs) => {
                f.write_str("P(")?;
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{factor}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::F => f.write_str("f"),
            Element::T => f.write_str("t"),
            Element::Star => f.write_str("*"),
            Element::Old(x) => write!(f, "old({x})"),
            Element::Tuple(xs) if xs.len() == 1 => write!(f, "{}", xs[0]),
            Element::Tuple(xs) => {
                f.write_str("(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), TextError> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{lit}`")))
        }
    }

    fn error(&self, message: String) -> TextError {
        TextError::Syntax {
            offset: self.pos,
            message,
        }
    }

    fn finish(&mut self) -> Result<(), TextError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error("trailing input".into()))
        }
    }

    fn algebra(&mut self) -> Result<HeytingAlgebra, TextError> {
        if self.eat("G(") {
            let base = self.algebra()?;
            self.expect(")")?;
            return Ok(HeytingAlgebra::gamma(base));
        }
        if self.eat("P(") {
            let mut factors = vec![self.algebra()?];
            while self.eat(",") {
                factors.push(self.algebra()?);
            }
            self.expect(")")?;
            return Ok(HeytingAlgebra::Product(factors));
        }
        if self.eat("B") {
            return Ok(HeytingAlgebra::Two);
        }
        if self.eat("J") {
            let digits: String = self.text[self.pos..]
                .chars()
                .take_while(char::is_ascii_digit)
                .collect();
            let k: usize = digits
                .parse()
                .map_err(|_| self.error("expected level after `J`".into()))?;
            self.pos += digits.len();
            return Ok(jaskowski(k));
        }
        Err(self.error("expected algebra `B`, `G(..)`, `P(..)` or `J<k>`".into()))
    }

    fn element(&mut self, h: &HeytingAlgebra) -> Result<Element, TextError> {
        match h {
            HeytingAlgebra::Two => {
                if self.eat("f") {
                    Ok(Element::F)
                } else if self.eat("t") {
                    Ok(Element::T)
                } else {
                    Err(self.error(format!("expected element of `{h}`")))
                }
            }
            HeytingAlgebra::Gamma(base) => {
                if self.eat("*") {
                    Ok(Element::Star)
                } else if self.eat("old(") {
                    let inner = self.element(base)?;
                    self.expect(")")?;
                    Ok(Element::Old(Box::new(inner)))
                } else {
                    Err(self.error(format!("expected `*` or `old(..)` for `{h}`")))
                }
            }
            HeytingAlgebra::Product(fs) => {
                if fs.len() == 1 {
                    let start = self.pos;
                    if self.eat("(") {
                        // `(x)` is the explicit one-tuple, unless the factor itself
                        // starts with a bracket
                        if let Ok(x) = self.element(&fs[0]) {
                            if self.eat(")") {
                                return Ok(Element::Tuple(vec![x]));
                            }
                        }
                        self.pos = start;
                    }
                    return Ok(Element::Tuple(vec![self.element(&fs[0])?]));
                }
                self.expect("(")?;
                let mut xs = Vec::with_capacity(fs.len());
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        self.expect(",")?;
                    }
                    xs.push(self.element(factor)?);
                }
                self.expect(")")?;
                Ok(Element::Tuple(xs))
            }
        }
    }

    fn ident(&mut self) -> Result<String, TextError> {
        self.skip_ws();
        let name: String = self.text[self.pos..]
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect();
        if name.is_empty() || name.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(self.error("expected variable name".into()));
        }
        self.pos += name.len();
        Ok(name)
    }
}

pub fn parse_algebra(text: &str) -> Result<HeytingAlgebra, TextError> {
    let mut c = Cursor { text, pos: 0 };
    let h = c.algebra()?;
    c.finish()?;
    Ok(h)
}

pub fn parse_element(h: &HeytingAlgebra, text: &str) -> Result<Element, TextError> {
    let mut c = Cursor { text, pos: 0 };
    let x = c.element(h)?;
    c.finish()?;
    Ok(x)
}

/// Parses `P=*,Q=old(f)` against `h`. The empty string is the empty assignment.
pub fn parse_assignment(
    h: &HeytingAlgebra,
    text: &str,
) -> Result<BTreeMap<String, Element>, TextError> {
    let mut c = Cursor { text, pos: 0 };
    let mut out = BTreeMap::new();
    c.skip_ws();
    if c.pos == text.len() {
        return Ok(out);
    }
    loop {
        let name = c.ident()?;
        c.expect("=")?;
        let x = c.element(h)?;
        if out.insert(name.clone(), x).is_some() {
            return Err(c.error(format!("variable `{name}` assigned twice")));
        }
        if !c.eat(",") {
            break;
        }
    }
    c.finish()?;
    Ok(out)
}
