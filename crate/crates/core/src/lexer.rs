//! Shared character cursor for the presentation and polynomial text formats.

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UndeclaredName(String),
    DuplicateName(String),
    EmptyName,
    Overflow,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::UndeclaredName(name) => write!(f, "undeclared name `{name}`"),
            ParseErrorKind::DuplicateName(name) => write!(f, "duplicate name `{name}`"),
            ParseErrorKind::EmptyName => write!(f, "expected a name"),
            ParseErrorKind::Overflow => write!(f, "number out of range"),
        }
    }
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self::at_line(src, 1)
    }

    pub fn at_line(src: &'a str, line: usize) -> Self {
        Cursor {
            src,
            pos: 0,
            line,
            column: 1,
        }
    }

    pub fn position(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    pub fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }

    pub fn error_at(&self, (line, column): (usize, usize), kind: ParseErrorKind) -> ParseError {
        ParseError { line, column, kind }
    }

    pub fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Syntax(msg.into()))
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_raw()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace and `#` comments.
    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek_raw() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    pub fn unexpected(&mut self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(found) => self.syntax(format!("expected {wanted}, found `{found}`")),
            None => self.syntax(format!("expected {wanted}, found end of input")),
        }
    }

    /// Parses `keyword:` with optional whitespace before the colon.
    pub fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let at = {
            self.skip_ws();
            self.position()
        };
        match self.ident() {
            Some(word) if word == kw => self.expect(':'),
            Some(word) => Err(self.error_at(
                at,
                ParseErrorKind::Syntax(format!("expected `{kw}:`, found `{word}`")),
            )),
            None => Err(self.unexpected(&format!("`{kw}:`"))),
        }
    }

    pub fn peek_ident_start(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_alphabetic())
    }

    /// `[A-Za-z][A-Za-z0-9_]*`
    pub fn ident(&mut self) -> Option<String> {
        if !self.peek_ident_start() {
            return None;
        }
        let start = self.pos;
        while self
            .peek_raw()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.bump();
        }
        Some(self.src[start..self.pos].to_string())
    }

    pub fn peek_digit(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    /// Unsigned decimal integer.
    pub fn natural(&mut self) -> Result<BigInt, ParseError> {
        if !self.peek_digit() {
            return Err(self.unexpected("a number"));
        }
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    /// Optionally signed integer that must fit in `i64`.
    pub fn small_int(&mut self) -> Result<i64, ParseError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let at = {
            self.skip_ws();
            self.position()
        };
        let n = self.natural()?;
        let n = if neg { -n } else { n };
        i64::try_from(n).map_err(|_| self.error_at(at, ParseErrorKind::Overflow))
    }
}
