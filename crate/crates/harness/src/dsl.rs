//! Ring constructor expressions.
//!
//! ```text
//! Expr := "Z(" int ")" | "Mat(" Expr "," int ")" | "Tri(" Expr "," int "," ("lower"|"upper") ")"
//!       | "Prod(" Expr ("," Expr)+ ")" | "Op(" Expr ")" | "Table(" path ")"
//! ```
//!
//! Whitespace is insignificant. A table path of the form `builtin:<name>`
//! refers to a table shipped with the harness; other paths are resolved
//! against the configured base directory.

use std::path::{Path, PathBuf};

use conductor_core::construct::{cyclic, matrix, opposite, product, triangular, Shape};
use conductor_core::{Caps, Error as CoreError, RingTable};
use thiserror::Error;

use crate::table_file::{builtin_table, load_ring_table, parse_ring_table, TableError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("column {}: {msg}", pos + 1)]
    Syntax { pos: usize, msg: String },
    #[error("column {}: {source}", pos + 1)]
    Build {
        pos: usize,
        #[source]
        source: CoreError,
    },
    #[error("column {}: {source}", pos + 1)]
    Table {
        pos: usize,
        #[source]
        source: TableError,
    },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::Build { pos, .. } | ParseError::Table { pos, .. } => *pos,
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    caps: &'a Caps,
    base: Option<&'a Path>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, ch: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(ch) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{ch}`"))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        &self.src[start..start + len]
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let w = self.word();
        w.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn expr(&mut self) -> Result<RingTable, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let build = |r: Result<RingTable, CoreError>| r.map_err(|source| ParseError::Build { pos: start, source });
        match self.word() {
            "Z" => {
                self.expect('(')?;
                let n = self.int()?;
                self.expect(')')?;
                build(cyclic(n))
            }
            "Mat" => {
                self.expect('(')?;
                let base = self.expr()?;
                self.expect(',')?;
                let k = self.int()?;
                self.expect(')')?;
                build(matrix(&base, k, self.caps))
            }
            "Tri" => {
                self.expect('(')?;
                let base = self.expr()?;
                self.expect(',')?;
                let k = self.int()?;
                self.expect(',')?;
                let at = self.pos;
                let shape = match self.word() {
                    "lower" => Shape::Lower,
                    "upper" => Shape::Upper,
                    _ => {
                        self.pos = at;
                        self.skip_ws();
                        return self.err("expected `lower` or `upper`");
                    }
                };
                self.expect(')')?;
                build(triangular(&base, k, shape, self.caps))
            }
            "Prod" => {
                self.expect('(')?;
                let mut factors = vec![self.expr()?];
                self.skip_ws();
                while self.src[self.pos..].starts_with(',') {
                    self.pos += 1;
                    factors.push(self.expr()?);
                    self.skip_ws();
                }
                if factors.len() < 2 {
                    return self.err("a product needs at least two factors");
                }
                self.expect(')')?;
                build(product(&factors, self.caps))
            }
            "Op" => {
                self.expect('(')?;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(opposite(&inner))
            }
            "Table" => {
                self.expect('(')?;
                let rest = &self.src[self.pos..];
                let Some(len) = rest.find(')') else {
                    return self.err("unterminated table path");
                };
                let path = rest[..len].trim();
                let at = self.pos;
                self.pos += len + 1;
                self.table(path).map_err(|source| ParseError::Table { pos: at, source })
            }
            "" => self.err("expected a ring expression"),
            other => {
                self.pos = start;
                self.err(format!("unknown constructor `{other}`"))
            }
        }
    }

    fn table(&self, path: &str) -> Result<RingTable, TableError> {
        if let Some(name) = path.strip_prefix("builtin:") {
            let text = builtin_table(name).ok_or_else(|| TableError::Io {
                path: PathBuf::from(path),
                source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such builtin table"),
            })?;
            return parse_ring_table(text);
        }
        let p = Path::new(path);
        match self.base {
            Some(base) if p.is_relative() => load_ring_table(&base.join(p)),
            _ => load_ring_table(p),
        }
    }
}

/// Builds the ring described by `text`; relative table paths resolve against `base`.
pub fn parse_ring_expr_in(text: &str, caps: &Caps, base: Option<&Path>) -> Result<RingTable, ParseError> {
    let mut p = Parser { src: text, pos: 0, caps, base };
    let ring = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return p.err("unexpected trailing input");
    }
    Ok(ring)
}

pub fn parse_ring_expr(text: &str, caps: &Caps) -> Result<RingTable, ParseError> {
    parse_ring_expr_in(text, caps, None)
}
