//! Plain-text ring tables.
//!
//! ```text
//! ring <name> <order>
//! zero <idx>
//! one <idx>
//! add
//! <order rows of order indices>
//! mul
//! <order rows of order indices>
//! ```
//!
//! `#` starts a comment; indices are decimal and 0-based.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use conductor_core::ring::AxiomViolation;
use conductor_core::{Error as CoreError, RingTable};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("ring axioms violated: {0}")]
    Axioms(AxiomViolation),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

const BUILTINS: &[(&str, &str)] = &[
    ("f4", include_str!("../data/f4.ring")),
    ("f8", include_str!("../data/f8.ring")),
];

/// Source text of a table shipped with the harness (`f4`, `f8`).
pub fn builtin_table(name: &str) -> Option<&'static str> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

struct Lines<'a> {
    inner: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, words)| !words.is_empty())
            .collect();
        Lines { inner, pos: 0 }
    }

    fn next(&mut self, expected: &str) -> Result<(usize, Vec<&'a str>), TableError> {
        let last = self.inner.last().map_or(1, |(l, _)| l + 1);
        let item = self.inner.get(self.pos).cloned().ok_or(TableError::Syntax {
            line: last,
            msg: format!("unexpected end of file, expected {expected}"),
        })?;
        self.pos += 1;
        Ok(item)
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> TableError {
    TableError::Syntax { line, msg: msg.into() }
}

fn number(line: usize, word: &str) -> Result<usize, TableError> {
    word.parse().map_err(|_| syntax(line, format!("`{word}` is not a non-negative integer")))
}

fn keyword_value(lines: &mut Lines<'_>, key: &str) -> Result<usize, TableError> {
    let (line, words) = lines.next(key)?;
    match words.as_slice() {
        [k, v] if *k == key => number(line, v),
        _ => Err(syntax(line, format!("expected `{key} <index>`"))),
    }
}

fn block(lines: &mut Lines<'_>, key: &str, order: usize) -> Result<Vec<Vec<usize>>, TableError> {
    let (line, words) = lines.next(key)?;
    if words != [key] {
        return Err(syntax(line, format!("expected `{key}`")));
    }
    (0..order)
        .map(|_| {
            let (line, words) = lines.next("a table row")?;
            if words.len() != order {
                return Err(syntax(line, format!("row has {} entries, expected {order}", words.len())));
            }
            let row = words.iter().map(|w| number(line, w)).collect::<Result<Vec<_>, _>>()?;
            if let Some(&bad) = row.iter().find(|&&x| x >= order) {
                return Err(syntax(line, format!("index {bad} out of range for order {order}")));
            }
            Ok(row)
        })
        .collect()
}

/// Parses and validates a ring table; every ring axiom is checked.
pub fn parse_ring_table(text: &str) -> Result<RingTable, TableError> {
    let mut lines = Lines::new(text);
    let (line, words) = lines.next("`ring <name> <order>`")?;
    let (name, order) = match words.as_slice() {
        ["ring", name, order] => (name.to_string(), number(line, order)?),
        _ => return Err(syntax(line, "expected `ring <name> <order>`")),
    };
    if order == 0 {
        return Err(syntax(line, "order must be positive"));
    }
    let zero = keyword_value(&mut lines, "zero")?;
    let one = keyword_value(&mut lines, "one")?;
    let add = block(&mut lines, "add", order)?;
    let mul = block(&mut lines, "mul", order)?;
    if let Some((line, _)) = lines.inner.get(lines.pos) {
        return Err(syntax(*line, "trailing content after mul table"));
    }
    RingTable::from_tables(name, add, mul, zero, one, None).map_err(|e| match e {
        CoreError::Axioms(v) => TableError::Axioms(v),
        other => syntax(1, other.to_string()),
    })
}

pub fn load_ring_table(path: &Path) -> Result<RingTable, TableError> {
    let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_ring_table(&text)
}

/// Writes a ring in the table format; parsing the output gives back the same tables.
pub fn render_ring_table(t: &RingTable) -> String {
    let name: String = t.label().chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = format!("ring {name} {}\nzero {}\none {}\n", t.order(), t.zero(), t.one());
    for (key, table) in [("add", t.add_table()), ("mul", t.mul_table())] {
        out.push_str(key);
        out.push('\n');
        for row in table {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
    }
    out
}
