//! Text formats.
//!
//! * Dense matrix: `n` lines of `n` whitespace-separated tokens; `0`/`1` for
//!   permutation matrices, integers, decimals or `p/q` fractions for monomial
//!   matrices.
//! * Permutation: `n` followed by the `n` 1-based images, whitespace-separated
//!   (written on a single line).
//!
//! Blank lines and lines starting with `#` are ignored. Errors carry 1-based
//! line and column positions.

use crate::error::{Error, Result};
use crate::perm::{perm_from_matrix, Permutation};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_DENSE_ORDER: usize = 4096;

/// How to read a permutation-valued input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InputKind {
    /// Decide from the layout of the text.
    #[default]
    Auto,
    Permutation,
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    pub kind: InputKind,
    /// Dense inputs larger than this are rejected.
    pub max_dense_order: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            kind: InputKind::Auto,
            max_dense_order: DEFAULT_MAX_DENSE_ORDER,
        }
    }
}

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }
}

fn tokenize(input: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let after = &rest[start..];
            let len = after.find(char::is_whitespace).unwrap_or(after.len());
            tokens.push(Token {
                text: &after[..len],
                line: idx + 1,
                column: line[..offset + start].chars().count() + 1,
            });
            offset += start + len;
            rest = &rest[start + len..];
        }
        lines.push(tokens);
    }
    lines
}

/// Square grids, and anything with several lines whose first line holds more
/// than one token, are read as matrices; the one-line format has either a
/// single line or the order alone on the first line.
fn looks_like_matrix(lines: &[Vec<Token<'_>>]) -> bool {
    let square = !lines.is_empty() && lines.iter().all(|l| l.len() == lines.len());
    square || (lines.len() > 1 && lines[0].len() > 1)
}

fn grid<'a, T>(
    lines: &[Vec<Token<'a>>],
    opts: &ParseOptions,
    mut cell: impl FnMut(&Token<'a>) -> Result<T>,
) -> Result<Vec<Vec<T>>> {
    let n = lines.len();
    if n > opts.max_dense_order {
        return Err(Error::TooLarge {
            n,
            limit: opts.max_dense_order,
        });
    }
    lines
        .iter()
        .map(|line| {
            if line.len() != n {
                let at = line.get(n).unwrap_or(&line[line.len() - 1]);
                return Err(Error::Parse {
                    line: at.line,
                    column: if line.len() > n { at.column } else { 1 },
                    message: format!("row has {} entries, expected {n}", line.len()),
                });
            }
            line.iter().map(&mut cell).collect()
        })
        .collect()
}

/// Reads a dense 0-1 matrix as rows.
pub fn parse_binary_matrix(input: &str, opts: &ParseOptions) -> Result<Vec<Vec<i64>>> {
    let lines = tokenize(input);
    grid(&lines, opts, |t| match t.text {
        "0" => Ok(0),
        "1" => Ok(1),
        other => Err(t.error(format!("expected 0 or 1, found {other:?}"))),
    })
}

/// Reads a dense rational matrix as rows.
pub fn parse_scalar_matrix(input: &str, opts: &ParseOptions) -> Result<Vec<Vec<Scalar>>> {
    let lines = tokenize(input);
    grid(&lines, opts, |t| {
        t.text
            .parse::<Scalar>()
            .map_err(|_| t.error(format!("expected a rational number, found {:?}", t.text)))
    })
}

/// Reads the one-line permutation format.
pub fn parse_permutation(input: &str) -> Result<Permutation> {
    let lines = tokenize(input);
    let tokens: Vec<&Token<'_>> = lines.iter().flatten().collect();
    let Some(first) = tokens.first() else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty input".into(),
        });
    };
    let n: usize = first
        .text
        .parse()
        .map_err(|_| first.error(format!("expected the order n, found {:?}", first.text)))?;
    if tokens.len() != n + 1 {
        let at = tokens.get(n + 1).unwrap_or(tokens.last().unwrap());
        return Err(at.error(format!("expected {n} images, found {}", tokens.len() - 1)));
    }
    let mut images = Vec::with_capacity(n);
    let mut seen = vec![false; n + 1];
    for t in &tokens[1..] {
        let v: usize = t
            .text
            .parse()
            .map_err(|_| t.error(format!("expected an index, found {:?}", t.text)))?;
        if v == 0 || v > n {
            return Err(t.error(format!("image {v} is outside 1..{n}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(t.error(format!("image {v} repeats")));
        }
        images.push(v);
    }
    Permutation::new(images)
}

/// Reads a permutation given either as a dense 0-1 matrix or in one-line form.
pub fn parse_permutation_input(input: &str, opts: &ParseOptions) -> Result<Permutation> {
    let as_matrix = match opts.kind {
        InputKind::Matrix => true,
        InputKind::Permutation => false,
        InputKind::Auto => looks_like_matrix(&tokenize(input)),
    };
    if as_matrix {
        perm_from_matrix(&parse_binary_matrix(input, opts)?)
    } else {
        parse_permutation(input)
    }
}

/// `n` followed by the images, on one line.
pub fn format_permutation(p: &Permutation) -> String {
    if p.n() == 0 {
        "0".to_string()
    } else {
        format!("{} {}", p.n(), p)
    }
}

pub fn format_binary_matrix(p: &Permutation) -> String {
    let mut out = String::new();
    for row in p.to_dense() {
        let line: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_scalar_matrix(m: &[Vec<Scalar>]) -> String {
    let mut out = String::new();
    for row in m {
        let line: Vec<String> = row.iter().map(Scalar::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
