//! Text syntax for matrices, alinking columns and braid words.
//!
//! Matrices are nested brackets, `[[2,4],[6,8]]`, with optional whitespace
//! (including newlines) and entries written bare or in double quotes. `[]` is
//! the empty matrix and `[[],[]]` has two rows and no columns. Alinking maps
//! may also be given as columns, `(2,4)` or `(1,0) (0,3)`. Braid words are
//! whitespace-separated signed integers.

use std::fmt;

use num_bigint::BigInt;
use ribbon_core::IntMatrix;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn position(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.position(pos);
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn describe(&self) -> String {
        match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}, found {}", self.describe())))
        }
    }

    /// Consumes `c` if it is next, after whitespace.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        let hit = self.peek() == Some(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let quoted = self.eat('"');
        let start = self.pos;
        if matches!(self.peek(), Some('+' | '-')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let value = digits.parse::<BigInt>().map_err(|_| {
            self.error_at(
                start,
                format!("expected an integer, found {}", self.describe_at(start)),
            )
        })?;
        if quoted && self.peek() != Some('"') {
            return Err(self.error(format!("expected closing '\"', found {}", self.describe())));
        }
        if quoted {
            self.pos += 1;
        }
        Ok(value)
    }

    fn describe_at(&self, pos: usize) -> String {
        match self.chars.get(pos) {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.chars.len() {
            Err(self.error(format!("unexpected trailing input {}", self.describe())))
        } else {
            Ok(())
        }
    }

    fn matrix(&mut self) -> Result<IntMatrix, ParseError> {
        let open = {
            self.skip_ws();
            self.pos
        };
        self.expect('[')?;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        if !self.eat(']') {
            loop {
                let row_start = {
                    self.skip_ws();
                    self.pos
                };
                rows.push(self.row()?);
                if rows.len() > 1 && rows[rows.len() - 1].len() != rows[0].len() {
                    return Err(self.error_at(
                        row_start,
                        format!(
                            "row {} has {} entries, expected {}",
                            rows.len(),
                            rows[rows.len() - 1].len(),
                            rows[0].len()
                        ),
                    ));
                }
                if self.eat(']') {
                    break;
                }
                self.expect(',').map_err(|e| ParseError {
                    message: format!("{} (between rows)", e.message),
                    ..e
                })?;
            }
        }
        IntMatrix::try_from_rows(&rows, None).map_err(|e| self.error_at(open, e.to_string()))
    }

    fn row(&mut self) -> Result<Vec<BigInt>, ParseError> {
        self.expect('[')?;
        let mut row = Vec::new();
        if self.eat(']') {
            return Ok(row);
        }
        loop {
            row.push(self.integer()?);
            if self.eat(']') {
                return Ok(row);
            }
            self.expect(',')?;
        }
    }

    fn columns(&mut self) -> Result<IntMatrix, ParseError> {
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            if !top.is_empty() && self.eat(',') {
                self.skip_ws();
            }
            self.expect('(')?;
            top.push(self.integer()?);
            self.expect(',')?;
            bottom.push(self.integer()?);
            self.expect(')')?;
        }
        Ok(IntMatrix::try_from_rows(&[top, bottom], None).expect("two rows of equal length"))
    }
}

/// Parses a bracketed integer matrix.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let mut c = Cursor::new(text);
    let m = c.matrix()?;
    c.finish()?;
    Ok(m)
}

/// Parses the induced map of an alinking computation: a bracketed matrix, or
/// a sequence of `(a,b)` columns. Empty input is the map from the zero group.
pub fn parse_alink_map(text: &str) -> Result<IntMatrix, ParseError> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    let m = if c.peek() == Some('[') {
        c.matrix()?
    } else {
        c.columns()?
    };
    c.finish()?;
    Ok(m)
}

/// Parses a braid word such as `1 -2 1 -2`. Commas are accepted as
/// separators too.
pub fn parse_braid_letters(text: &str) -> Result<Vec<i64>, ParseError> {
    let c = Cursor::new(text);
    let mut letters = Vec::new();
    let mut offset = 0;
    for token in text.split(|ch: char| ch.is_whitespace() || ch == ',') {
        let start = offset;
        offset += token.chars().count() + 1;
        if token.is_empty() {
            continue;
        }
        let letter = token.parse::<i64>().map_err(|_| {
            c.error_at(
                start,
                format!("expected a signed braid letter, found {token:?}"),
            )
        })?;
        letters.push(letter);
    }
    Ok(letters)
}
