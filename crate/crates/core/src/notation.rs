//! Textual notation for QU strings.
//!
//! ```text
//! string  := ws (item ws)*
//! item    := '.' | unit rep?
//! unit    := digit | '(' string-without-dot ')'
//! digit   := '0' | axisnum sign blank?
//! axisnum := nonzero decimal integer
//! sign    := '+' | '-'
//! blank   := 'o'
//! rep     := '{' positive decimal integer '}'
//! ```
//!
//! At most one `.` appears in the text. Whitespace is allowed only between
//! items.

use std::fmt::Write;

use crate::digit::{Digit, Dimension, Sign};
use crate::error::{ParseDiagnostic, Result};
use crate::string::QuString;

/// Upper bound on the number of digits a text may expand to.
pub const MAX_EXPANDED_DIGITS: usize = 1 << 26;

pub fn parse(text: &str, dim: Dimension) -> Result<QuString> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        dim,
        origin: None,
    };
    let digits = parser.sequence(0)?;
    if let Some(c) = parser.peek() {
        // Only a stray ')' can stop the top-level sequence early.
        return Err(parser
            .error(format!("unexpected '{c}' with no open group"))
            .into());
    }
    QuString::new(dim, digits, parser.origin)
}

/// Canonical text: no whitespace, maximal runs of length k ≥ 2 written `d{k}`.
pub fn print(s: &QuString) -> String {
    let mut out = String::new();
    if s.origin().is_some() {
        print_runs(&mut out, s.prefix());
        out.push('.');
        print_runs(&mut out, s.suffix());
    } else {
        print_runs(&mut out, s.digits());
    }
    out
}

fn print_runs(out: &mut String, digits: &[Digit]) {
    for run in digits.chunk_by(|a, b| a == b) {
        write!(out, "{}", run[0]).unwrap();
        if run.len() > 1 {
            write!(out, "{{{}}}", run.len()).unwrap();
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    dim: Dimension,
    origin: Option<usize>,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic::new(self.pos.min(self.chars.len().saturating_sub(1)), message)
    }

    fn error_at(&self, position: usize, message: impl Into<String>) -> ParseDiagnostic {
        ParseDiagnostic::new(position.min(self.chars.len().saturating_sub(1)), message)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    /// Items until end of input or a closing parenthesis. `depth` is the
    /// number of enclosing groups.
    fn sequence(&mut self, depth: usize) -> Result<Vec<Digit>, ParseDiagnostic> {
        let mut digits = Vec::new();
        loop {
            self.skip_ws();
            let Some(c) = self.peek() else { break };
            match c {
                ')' => break,
                '.' => {
                    if depth > 0 {
                        return Err(self.error("origin marker inside a group"));
                    }
                    if self.origin.is_some() {
                        return Err(self.error("more than one origin marker"));
                    }
                    self.origin = Some(digits.len());
                    self.pos += 1;
                    if self.peek() == Some('{') {
                        return Err(self.error("the origin marker cannot be repeated"));
                    }
                }
                _ => {
                    let unit = self.unit(depth)?;
                    let count = self.repetition()?;
                    let total = digits.len() + unit.len().saturating_mul(count);
                    if total > MAX_EXPANDED_DIGITS {
                        return Err(self.error("expansion exceeds the digit limit"));
                    }
                    for _ in 0..count {
                        digits.extend_from_slice(&unit);
                    }
                }
            }
        }
        Ok(digits)
    }

    fn unit(&mut self, depth: usize) -> Result<Vec<Digit>, ParseDiagnostic> {
        match self.peek() {
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let inner = self.sequence(depth + 1)?;
                if self.peek() != Some(')') {
                    return Err(self.error_at(open, "unbalanced '('"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('0') => {
                self.pos += 1;
                Ok(vec![Digit::Zero])
            }
            Some(c) if c.is_ascii_digit() => Ok(vec![self.digit()?]),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digit(&mut self) -> Result<Digit, ParseDiagnostic> {
        let start = self.pos;
        let axis = self.number()?;
        if !self.dim.contains(axis) {
            return Err(self.error_at(
                start,
                format!("axis {axis} is out of range for dimension {}", self.dim),
            ));
        }
        let sign = match self.peek() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            Some(c) => return Err(self.error(format!("expected '+' or '-', found '{c}'"))),
            None => return Err(self.error("expected '+' or '-' at end of input")),
        };
        self.pos += 1;
        if self.peek() == Some('o') {
            self.pos += 1;
            Ok(Digit::Blank(axis, sign))
        } else {
            Ok(Digit::Atom(axis, sign))
        }
    }

    fn number(&mut self) -> Result<u32, ParseDiagnostic> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.is_empty() {
            return Err(self.error("expected a number"));
        }
        if text.starts_with('0') {
            return Err(self.error_at(start, "number has a leading zero"));
        }
        text.parse::<u32>()
            .map_err(|_| self.error_at(start, format!("number {text} is too large")))
    }

    fn repetition(&mut self) -> Result<usize, ParseDiagnostic> {
        if self.peek() != Some('{') {
            return Ok(1);
        }
        let open = self.pos;
        self.pos += 1;
        if self.peek() == Some('0') {
            return Err(self.error("repetition count must be positive"));
        }
        let count = self.number()?;
        if self.peek() != Some('}') {
            return Err(self.error_at(open, "unbalanced '{'"));
        }
        self.pos += 1;
        Ok(count as usize)
    }
}
