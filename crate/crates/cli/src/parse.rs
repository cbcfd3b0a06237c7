//! Polynomial text grammar:
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary ("*" unary)*
//! unary := ("+" | "-") unary | power
//! power := atom ("^" digits)?
//! atom  := digits | "x" | "y" | "(" expr ")"
//! ```
//!
//! Whitespace is ignored between tokens, `−` (U+2212) is accepted as a minus
//! sign, and juxtaposition such as `2x` is an error.

use bisolve_core::arith::Integer;
use bisolve_core::poly::{BiPoly, Var};

use crate::error::CliError;

/// Powers whose degree would exceed this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 4096;

/// Parses a polynomial. Error offsets count characters from the start of `s`.
pub fn parse_poly(s: &str) -> Result<BiPoly, CliError> {
    let mut p = Parser {
        src: s.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(format!("unexpected '{}'", p.src[p.pos])));
    }
    Ok(e)
}

struct Parser {
    src: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, message: impl Into<String>) -> CliError {
        CliError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '\u{2212}'
    }

    fn expr(&mut self) -> Result<BiPoly, CliError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            if c == '+' {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if Self::is_minus(c) {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BiPoly, CliError> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, CliError> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            Some(c) if Self::is_minus(c) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, CliError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected a nonnegative integer exponent"));
        }
        match digits.parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT && u64::from(base.total_degree()) * u64::from(e) <= u64::from(MAX_EXPONENT) => {
                Ok(base.pow(e))
            }
            _ => {
                self.pos = start;
                Err(self.err(format!("power of degree above {MAX_EXPONENT}")))
            }
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        self.src[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<BiPoly, CliError> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(BiPoly::var(Var::X))
            }
            Some('y') => {
                self.pos += 1;
                Ok(BiPoly::var(Var::Y))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                Ok(BiPoly::constant(d.parse::<Integer>().expect("ascii digits")))
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("expected an expression")),
        }
    }
}
