//! A small exact-arithmetic polynomial expression parser.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! expr    := ['-' | '+'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ('^' uint)*
//! primary := 'x' | number | '(' expr ')'
//! number  := uint ['/' uint]
//! ```
//!
//! Multiplication is always explicit (`2*x`, never `2x`), and `/` occurs
//! only inside rational literals such as `32/5`.

use super::RatPoly;
use core::fmt;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseError {
    /// The input violates the grammar at the given byte offset.
    Syntax { position: usize, message: &'static str },
    /// Exponents must be nonnegative integers.
    NegativeExponent { position: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { position, message } => {
                write!(f, "syntax error at byte {position}: {message}")
            }
            ParseError::NegativeExponent { position } => {
                write!(f, "negative exponent at byte {position}")
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// Parses a polynomial expression with exact rational coefficients.
pub fn parse_poly(input: &str) -> Result<RatPoly, ParseError> {
    let mut parser = Parser { bytes: input.as_bytes(), pos: 0 };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(ParseError::Syntax {
            position: parser.pos,
            message: "unexpected input after the expression",
        });
    }
    Ok(poly)
}

const EXPONENT_CAP: u32 = 65535;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatPoly, ParseError> {
        let negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut total = self.term()?;
        if negate {
            total = -&total;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let term = self.term()?;
                    total = &total + &term;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let term = self.term()?;
                    total = &total - &term;
                }
                _ => return Ok(total),
            }
        }
    }

    fn term(&mut self) -> Result<RatPoly, ParseError> {
        let mut product = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let factor = self.factor()?;
            product = &product * &factor;
        }
        Ok(product)
    }

    fn factor(&mut self) -> Result<RatPoly, ParseError> {
        let mut base = self.primary()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(ParseError::NegativeExponent { position: self.pos });
            }
            let (digits, position) = self.digits("expected digits in the exponent")?;
            let exponent: u32 = core::str::from_utf8(digits)
                .expect("ascii digits")
                .parse()
                .ok()
                .filter(|e| *e <= EXPONENT_CAP)
                .ok_or(ParseError::Syntax { position, message: "exponent too large" })?;
            base = base.pow(exponent as usize);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RatPoly, ParseError> {
        match self.peek() {
            None => Err(ParseError::Syntax {
                position: self.pos,
                message: "unexpected end of input",
            }),
            Some(b'x') => {
                self.pos += 1;
                Ok(RatPoly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(ParseError::Syntax {
                        position: self.pos,
                        message: "expected ')'",
                    })
                }
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(_) => Err(ParseError::Syntax {
                position: self.pos,
                message: "expected 'x', a number, or '('",
            }),
        }
    }

    fn number(&mut self) -> Result<RatPoly, ParseError> {
        let (digits, _) = self.digits("expected digits")?;
        let numerator = BigInt::from(BigUint::parse_bytes(digits, 10).expect("ascii digits"));
        let value = if self.peek() == Some(b'/') {
            self.pos += 1;
            let (digits, position) = self.digits("expected digits after '/'")?;
            let denominator =
                BigInt::from(BigUint::parse_bytes(digits, 10).expect("ascii digits"));
            if denominator.is_zero() {
                return Err(ParseError::Syntax { position, message: "denominator is zero" });
            }
            BigRational::new(numerator, denominator)
        } else {
            BigRational::from_integer(numerator)
        };
        Ok(RatPoly::constant(value))
    }

    /// Consumes a nonempty ASCII digit run, returning it with its offset.
    fn digits(&mut self, message: &'static str) -> Result<(&[u8], usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Syntax { position: start, message });
        }
        Ok((&self.bytes[start..self.pos], start))
    }
}
