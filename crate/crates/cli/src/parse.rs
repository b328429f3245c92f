//! Exact expressions in `z` over `Q(i)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | INT 'i' | 'i' | 'z' | '(' expr ')'
//! ```
//!
//! `3/4` is a division like any other, so rational constants need no
//! separate token. `2i` is an imaginary literal, `2z` is rejected.

use whfact_core::{GaussianRational, Polynomial, RationalFunction};

const MAX_DEPTH: usize = 200;
const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: expected {expected}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: String,
}

impl ParseError {
    fn new(offset: usize, expected: impl Into<String>) -> Self {
        ParseError { offset, expected: expected.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Imag(String),
    I,
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        if c.is_ascii_whitespace() {
            k += 1;
            continue;
        }
        let start = k;
        let tok = match c {
            b'0'..=b'9' => {
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                let n = src[start..k].to_string();
                if k < bytes.len() && bytes[k] == b'i' {
                    k += 1;
                    out.push((start, Tok::Imag(n)));
                } else {
                    out.push((start, Tok::Int(n)));
                }
                continue;
            }
            b'i' => Tok::I,
            b'z' => Tok::Z,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => return Err(ParseError::new(start, "a number, 'i', 'z', an operator or a parenthesis")),
        };
        out.push((start, tok));
        k += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

fn literal(digits: &str) -> GaussianRational {
    digits.parse().expect("decimal digits form a valid constant")
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::new(self.offset(), format!("at most {MAX_DEPTH} levels of nesting")));
        }
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let at = self.offset();
                    self.bump();
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs).map_err(|_| ParseError::new(at, "a nonzero divisor"))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => {
                let e = n
                    .parse::<u32>()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| ParseError::new(at, format!("an exponent at most {MAX_EXPONENT}")))?;
                Ok(base.pow(e))
            }
            _ => Err(ParseError::new(at, "a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(RationalFunction::constant(literal(&n))),
            Tok::Imag(n) => Ok(RationalFunction::constant(&literal(&n) * &GaussianRational::i())),
            Tok::I => Ok(RationalFunction::constant(GaussianRational::i())),
            Tok::Z => Ok(RationalFunction::from_poly(Polynomial::z())),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                if self.bump() != Tok::RParen {
                    return Err(ParseError::new(close, "')'"));
                }
                Ok(inner)
            }
            _ => Err(ParseError::new(at, "an operand")),
        }
    }
}

/// Parses a rational function such as `z^2/(z - 1)` or `(1/2)*z + 3i`.
pub fn parse_rational_function(src: &str) -> Result<RationalFunction, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0, depth: 0 };
    let r = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::new(p.offset(), "an operator or end of input"));
    }
    Ok(r)
}

/// Like [`parse_rational_function`] but the value must be a polynomial.
pub fn parse_polynomial(src: &str) -> Result<Polynomial, ParseError> {
    let r = parse_rational_function(src)?;
    match r.as_polynomial() {
        Some(p) => Ok(p.clone()),
        None => Err(ParseError::new(0, "a polynomial")),
    }
}
