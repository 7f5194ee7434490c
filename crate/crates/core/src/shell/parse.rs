//! Recursive-descent parser for rational expressions in `x` with
//! coefficients written as integers and polynomials in `t`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary | power)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'x' | 't' | '(' expr ')'
//! ```

use crate::error::{Error, Result};
use crate::field::{Fel, Field};
use crate::poly::Poly;
use crate::ratexpr::RatExpr;

const MAX_EXPONENT: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    X,
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

fn describe(t: Tok) -> String {
    match t {
        Tok::Num(_) => "a number".into(),
        Tok::X => "'x'".into(),
        Tok::T => "'t'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Open => "'('".into(),
        Tok::Close => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn err(pos: usize, message: impl Into<String>) -> Error {
    Error::Parse { pos, message: message.into() }
}

/// Tokens with their byte offsets; integers are kept exactly up to `u64`.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let mut v: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((bytes[i] - b'0') as u64))
                        .ok_or_else(|| err(start, "integer literal too large"))?;
                    i += 1;
                }
                out.push((Tok::Num(v), start));
                continue;
            }
            b'x' => Tok::X,
            b't' => Tok::T,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::Open,
            b')' => Tok::Close,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(err(i, format!("unexpected character '{ch}'")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// A quotient kept in lowest terms with monic denominator.
#[derive(Clone)]
struct Value {
    num: Poly,
    den: Poly,
}

struct Parser<'a> {
    f: &'a Field,
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Tok {
        self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn value(&self, num: Poly, den: Poly) -> Result<Value> {
        let r = RatExpr::new(self.f, num, den)?;
        Ok(Value { num: r.num().clone(), den: r.den().clone() })
    }

    fn constant(&self, c: Fel) -> Value {
        Value { num: Poly::constant(c), den: Poly::constant(Fel::ONE) }
    }

    fn add(&self, a: &Value, b: &Value, negate: bool) -> Result<Value> {
        let f = self.f;
        let right = b.num.mul(f, &a.den);
        let right = if negate { right.neg(f) } else { right };
        self.value(a.num.mul(f, &b.den).add(f, &right), a.den.mul(f, &b.den))
    }

    fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        let f = self.f;
        self.value(a.num.mul(f, &b.num), a.den.mul(f, &b.den))
    }

    fn div(&self, a: &Value, b: &Value) -> Result<Value> {
        if b.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let f = self.f;
        self.value(a.num.mul(f, &b.den), a.den.mul(f, &b.num))
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(&acc, &rhs, false)?;
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(&acc, &rhs, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.mul(&acc, &rhs)?;
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.div(&acc, &rhs)?;
                }
                Tok::Num(_) | Tok::X | Tok::T | Tok::Open => {
                    let rhs = self.power()?;
                    acc = self.mul(&acc, &rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value> {
        match self.peek() {
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            Tok::Minus => {
                self.bump();
                let v = self.unary()?;
                Ok(Value { num: v.num.neg(self.f), den: v.den })
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Num(e) if e <= MAX_EXPONENT => {
                let f = self.f;
                let e = e as usize;
                Ok(Value { num: base.num.pow(f, e), den: base.den.pow(f, e) })
            }
            Tok::Num(_) => Err(err(pos, format!("exponent exceeds {MAX_EXPONENT}"))),
            t => Err(err(pos, format!("expected a non-negative integer exponent, found {}", describe(t)))),
        }
    }

    fn atom(&mut self) -> Result<Value> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(v) => Ok(self.constant(self.f.from_int((v % self.f.p() as u64) as i64))),
            Tok::X => Ok(Value { num: Poly::x(), den: Poly::constant(Fel::ONE) }),
            Tok::T if self.f.n() == 1 => Err(err(pos, "'t' needs an extension field")),
            Tok::T => Ok(self.constant(self.f.generator())),
            Tok::Open => {
                let v = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Tok::Close => Ok(v),
                    t => Err(err(close, format!("expected ')', found {}", describe(t)))),
                }
            }
            t => Err(err(pos, format!("expected a number, 'x', 't' or '(', found {}", describe(t)))),
        }
    }
}

/// Parses text into a normalized quotient, constants included.
pub fn parse_rational(text: &str, f: &Field) -> Result<RatExpr> {
    let mut parser = Parser { f, toks: lex(text)?, at: 0 };
    let v = parser.expr()?;
    if parser.peek() != Tok::End {
        let t = parser.peek();
        return Err(err(parser.pos(), format!("expected an operator or end of input, found {}", describe(t))));
    }
    RatExpr::new(f, v.num, v.den)
}

/// Parses a non-constant rational expression.
pub fn parse_expression(text: &str, f: &Field) -> Result<RatExpr> {
    let r = parse_rational(text, f)?;
    if r.is_constant() {
        return Err(Error::ConstantExpression);
    }
    Ok(r)
}

/// Parses a field element written without `x`.
pub fn parse_element(text: &str, f: &Field) -> Result<Fel> {
    let r = parse_rational(text, f)?;
    if !r.is_constant() {
        return Err(err(0, "expected a field element, found an expression in x"));
    }
    Ok(r.num().coeff(0))
}
