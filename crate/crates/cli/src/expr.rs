//! Bundle expressions such as `(L^-1*F_2 + O)^3 * F(4)`.
//!
//! Precedence from tightest to loosest: `^` (integer exponent, may be
//! negative, left-associative), `*` (tensor product), `+` (direct sum).
//! Atoms are `O`, `L`, `F_r` / `F(r)`, a positive integer `k` (meaning `k`
//! copies of `O`), or a parenthesized expression.

use std::fmt;

use atiyah_kring::{BundleSum, IndecomposableBundle, TorsionContext};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Trivial,
    Line,
    Atiyah(u32),
    /// `k·O`.
    Count(u64),
    Sum(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(..) => 1,
            Expr::Product(..) => 2,
            Expr::Power(..) => 3,
            _ => 4,
        }
    }

    /// Lowers the expression to a bundle in `context`.
    pub fn evaluate(&self, context: TorsionContext) -> atiyah_kring::Result<BundleSum> {
        Ok(match self {
            Expr::Trivial => BundleSum::trivial(context),
            Expr::Line => IndecomposableBundle::line(context, 1).into(),
            Expr::Atiyah(r) => IndecomposableBundle::atiyah(context, *r)?.into(),
            Expr::Count(k) => BundleSum::from_terms(
                context,
                [(IndecomposableBundle::trivial(context), BigUint::from(*k))],
            )?,
            Expr::Sum(a, b) => a.evaluate(context)?.direct_sum(&b.evaluate(context)?)?,
            Expr::Product(a, b) => a.evaluate(context)?.tensor(&b.evaluate(context)?)?,
            Expr::Power(a, m) => a.evaluate(context)?.tensor_power(*m)?,
        })
    }
}

struct Wrapped<'a>(&'a Expr, bool);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Trivial => write!(f, "O"),
            Expr::Line => write!(f, "L"),
            Expr::Atiyah(r) => write!(f, "F_{r}"),
            Expr::Count(k) => write!(f, "{k}"),
            Expr::Sum(a, b) => write!(
                f,
                "{} + {}",
                Wrapped(a, a.precedence() < 1),
                Wrapped(b, b.precedence() <= 1)
            ),
            Expr::Product(a, b) => write!(
                f,
                "{}*{}",
                Wrapped(a, a.precedence() < 2),
                Wrapped(b, b.precedence() <= 2)
            ),
            Expr::Power(a, m) => write!(f, "{}^{m}", Wrapped(a, a.precedence() < 3)),
        }
    }
}

pub fn parse_expression(src: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        chars: src.char_indices().collect(),
        pos: 0,
        len: src.len(),
    };
    let expr = parser.sum()?;
    parser.skip_ws();
    if let Some(&(at, c)) = parser.chars.get(parser.pos) {
        return Err(ParseError {
            position: at,
            message: format!("unexpected '{c}'"),
        });
    }
    Ok(expr)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(at, _)| at)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = Expr::Sum(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.power()?;
            lhs = Expr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some('^') {
            self.pos += 1;
            let negative = self.peek() == Some('-');
            if negative {
                self.pos += 1;
            }
            let at = self.offset();
            let magnitude = self.unsigned()?;
            let exponent = i64::try_from(magnitude)
                .ok()
                .map(|m| if negative { -m } else { m })
                .ok_or(ParseError {
                    position: at,
                    message: "exponent out of range".into(),
                })?;
            base = Expr::Power(Box::new(base), exponent);
        }
        Ok(base)
    }

    fn unsigned(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let at = self.offset();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos).filter(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected an integer");
        }
        digits.parse().map_err(|_| ParseError {
            position: at,
            message: "integer out of range".into(),
        })
    }

    fn atiyah_index(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        let value = self.unsigned()?;
        match u32::try_from(value) {
            Ok(0) => Err(ParseError {
                position: at,
                message: "F index must be >= 1".into(),
            }),
            Ok(r) => Ok(r),
            Err(_) => Err(ParseError {
                position: at,
                message: "F index out of range".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('O') => {
                self.pos += 1;
                Ok(Expr::Trivial)
            }
            Some('L') => {
                self.pos += 1;
                Ok(Expr::Line)
            }
            Some('F') => {
                self.pos += 1;
                match self.chars.get(self.pos).map(|&(_, c)| c) {
                    Some('_') => {
                        self.pos += 1;
                        Ok(Expr::Atiyah(self.atiyah_index()?))
                    }
                    Some('(') => {
                        self.pos += 1;
                        let r = self.atiyah_index()?;
                        self.expect(')')?;
                        Ok(Expr::Atiyah(r))
                    }
                    _ => self.error("expected '_' or '(' after 'F'"),
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let at = self.offset();
                match self.unsigned()? {
                    0 => Err(ParseError {
                        position: at,
                        message: "multiplicity must be >= 1".into(),
                    }),
                    k => Ok(Expr::Count(k)),
                }
            }
            Some(c) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }
}
