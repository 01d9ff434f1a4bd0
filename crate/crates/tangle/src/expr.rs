//! Tangle expressions and their text form.
//!
//! ```text
//! expr := signed-int | "(" expr "+" expr ")" | "(" expr "*" expr ")" | "r(" expr ")"
//! ```
//!
//! A bare integer `n` is the horizontal `n`-twist.

use std::fmt;
use std::str::FromStr;

use skein_core::{BracketPair, Connectivity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Horizontal,
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Twist { n: i64, axis: Axis },
    Add(Box<TangleExpr>, Box<TangleExpr>),
    Mul(Box<TangleExpr>, Box<TangleExpr>),
    Rot(Box<TangleExpr>),
}

impl TangleExpr {
    pub fn twist(n: i64) -> Self {
        assert!(n != 0, "twist with zero crossings");
        Self::Twist { n, axis: Axis::Horizontal }
    }

    /// Vertical twists have fraction `1/n`.
    pub fn vtwist(n: i64) -> Self {
        assert!(n != 0, "twist with zero crossings");
        Self::Twist { n, axis: Axis::Vertical }
    }

    pub fn add(a: Self, b: Self) -> Self {
        Self::Add(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Self, b: Self) -> Self {
        Self::Mul(Box::new(a), Box::new(b))
    }

    pub fn rot(a: Self) -> Self {
        Self::Rot(Box::new(a))
    }

    pub fn crossings(&self) -> u64 {
        match self {
            Self::Twist { n, .. } => n.unsigned_abs(),
            Self::Add(a, b) | Self::Mul(a, b) => a.crossings() + b.crossings(),
            Self::Rot(a) => a.crossings(),
        }
    }

    /// Compositional bracket through the skein operations.
    pub fn bracket(&self) -> BracketPair {
        match self {
            Self::Twist { n, axis: Axis::Horizontal } => BracketPair::twist(*n),
            Self::Twist { n, axis: Axis::Vertical } => BracketPair::twist(-*n).rotate90(),
            Self::Add(a, b) => a.bracket().add(&b.bracket()),
            Self::Mul(a, b) => a.bracket().mul(&b.bracket()),
            Self::Rot(a) => a.bracket().rotate90(),
        }
    }

    /// Boundary matching, or `None` when some sum closes an internal loop.
    pub fn connectivity(&self) -> Option<Connectivity> {
        match self {
            Self::Twist { n, axis } => {
                let c = if n % 2 == 0 { Connectivity::H } else { Connectivity::X };
                Some(if *axis == Axis::Vertical { c.swap() } else { c })
            }
            Self::Add(a, b) => match a.connectivity()?.add(b.connectivity()?) {
                (c, 0) => Some(c),
                _ => None,
            },
            Self::Mul(a, b) => match a.connectivity()?.swap().add(b.connectivity()?) {
                (c, 0) => Some(c),
                _ => None,
            },
            Self::Rot(a) => Some(a.connectivity()?.swap()),
        }
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Twist { n, axis: Axis::Horizontal } => write!(f, "{n}"),
            Self::Twist { n, axis: Axis::Vertical } => write!(f, "r({})", -n),
            Self::Add(a, b) => write!(f, "({a} + {b})"),
            Self::Mul(a, b) => write!(f, "({a} * {b})"),
            Self::Rot(a) => write!(f, "r({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse tangle expression at byte {pos}: {msg}")]
pub struct ParseExprError {
    pub pos: usize,
    pub msg: &'static str,
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn err(&self, msg: &'static str) -> ParseExprError {
        ParseExprError { pos: self.i, msg }
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseExprError> {
        self.skip_ws();
        if self.s.get(self.i) == Some(&c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err("unexpected character"))
        }
    }

    fn expr(&mut self) -> Result<TangleExpr, ParseExprError> {
        self.skip_ws();
        match self.s.get(self.i) {
            Some(b'(') => {
                self.i += 1;
                let a = self.expr()?;
                self.skip_ws();
                let op = self.s.get(self.i).copied();
                self.i += 1;
                let b = self.expr()?;
                self.eat(b')')?;
                match op {
                    Some(b'+') => Ok(TangleExpr::add(a, b)),
                    Some(b'*') => Ok(TangleExpr::mul(a, b)),
                    _ => Err(ParseExprError { pos: self.i, msg: "expected + or *" }),
                }
            }
            Some(b'r') => {
                self.i += 1;
                self.eat(b'(')?;
                let a = self.expr()?;
                self.eat(b')')?;
                Ok(TangleExpr::rot(a))
            }
            Some(b'-' | b'+' | b'0'..=b'9') => {
                let start = self.i;
                self.i += 1;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                let n: i64 = text.parse().map_err(|_| ParseExprError { pos: start, msg: "bad integer" })?;
                if n == 0 {
                    return Err(ParseExprError { pos: start, msg: "zero twist" });
                }
                Ok(TangleExpr::twist(n))
            }
            _ => Err(self.err("expected expression")),
        }
    }
}

impl FromStr for TangleExpr {
    type Err = ParseExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), i: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}
