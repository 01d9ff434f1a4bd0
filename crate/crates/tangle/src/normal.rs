//! Reduction of arbitrary expressions to the normal form, and canonical keys.

use crate::expr::{Axis, TangleExpr};
use crate::form::{rational_expr, rational_key, Child, Node};
use crate::frac::Frac;

/// A tangle in normal form: rational, a nonrational sum, or the quarter turn
/// of a nonrational sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    Rational(Frac),
    H(Node),
    V(Node),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NormalizeError {
    #[error("sum of two ∞-tangles closes an internal loop")]
    InternalLoop,
    #[error("∞-tangle summed with a nonintegral tangle is not in algebraic normal form")]
    InfinitySum,
}

enum Item {
    Int(i64),
    Infinity,
    Child(Child),
}

impl Form {
    /// Quarter turn.
    pub fn rotate(self) -> Form {
        match self {
            Form::Rational(g) => Form::Rational(g.rotated()),
            Form::H(u) => Form::V(u),
            Form::V(u) => Form::H(u.rho_h().rho_v()),
        }
    }

    /// Half turn about the NW–SE diagonal, the quarter turn after `rho_v`.
    pub fn transpose(self) -> Form {
        match self {
            Form::Rational(g) => Form::Rational(g.rotated()),
            Form::H(u) => Form::V(u.rho_v()),
            Form::V(u) => Form::H(u.rho_v()),
        }
    }

    /// An expression of this form with the minimal crossing count; `None`
    /// for the crossingless tangles 0 and ∞.
    pub fn to_expr(&self) -> Option<TangleExpr> {
        match self {
            Form::Rational(g) if g.is_infinite() || g.num() == 0 => None,
            Form::Rational(g) => Some(rational_expr(*g)),
            Form::H(u) => Some(u.to_expr()),
            Form::V(u) => Some(TangleExpr::rot(u.to_expr())),
        }
    }

    fn items(self) -> Vec<Item> {
        match self {
            Form::Rational(g) if g.is_infinite() => vec![Item::Infinity],
            Form::Rational(g) if g.is_integer() => vec![Item::Int(g.num())],
            Form::Rational(g) => {
                let a = g.trunc().unwrap();
                vec![Item::Child(Child::Piece(g.add_int(-a))), Item::Int(a)]
            }
            Form::H(u) => {
                let mut v: Vec<Item> = u.kids.into_iter().map(Item::Child).collect();
                v.push(Item::Int(u.e));
                v
            }
            Form::V(u) => vec![Item::Child(Child::Rot(Box::new(u)))],
        }
    }

    /// Canonical key bytes; equal for tangles related by the counting
    /// equivalence.
    pub fn key(&self) -> Vec<u8> {
        match self {
            Form::Rational(g) => rational_key(*g),
            Form::H(u) | Form::V(u) => u.canonical().1,
        }
    }
}

/// Flypes a crossing across a summand: half turn about the horizontal axis.
fn flype(c: Child) -> Child {
    match c {
        Child::Rot(u) => Child::Rot(Box::new(u.rho_v())),
        piece => piece,
    }
}

fn assemble(items: Vec<Item>) -> Result<Form, NormalizeError> {
    let infinities = items.iter().filter(|i| matches!(i, Item::Infinity)).count();
    if infinities > 1 {
        return Err(NormalizeError::InternalLoop);
    }
    if infinities == 1 {
        return if items.iter().all(|i| matches!(i, Item::Int(_) | Item::Infinity)) {
            Ok(Form::Rational(Frac::INFINITY))
        } else {
            Err(NormalizeError::InfinitySum)
        };
    }

    // Slide every twist to the right end.
    let mut e = 0i64;
    let mut kids = Vec::new();
    for it in items {
        match it {
            Item::Int(n) => e += n,
            Item::Child(c) => kids.push(if e % 2 != 0 { flype(c) } else { c }),
            Item::Infinity => unreachable!(),
        }
    }

    // A twist of sign opposite to a piece is absorbed into the rightmost such
    // piece, which lowers the crossing count.
    while e != 0 {
        let s = e.signum();
        let Some(j) = kids.iter().rposition(|k| matches!(k, Child::Piece(f) if f.signum() == -s)) else {
            break;
        };
        for k in kids.iter_mut().skip(j + 1) {
            *k = flype(k.clone());
        }
        if let Child::Piece(f) = &mut kids[j] {
            *f = f.add_int(s);
        }
        e -= s;
    }

    Ok(match kids.len() {
        0 => Form::Rational(Frac::int(e)),
        1 if matches!(kids[0], Child::Piece(_)) => {
            let Child::Piece(f) = kids[0] else { unreachable!() };
            Form::Rational(f.add_int(e))
        }
        1 if e == 0 => {
            let Some(Child::Rot(u)) = kids.pop() else { unreachable!() };
            Form::V(*u)
        }
        _ => Form::H(Node { e, kids }),
    })
}

pub fn normalize(e: &TangleExpr) -> Result<Form, NormalizeError> {
    match e {
        TangleExpr::Twist { n, axis: Axis::Horizontal } => Ok(Form::Rational(Frac::int(*n))),
        TangleExpr::Twist { n, axis: Axis::Vertical } => Ok(Form::Rational(Frac::new(1, *n))),
        TangleExpr::Rot(a) => Ok(normalize(a)?.rotate()),
        TangleExpr::Add(a, b) => {
            let mut items = normalize(a)?.items();
            items.extend(normalize(b)?.items());
            assemble(items)
        }
        TangleExpr::Mul(a, b) => {
            let mut items = normalize(a)?.transpose().items();
            items.extend(normalize(b)?.items());
            assemble(items)
        }
    }
}

/// Canonical key of an expression.
pub fn canonical_key(e: &TangleExpr) -> Result<Vec<u8>, NormalizeError> {
    Ok(normalize(e)?.key())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(s: &str) -> Vec<u8> {
        canonical_key(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn quarter_turn_and_mirror_share_keys() {
        assert_eq!(canonical_key(&TangleExpr::twist(1)), canonical_key(&TangleExpr::vtwist(-1)));
        assert_eq!(key("2"), key("-2"));
        assert_eq!(key("(2 + 1)"), key("3"));
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(normalize(&"(r(3) + -1)".parse().unwrap()).unwrap(), Form::Rational(Frac::new(-4, 3)));
        assert_eq!(normalize(&"(1 + -1)".parse().unwrap()).unwrap(), Form::Rational(Frac::int(0)));
        assert_eq!(normalize(&"r((1 + -1))".parse().unwrap()).unwrap(), Form::Rational(Frac::INFINITY));
    }

    #[test]
    fn twist_absorption_lowers_cost() {
        // 1/3 + 1/2 - 1 = 1/3 - 1/2 as a Montesinos sum.
        let f = normalize(&"((r(-3) + r(-2)) + -1)".parse().unwrap()).unwrap();
        let Form::H(n) = f else { panic!("expected a sum") };
        assert_eq!(n.e, 0);
        assert_eq!(n.cost(), 5);
    }

    #[test]
    fn product_of_crossings_cancels() {
        assert_eq!(normalize(&"(1 * 1)".parse().unwrap()).unwrap(), Form::Rational(Frac::int(0)));
        assert_eq!(normalize(&"(2 * 1)".parse().unwrap()).unwrap(), Form::Rational(Frac::new(1, 2)));
    }

    #[test]
    fn pretzel_loop_is_rejected() {
        let e = "(r((1 + -1)) + r((1 + -1)))".parse().unwrap();
        assert_eq!(normalize(&e), Err(NormalizeError::InternalLoop));
    }
}
