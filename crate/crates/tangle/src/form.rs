//! Normal form for algebraic tangles.
//!
//! A nonrational tangle is stored as a sum `k1 + k2 + ... + kn + [e]`: the
//! horizontal twists are collected at the right end, and every summand is
//! either a vertical rational piece (fraction strictly between -1 and 1) or
//! the quarter turn of another nonrational tangle in the same form.
//!
//! Three order-2 symmetries act on this form: `rho_h` and `rho_v`, the
//! half turns about the horizontal and vertical axes in the projection
//! plane, and the mirror image. Together with the implicit quarter turn that
//! identifies a node with its rotation, they generate the equivalence used
//! for counting.

use skein_core::Connectivity;

use crate::expr::TangleExpr;
use crate::frac::Frac;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Child {
    Piece(Frac),
    Rot(Box<Node>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub e: i64,
    pub kids: Vec<Child>,
}

impl Child {
    pub fn cost(&self) -> i64 {
        match self {
            Child::Piece(f) => f.recip().cf_cost(),
            Child::Rot(u) => u.cost(),
        }
    }

    pub fn connectivity(&self) -> Option<Connectivity> {
        match self {
            Child::Piece(f) => Some(f.connectivity()),
            Child::Rot(u) => Some(u.connectivity()?.swap()),
        }
    }

    fn to_expr(&self) -> TangleExpr {
        match self {
            Child::Piece(f) => TangleExpr::rot(rational_expr(f.rotated())),
            Child::Rot(u) => TangleExpr::rot(u.to_expr()),
        }
    }
}

impl Node {
    pub fn cost(&self) -> i64 {
        self.e.abs() + self.kids.iter().map(Child::cost).sum::<i64>()
    }

    pub fn connectivity(&self) -> Option<Connectivity> {
        let mut c = Connectivity::H;
        for k in &self.kids {
            match c.add(k.connectivity()?) {
                (n, 0) => c = n,
                _ => return None,
            }
        }
        let tail = if self.e % 2 == 0 { Connectivity::H } else { Connectivity::X };
        Some(c.add(tail).0)
    }

    /// Half turn about the horizontal axis; summand order is kept.
    pub fn rho_h(&self) -> Node {
        let kids = self
            .kids
            .iter()
            .map(|k| match k {
                Child::Piece(f) => Child::Piece(*f),
                Child::Rot(u) => Child::Rot(Box::new(u.rho_v())),
            })
            .collect();
        Node { e: self.e, kids }
    }

    /// Half turn about the vertical axis. Summand order reverses; the twist
    /// block then flypes back to the right end, turning every summand it
    /// passes when it has an odd number of crossings.
    pub fn rho_v(&self) -> Node {
        let odd = self.e % 2 != 0;
        let kids = self
            .kids
            .iter()
            .rev()
            .map(|k| match k {
                Child::Piece(f) => Child::Piece(*f),
                Child::Rot(u) => {
                    let t = u.rho_h();
                    Child::Rot(Box::new(if odd { t.rho_v() } else { t }))
                }
            })
            .collect();
        Node { e: self.e, kids }
    }

    pub fn mirror(&self) -> Node {
        let kids = self
            .kids
            .iter()
            .map(|k| match k {
                Child::Piece(f) => Child::Piece(f.neg()),
                Child::Rot(u) => Child::Rot(Box::new(u.mirror())),
            })
            .collect();
        Node { e: -self.e, kids }
    }

    /// The eight images under mirror, `rho_h` and `rho_v`.
    pub fn orbit(&self) -> [Node; 8] {
        let m = self.mirror();
        let img = |a: &Node| {
            let v = a.rho_v();
            [a.clone(), a.rho_h(), v.rho_h(), v]
        };
        let [a, b, c, d] = img(self);
        let [e, f, g, h] = img(&m);
        [a, b, c, d, e, f, g, h]
    }

    pub fn to_expr(&self) -> TangleExpr {
        let mut it = self.kids.iter().map(Child::to_expr);
        let mut acc = it.next();
        for k in it {
            acc = Some(TangleExpr::add(acc.unwrap(), k));
        }
        match (acc, self.e) {
            (Some(a), 0) => a,
            (Some(a), e) => TangleExpr::add(a, TangleExpr::twist(e)),
            (None, e) => TangleExpr::twist(e),
        }
    }

    /// Compact byte serialization; the canonical key is the least of these
    /// over the orbit.
    pub fn encode(&self, out: &mut Vec<u8>) {
        out.push(b'N');
        put_signed(out, self.e);
        put_unsigned(out, self.kids.len() as u64);
        for k in &self.kids {
            match k {
                Child::Piece(f) => {
                    out.push(b'P');
                    put_signed(out, f.num());
                    put_unsigned(out, f.den() as u64);
                }
                Child::Rot(u) => {
                    out.push(b'R');
                    u.encode(out);
                }
            }
        }
    }

    /// The orbit member with the least encoding, together with that encoding.
    pub fn canonical(&self) -> (Node, Vec<u8>) {
        self.orbit()
            .into_iter()
            .map(|n| {
                let mut b = Vec::new();
                n.encode(&mut b);
                (n, b)
            })
            .min_by(|x, y| x.1.cmp(&y.1))
            .unwrap()
    }
}

/// Expression for the rational tangle with finite nonzero fraction `g`.
pub fn rational_expr(g: Frac) -> TangleExpr {
    assert!(!g.is_infinite() && g.num() != 0, "no twist expression for {g:?}");
    if g.is_integer() {
        return TangleExpr::twist(g.num());
    }
    let a = g.trunc().unwrap();
    let piece = TangleExpr::rot(rational_expr(g.add_int(-a).rotated()));
    if a == 0 {
        piece
    } else {
        TangleExpr::add(piece, TangleExpr::twist(a))
    }
}

/// Key bytes of the rational class of `g` (closed under `g -> -g`, `g -> 1/g`).
pub fn rational_key(g: Frac) -> Vec<u8> {
    let (a, b) = (g.num().unsigned_abs(), g.den().unsigned_abs());
    let (p, q) = if a >= b { (a, b) } else { (b, a) };
    let mut out = vec![b'Q'];
    put_unsigned(&mut out, p);
    put_unsigned(&mut out, q);
    out
}

fn put_unsigned(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let b = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(b);
            return;
        }
        out.push(b | 0x80);
    }
}

fn put_signed(out: &mut Vec<u8>, v: i64) {
    put_unsigned(out, ((v << 1) ^ (v >> 63)) as u64);
}
