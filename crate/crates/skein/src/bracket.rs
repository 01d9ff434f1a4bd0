//! Bracket pairs: coordinates of a tangle in the (0-tangle, ∞-tangle) basis.

use serde::{Deserialize, Serialize};

use crate::{delta, LaurentPoly};

/// `[T] = p [0] + q [∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BracketPair {
    pub p: LaurentPoly,
    pub q: LaurentPoly,
}

impl BracketPair {
    pub fn new(p: LaurentPoly, q: LaurentPoly) -> Self {
        Self { p, q }
    }

    /// The crossingless 0-tangle.
    pub fn zero_tangle() -> Self {
        Self::new(LaurentPoly::one(), LaurentPoly::zero())
    }

    /// The crossingless ∞-tangle.
    pub fn infinity_tangle() -> Self {
        Self::new(LaurentPoly::zero(), LaurentPoly::one())
    }

    /// A single crossing, `[±1]`.
    pub fn crossing(positive: bool) -> Self {
        let (a, ainv) = (LaurentPoly::a(), LaurentPoly::monomial(1, -1));
        if positive {
            Self::new(a, ainv)
        } else {
            Self::new(ainv, a)
        }
    }

    /// The horizontal `n`-twist, `n` additions of `[±1]`.
    pub fn twist(n: i64) -> Self {
        let c = Self::crossing(n > 0);
        (0..n.unsigned_abs()).fold(Self::zero_tangle(), |acc, _| acc.add(&c))
    }

    /// `(p1 p2, p1 q2 + q1 p2 + δ q1 q2)`.
    pub fn add(&self, other: &Self) -> Self {
        let p = &self.p * &other.p;
        let q = &(&self.p * &other.q) + &(&self.q * &other.p);
        let q = &q + &(&delta() * &(&self.q * &other.q));
        Self::new(p, q)
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.q.clone(), self.p.clone())
    }

    /// `add(transpose(self), other)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.transpose().add(other)
    }

    pub fn rotate90(&self) -> Self {
        Self::new(self.q.clone(), self.p.clone())
    }

    /// Bracket of the mirror image: `A -> A^-1` in both coordinates.
    pub fn mirror(&self) -> Self {
        Self::new(self.p.mirror(), self.q.mirror())
    }
}

/// Reduced bracket of the numerator closure (NW–NE, SW–SE joined).
pub fn closure_bracket(t: &BracketPair) -> LaurentPoly {
    &(&t.p * &delta()) + &t.q
}

/// Reduced bracket of the denominator closure (NW–SW, NE–SE joined).
pub fn denominator_bracket(t: &BracketPair) -> LaurentPoly {
    &t.p + &(&t.q * &delta())
}
