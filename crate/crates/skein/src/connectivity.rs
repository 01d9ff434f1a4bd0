//! Which boundary points of a 2-tangle are joined by its arcs.

use serde::{Deserialize, Serialize};

/// `H`: NW–NE and SW–SE (as the 0-tangle). `V`: NW–SW and NE–SE (as ∞).
/// `X`: NW–SE and NE–SW (as a single crossing).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connectivity {
    H,
    V,
    X,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnOp {
    Add,
    Mul,
    Rotate90,
}

impl Connectivity {
    /// Quarter turn, transpose: swaps `H` and `V`.
    pub fn swap(self) -> Self {
        match self {
            Self::H => Self::V,
            Self::V => Self::H,
            Self::X => Self::X,
        }
    }

    /// Matching of `self + other` and the number of closed loops it creates.
    pub fn add(self, other: Self) -> (Self, u32) {
        use Connectivity::*;
        match (self, other) {
            (H, c) | (c, H) => (c, 0),
            (V, V) => (V, 1),
            (X, X) => (H, 0),
            _ => (V, 0),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::H => "H",
            Self::V => "V",
            Self::X => "X",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "H" => Some(Self::H),
            "V" => Some(Self::V),
            "X" => Some(Self::X),
            _ => None,
        }
    }
}

/// `c2` must be present exactly for the binary operations.
pub fn conn_compose(op: ConnOp, c1: Connectivity, c2: Option<Connectivity>) -> (Connectivity, u32) {
    match (op, c2) {
        (ConnOp::Add, Some(c2)) => c1.add(c2),
        (ConnOp::Mul, Some(c2)) => c1.swap().add(c2),
        (ConnOp::Rotate90, None) => (c1.swap(), 0),
        _ => panic!("conn_compose: operand count does not match {op:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::Connectivity::*;
    use super::*;

    #[test]
    fn composition_examples() {
        assert_eq!(conn_compose(ConnOp::Add, V, Some(V)), (V, 1));
        assert_eq!(conn_compose(ConnOp::Add, H, Some(H)), (H, 0));
        assert_eq!(conn_compose(ConnOp::Add, X, Some(X)), (H, 0));
        assert_eq!(conn_compose(ConnOp::Add, V, Some(X)), (V, 0));
        assert_eq!(conn_compose(ConnOp::Mul, H, Some(H)), (V, 0));
        assert_eq!(conn_compose(ConnOp::Mul, H, Some(V)), (V, 1));
        assert_eq!(conn_compose(ConnOp::Rotate90, X, None), (X, 0));
    }
}
