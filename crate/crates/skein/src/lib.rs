//! Exact arithmetic for the Kauffman bracket skein calculus.
//!
//! Everything here is an immutable value type. Brackets of 2-tangles are
//! stored as coordinates in the basis formed by the 0-tangle and the
//! ∞-tangle, with coefficients in `Z[A, A^-1]`.

pub mod bracket;
pub mod connectivity;
pub mod cyclotomic;
pub mod laurent;

pub use bracket::{closure_bracket, denominator_bracket, BracketPair};
pub use connectivity::{conn_compose, ConnOp, Connectivity};
pub use cyclotomic::Cyclotomic8;
pub use laurent::{LaurentPoly, ParseLaurentError};

/// The value of a free loop, `-A^2 - A^-2`.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_terms(&[(2, -1), (-2, -1)])
}
