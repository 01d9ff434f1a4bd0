//! Loop-free algebraic tangles: expressions, a normal form with canonical
//! keys, bottom-up class enumeration, and the algebraic trivializability
//! test for bracket pairs.

pub mod enumerate;
pub mod expr;
pub mod form;
pub mod frac;
pub mod normal;
pub mod triv;

pub use enumerate::{class_counts, enumerate_tangles, TangleRecord};
pub use expr::{Axis, TangleExpr};
pub use normal::{canonical_key, normalize, Form};
pub use triv::{decide_trivializable, is_trivializable, modular_unit_ideal, Obstruction, TrivializabilityCertificate};
