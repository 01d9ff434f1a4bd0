//! Planar diagram codes, their expansion from filled diagrams, and a
//! Reidemeister-move search that certifies unknot diagrams.

pub mod expand;
pub mod moves;
pub mod pd;
pub mod search;

pub use expand::expand_to_pd;
pub use moves::{apply_move, available_moves, push_moves, Move, MoveError, MoveKind};
pub use pd::{PDCode, PdError};
pub use search::{replay, simplify, SimplifyOutcome, Status, DEFAULT_BUDGET};
