//! Filled diagrams and their invariants.

use std::sync::Arc;

use num_bigint::BigInt;
use polyhedra_gen::PolyhedronRecord;
use skein_core::{delta, Connectivity, Cyclotomic8, LaurentPoly};
use tangle_gen::TangleRecord;

use crate::frame::{count_curves, PolyFrame};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    D0,
    D90,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::D0, Orientation::D90];

    pub fn degrees(self) -> u32 {
        match self {
            Orientation::D0 => 0,
            Orientation::D90 => 90,
        }
    }

    pub fn from_degrees(d: u32) -> Option<Self> {
        match d {
            0 => Some(Orientation::D0),
            90 => Some(Orientation::D90),
            _ => None,
        }
    }
}

/// Bracket pair and matching of a tangle as seen in its insertion frame.
pub fn oriented(t: &TangleRecord, o: Orientation) -> (&LaurentPoly, &LaurentPoly, Connectivity) {
    let b = &t.bracket;
    match o {
        Orientation::D0 => (&b.p, &b.q, t.conn),
        Orientation::D90 => (&b.q, &b.p, t.conn.swap()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Numerator closure of the tangle in the given orientation.
    Closure { tangle: Arc<TangleRecord>, orient: Orientation },
    Fill { poly: Arc<PolyhedronRecord>, assignment: Vec<(Arc<TangleRecord>, Orientation)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilledDiagram {
    pub source: Source,
    pub crossings: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("assignment has {got} tangles for a {want}-vertex polyhedron")]
    Arity { got: usize, want: usize },
    #[error("norm of the bracket at zeta is not a perfect-square integer")]
    NonScalarNorm,
}

impl FilledDiagram {
    pub fn closure(tangle: Arc<TangleRecord>, orient: Orientation) -> Self {
        let crossings = tangle.crossings;
        Self { source: Source::Closure { tangle, orient }, crossings }
    }

    pub fn fill(poly: Arc<PolyhedronRecord>, assignment: Vec<(Arc<TangleRecord>, Orientation)>) -> Result<Self, DiagramError> {
        if assignment.len() != poly.vertex_count {
            return Err(DiagramError::Arity { got: assignment.len(), want: poly.vertex_count });
        }
        let crossings = assignment.iter().map(|(t, _)| t.crossings).sum();
        Ok(Self { source: Source::Fill { poly, assignment }, crossings })
    }
}

pub fn component_count(d: &FilledDiagram) -> usize {
    match &d.source {
        Source::Closure { tangle, orient } => match oriented(tangle, *orient).2 {
            Connectivity::H => 2,
            _ => 1,
        },
        Source::Fill { poly, assignment } => count_curves(&poly.embedding, |v| oriented(&assignment[v].0, assignment[v].1).2),
    }
}

/// Sum over states of a fill with per-vertex weights, grouped by loop count.
/// The caller applies `DELTA^(loops - 1)`.
fn fill_sum<T: Clone>(
    frame: &PolyFrame,
    weights: &[(T, T)],
    zero: T,
    one: T,
    mul: impl Fn(&T, &T) -> T + Copy,
    add: impl Fn(&T, &T) -> T + Copy,
) -> Vec<T> {
    let v = weights.len();
    let max_loops = *frame.loops.iter().max().unwrap_or(&1) as usize;
    let mut by_loops = vec![zero; max_loops + 1];
    // Depth-first over vertices so prefix products are shared.
    let mut stack: Vec<(usize, u32, T)> = vec![(0, 0, one)];
    while let Some((k, s, prod)) = stack.pop() {
        if k == v {
            let l = frame.loops[s as usize] as usize;
            by_loops[l] = add(&by_loops[l], &prod);
            continue;
        }
        stack.push((k + 1, s | 1 << k, mul(&prod, &weights[k].1)));
        stack.push((k + 1, s, mul(&prod, &weights[k].0)));
    }
    by_loops
}

/// Unknot-normalized bracket as a Laurent polynomial.
pub fn bracket_laurent(d: &FilledDiagram) -> LaurentPoly {
    match &d.source {
        Source::Closure { tangle, orient } => {
            let (p, q, _) = oriented(tangle, *orient);
            &(p * &delta()) + q
        }
        Source::Fill { poly, assignment } => {
            let frame = PolyFrame::new(poly.embedding.clone());
            fill_bracket_laurent(&frame, assignment)
        }
    }
}

/// Laurent state sum for a fill against a precomputed frame.
pub fn fill_bracket_laurent(frame: &PolyFrame, assignment: &[(Arc<TangleRecord>, Orientation)]) -> LaurentPoly {
    let weights: Vec<(LaurentPoly, LaurentPoly)> = assignment
        .iter()
        .map(|(t, o)| {
            let (p, q, _) = oriented(t, *o);
            (p.clone(), q.clone())
        })
        .collect();
    let by_loops = fill_sum(frame, &weights, LaurentPoly::zero(), LaurentPoly::one(), |a, b| a * b, |a, b| a + b);
    let d = delta();
    let mut out = LaurentPoly::zero();
    let mut dpow = LaurentPoly::one();
    for (l, s) in by_loops.iter().enumerate().skip(1) {
        if l > 1 {
            dpow = &dpow * &d;
        }
        if !s.is_zero() {
            out = &out + &(s * &dpow);
        }
    }
    out
}

/// Bracket evaluated at `zeta`; only one-loop states contribute there.
pub fn bracket_cyclotomic(d: &FilledDiagram) -> Cyclotomic8 {
    match &d.source {
        Source::Closure { tangle, orient } => {
            let (_, q, _) = oriented(tangle, *orient);
            q.eval_zeta8()
        }
        Source::Fill { poly, assignment } => {
            let frame = PolyFrame::new(poly.embedding.clone());
            let weights: Vec<(Cyclotomic8, Cyclotomic8)> = assignment
                .iter()
                .map(|(t, o)| {
                    let (p, q, _) = oriented(t, *o);
                    (p.eval_zeta8(), q.eval_zeta8())
                })
                .collect();
            let mut total = Cyclotomic8::zero();
            for &s in &frame.one_loop {
                let mut prod = Cyclotomic8::one();
                for (k, w) in weights.iter().enumerate() {
                    prod = &prod * if s >> k & 1 == 0 { &w.0 } else { &w.1 };
                }
                total = &total + &prod;
            }
            total
        }
    }
}

/// `|V(-1)|` from the norm of the bracket at `zeta`.
pub fn determinant(d: &FilledDiagram) -> Result<BigInt, DiagramError> {
    bracket_cyclotomic(d).abs_integer().ok_or(DiagramError::NonScalarNorm)
}

/// The bracket when the diagram has determinant one and a unit-monomial bracket.
pub fn is_candidate(d: &FilledDiagram) -> Option<LaurentPoly> {
    let z = bracket_cyclotomic(d);
    if z.norm() != Cyclotomic8::one() {
        return None;
    }
    let b = bracket_laurent(d);
    b.is_unit_monomial().then_some(b)
}

/// `(-A)^(-3w) * bracket`, the Jones polynomial in the variable `A`.
pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    bracket * &LaurentPoly::monomial(sign, -3 * writhe)
}
