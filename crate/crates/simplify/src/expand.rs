//! Expansion of filled diagrams into planar diagram codes.
//!
//! While a tangle is built its crossings are unoriented: each tuple lists
//! its four arcs counterclockwise with the under-strand at ports 0 and 2.
//! Normalizing the finished knot picks the orientation.

use std::collections::HashMap;

use diagram_engine::{FilledDiagram, Orientation, Source};
use tangle_gen::{Axis, TangleExpr};

use crate::pd::{PDCode, PdError};

const NW: usize = 0;
const NE: usize = 1;
const SE: usize = 2;
const SW: usize = 3;

/// Tangle diagram with boundary arcs in the order NW, NE, SE, SW.
#[derive(Clone, Debug)]
struct TangleDiagram {
    crossings: Vec<[u32; 4]>,
    boundary: [u32; 4],
}

struct Builder {
    next: u32,
}

impl Builder {
    fn fresh(&mut self) -> u32 {
        self.next += 1;
        self.next
    }

    fn crossing(&mut self, positive: bool) -> TangleDiagram {
        let b: [u32; 4] = std::array::from_fn(|_| self.fresh());
        let c = if positive { [b[NE], b[NW], b[SW], b[SE]] } else { [b[NW], b[SW], b[SE], b[NE]] };
        TangleDiagram { crossings: vec![c], boundary: b }
    }

    fn twist(&mut self, n: i64) -> TangleDiagram {
        let mut t = self.crossing(n > 0);
        for _ in 1..n.unsigned_abs() {
            let c = self.crossing(n > 0);
            t = add(t, c);
        }
        t
    }

    fn build(&mut self, e: &TangleExpr) -> TangleDiagram {
        match e {
            TangleExpr::Twist { n, axis: Axis::Horizontal } => self.twist(*n),
            TangleExpr::Twist { n, axis: Axis::Vertical } => rot(self.twist(-*n)),
            TangleExpr::Add(a, b) => {
                let (a, b) = (self.build(a), self.build(b));
                add(a, b)
            }
            TangleExpr::Mul(a, b) => {
                let (a, b) = (self.build(a), self.build(b));
                add(rot(flip(a)), b)
            }
            TangleExpr::Rot(a) => rot(self.build(a)),
        }
    }

    fn oriented(&mut self, e: &TangleExpr, o: Orientation) -> TangleDiagram {
        let t = self.build(e);
        match o {
            Orientation::D0 => t,
            Orientation::D90 => rot(t),
        }
    }
}

fn rename(crossings: &mut [[u32; 4]], map: &HashMap<u32, u32>) {
    for l in crossings.iter_mut().flatten() {
        if let Some(&m) = map.get(l) {
            *l = m;
        }
    }
}

/// `a` to the left of `b`.
fn add(a: TangleDiagram, mut b: TangleDiagram) -> TangleDiagram {
    let map = HashMap::from([(b.boundary[NW], a.boundary[NE]), (b.boundary[SW], a.boundary[SE])]);
    rename(&mut b.crossings, &map);
    let mut crossings = a.crossings;
    crossings.extend(b.crossings);
    TangleDiagram { crossings, boundary: [a.boundary[NW], b.boundary[NE], b.boundary[SE], a.boundary[SW]] }
}

/// Quarter turn counterclockwise.
fn rot(t: TangleDiagram) -> TangleDiagram {
    let [nw, ne, se, sw] = t.boundary;
    TangleDiagram { crossings: t.crossings, boundary: [ne, se, sw, nw] }
}

/// Half turn in space about the vertical axis.
fn flip(t: TangleDiagram) -> TangleDiagram {
    let [nw, ne, se, sw] = t.boundary;
    let crossings = t.crossings.into_iter().map(|[a, b, c, d]| [d, c, b, a]).collect();
    TangleDiagram { crossings, boundary: [ne, nw, sw, se] }
}

/// Glues labels pairwise and returns the normalized code.
fn close(crossings: Vec<[u32; 4]>, joins: &[(u32, u32)]) -> Result<PDCode, PdError> {
    let max = crossings.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut parent: Vec<u32> = (0..=max as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for &(a, b) in joins {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[rb as usize] = ra;
        }
    }
    let crossings = crossings.into_iter().map(|c| c.map(|l| find(&mut parent, l))).collect();
    PDCode::new(crossings).normalized()
}

/// Planar diagram code of a one-component filled diagram.
pub fn expand_to_pd(d: &FilledDiagram) -> Result<PDCode, PdError> {
    let mut b = Builder { next: 0 };
    match &d.source {
        Source::Closure { tangle, orient } => {
            let t = b.oriented(&tangle.expr, *orient);
            let [nw, ne, se, sw] = t.boundary;
            close(t.crossings, &[(nw, ne), (sw, se)])
        }
        Source::Fill { poly, assignment } => {
            let emb = &poly.embedding;
            // Boundary label sitting at each dart of the polyhedron.
            let mut at = vec![0u32; emb.dart_count()];
            let mut crossings = Vec::new();
            for (v, (t, o)) in assignment.iter().enumerate() {
                let td = b.oriented(&t.expr, *o);
                let r = emb.rotation()[v];
                // Rotation positions run NW, SW, SE, NE.
                for (pos, corner) in [NW, SW, SE, NE].into_iter().enumerate() {
                    at[r[pos]] = td.boundary[corner];
                }
                crossings.extend(td.crossings);
            }
            let joins: Vec<(u32, u32)> = (0..at.len()).map(|x| (at[x], at[emb.partner(x)])).collect();
            close(crossings, &joins)
        }
    }
}
