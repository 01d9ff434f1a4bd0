//! Enumeration of diagrams of a fixed crossing number, split into batches:
//! one per (polyhedron, composition) and one for all closures.

use std::sync::Arc;

use polyhedra_gen::PolyhedronRecord;
use skein_core::{Connectivity, LaurentPoly};
use tangle_gen::TangleRecord;

use crate::diagram::{bracket_laurent, fill_bracket_laurent, FilledDiagram, Orientation};
use crate::frame::{strand_partner, PolyFrame};
use crate::small::SmallCyc;

/// Tangle records indexed by crossing number, with their values at `zeta`.
pub struct TanglePool {
    records: Vec<Arc<TangleRecord>>,
    all: Vec<Vec<usize>>,
    triv: Vec<Vec<usize>>,
    vals: Vec<(SmallCyc, SmallCyc)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PoolError {
    #[error("tangle pool too small: crossings up to {have}, need {need}")]
    TooSmall { have: u32, need: u32 },
    #[error("bracket of {0} does not fit machine words at zeta")]
    Overflow(String),
}

impl TanglePool {
    pub fn new(records: Vec<TangleRecord>) -> Result<Self, PoolError> {
        let max = records.iter().map(|r| r.crossings).max().unwrap_or(0) as usize;
        let mut all = vec![Vec::new(); max + 1];
        let mut triv = vec![Vec::new(); max + 1];
        let mut vals = Vec::with_capacity(records.len());
        for (i, r) in records.iter().enumerate() {
            all[r.crossings as usize].push(i);
            if r.trivializable {
                triv[r.crossings as usize].push(i);
            }
            let p = SmallCyc::eval(&r.bracket.p).ok_or_else(|| PoolError::Overflow(r.expr.to_string()))?;
            let q = SmallCyc::eval(&r.bracket.q).ok_or_else(|| PoolError::Overflow(r.expr.to_string()))?;
            vals.push((p, q));
        }
        Ok(Self { records: records.into_iter().map(Arc::new).collect(), all, triv, vals })
    }

    pub fn max_crossings(&self) -> u32 {
        self.all.len().saturating_sub(1) as u32
    }

    pub fn record(&self, i: usize) -> &Arc<TangleRecord> {
        &self.records[i]
    }

    pub fn with_crossings(&self, c: u32) -> &[usize] {
        self.all.get(c as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn trivializable_with_crossings(&self, c: u32) -> &[usize] {
        self.triv.get(c as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Checks that every part of every composition and every closure is covered.
    pub fn check_covers(&self, c: u32) -> Result<(), PoolError> {
        if self.max_crossings() < c {
            return Err(PoolError::TooSmall { have: self.max_crossings(), need: c });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BatchId {
    /// Index into the polyhedron list and crossing numbers per vertex.
    Fill { poly: usize, parts: Vec<u32> },
    Closures,
}

impl BatchId {
    /// Stable text label used by checkpoint ledgers.
    pub fn label(&self, polys: &[Arc<PolyhedronRecord>]) -> String {
        match self {
            BatchId::Fill { poly, parts } => {
                let p: Vec<String> = parts.iter().map(u32::to_string).collect();
                format!("fill:{}:{}", hex::encode(&polys[*poly].canonical_code), p.join("-"))
            }
            BatchId::Closures => "closures".to_string(),
        }
    }
}

/// Compositions of `c` into `k` positive parts, lexicographic.
pub fn compositions(c: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 1..=left.saturating_sub(k as u32 - 1) {
            cur.push(a);
            rec(left - a, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 && c as usize >= k {
        rec(c, k, &mut Vec::new(), &mut out);
    }
    out
}

/// All batches for crossing number `c`, fills first in polyhedron order.
pub fn plan_batches(c: u32, polys: &[Arc<PolyhedronRecord>]) -> Vec<BatchId> {
    let mut out = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        if p.vertex_count as u32 > c {
            continue;
        }
        for parts in compositions(c, p.vertex_count) {
            out.push(BatchId::Fill { poly: i, parts });
        }
    }
    out.push(BatchId::Closures);
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchOutcome {
    /// Diagrams examined, knots among them, determinant-one knots.
    pub diagrams: u64,
    pub knots: u64,
    pub survivors: u64,
    pub candidates: Vec<(FilledDiagram, LaurentPoly)>,
}

/// Local darts of a polyhedron in a flat layout for fast tracing.
struct Tracer {
    rot: Vec<[usize; 4]>,
    vert: Vec<usize>,
    pos: Vec<usize>,
    pair: Vec<usize>,
}

impl Tracer {
    fn new(p: &PolyhedronRecord) -> Self {
        let e = &p.embedding;
        let n = e.dart_count();
        let mut pos = vec![0; n];
        for ds in e.rotation() {
            for (i, &d) in ds.iter().enumerate() {
                pos[d] = i;
            }
        }
        Self { rot: e.rotation().to_vec(), vert: (0..n).map(|d| e.vertex_of(d)).collect(), pos, pair: e.pairing().to_vec() }
    }

    fn is_knot(&self, conn: &[Connectivity], seen: &mut Vec<bool>) -> bool {
        seen.clear();
        seen.resize(self.pair.len(), false);
        let mut d = 0;
        let mut steps = 0;
        while !seen[d] {
            let v = self.vert[d];
            let out = self.rot[v][strand_partner(conn[v], self.pos[d])];
            seen[d] = true;
            seen[out] = true;
            steps += 2;
            d = self.pair[out];
        }
        steps == self.pair.len()
    }
}

/// Evaluates one batch. Fills draw from trivializable tangles only; closures
/// use every tangle with `c` crossings.
pub fn run_batch(id: &BatchId, c: u32, polys: &[Arc<PolyhedronRecord>], pool: &TanglePool) -> BatchOutcome {
    match id {
        BatchId::Closures => run_closures(c, pool),
        BatchId::Fill { poly, parts } => run_fill(&polys[*poly], parts, pool),
    }
}

fn run_closures(c: u32, pool: &TanglePool) -> BatchOutcome {
    let mut out = BatchOutcome::default();
    for &i in pool.with_crossings(c) {
        let t = pool.record(i);
        for o in Orientation::BOTH {
            out.diagrams += 1;
            let conn = if o == Orientation::D0 { t.conn } else { t.conn.swap() };
            if conn == Connectivity::H {
                continue;
            }
            out.knots += 1;
            let (p, q) = pool.vals[i];
            let z = if o == Orientation::D0 { q } else { p };
            if z.norm() != Some(1) {
                continue;
            }
            out.survivors += 1;
            let d = FilledDiagram::closure(t.clone(), o);
            let b = bracket_laurent(&d);
            if b.is_unit_monomial() {
                out.candidates.push((d, b));
            }
        }
    }
    out
}

fn run_fill(poly: &Arc<PolyhedronRecord>, parts: &[u32], pool: &TanglePool) -> BatchOutcome {
    let mut out = BatchOutcome::default();
    let v = parts.len();
    let options: Vec<Vec<(usize, Orientation)>> = parts
        .iter()
        .map(|&c| pool.trivializable_with_crossings(c).iter().flat_map(|&i| Orientation::BOTH.map(|o| (i, o))).collect())
        .collect();
    if options.iter().any(Vec::is_empty) {
        return out;
    }
    let frame = PolyFrame::new(poly.embedding.clone());
    let tracer = Tracer::new(poly);
    let mut idx = vec![0usize; v];
    let mut conn = vec![Connectivity::H; v];
    let mut w = vec![(SmallCyc::ZERO, SmallCyc::ZERO); v];
    let mut seen = Vec::new();
    loop {
        for k in 0..v {
            let (i, o) = options[k][idx[k]];
            let t = pool.record(i);
            let (p, q) = pool.vals[i];
            (conn[k], w[k]) = match o {
                Orientation::D0 => (t.conn, (p, q)),
                Orientation::D90 => (t.conn.swap(), (q, p)),
            };
        }
        out.diagrams += 1;
        if tracer.is_knot(&conn, &mut seen) {
            out.knots += 1;
            let mut z = SmallCyc::ZERO;
            for &s in &frame.one_loop {
                let mut prod = SmallCyc::ONE;
                for (k, wk) in w.iter().enumerate() {
                    prod = prod * if s >> k & 1 == 0 { wk.0 } else { wk.1 };
                }
                z = z + prod;
            }
            if z.norm() == Some(1) {
                out.survivors += 1;
                let asg: Vec<(Arc<TangleRecord>, Orientation)> =
                    (0..v).map(|k| (pool.record(options[k][idx[k]].0).clone(), options[k][idx[k]].1)).collect();
                let b = fill_bracket_laurent(&frame, &asg);
                if b.is_unit_monomial() {
                    let d = FilledDiagram::fill(poly.clone(), asg).expect("arity matches");
                    out.candidates.push((d, b));
                }
            }
        }
        // Odometer, last vertex fastest.
        let mut k = v;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Every knot diagram with exactly `c` crossings, in batch order.
pub fn enumerate_diagrams(c: u32, polys: &[Arc<PolyhedronRecord>], pool: &TanglePool) -> Vec<FilledDiagram> {
    let mut out = Vec::new();
    for id in plan_batches(c, polys) {
        match id {
            BatchId::Closures => {
                for &i in pool.with_crossings(c) {
                    for o in Orientation::BOTH {
                        let d = FilledDiagram::closure(pool.record(i).clone(), o);
                        if crate::component_count(&d) == 1 {
                            out.push(d);
                        }
                    }
                }
            }
            BatchId::Fill { poly, parts } => {
                let options: Vec<Vec<(usize, Orientation)>> = parts
                    .iter()
                    .map(|&c| pool.trivializable_with_crossings(c).iter().flat_map(|&i| Orientation::BOTH.map(|o| (i, o))).collect())
                    .collect();
                let mut stack: Vec<Vec<(usize, Orientation)>> = vec![Vec::new()];
                let mut fills = Vec::new();
                while let Some(pre) = stack.pop() {
                    if pre.len() == parts.len() {
                        fills.push(pre);
                        continue;
                    }
                    for opt in options[pre.len()].iter().rev() {
                        let mut next = pre.clone();
                        next.push(*opt);
                        stack.push(next);
                    }
                }
                for f in fills {
                    let asg = f.iter().map(|&(i, o)| (pool.record(i).clone(), o)).collect();
                    let d = FilledDiagram::fill(polys[poly].clone(), asg).expect("arity matches");
                    if crate::component_count(&d) == 1 {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(6, 6), vec![vec![1; 6]]);
        assert_eq!(compositions(12, 6).len(), 462);
        assert!(compositions(5, 6).is_empty());
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    }
}
