//! Bottom-up enumeration of algebraic tangle classes by crossing number.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use skein_core::{BracketPair, Connectivity, LaurentPoly};

use crate::expr::TangleExpr;
use crate::form::{rational_expr, rational_key, Child, Node};
use crate::frac::Frac;
use crate::triv::decide_trivializable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleRecord {
    pub expr: TangleExpr,
    pub crossings: u32,
    pub bracket: BracketPair,
    pub conn: Connectivity,
    pub key: Vec<u8>,
    pub trivializable: bool,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    expr: String,
    c: u32,
    p: LaurentPoly,
    q: LaurentPoly,
    conn: String,
    triv: bool,
    key: String,
}

#[derive(Debug, thiserror::Error)]
pub enum RecordError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expression: {0}")]
    Expr(#[from] crate::expr::ParseExprError),
    #[error("bad connectivity {0:?}")]
    Conn(String),
    #[error("bad key: {0}")]
    Key(#[from] hex::FromHexError),
}

impl TangleRecord {
    /// Record for a finished expression; the bracket is evaluated from it.
    pub fn from_expr(expr: TangleExpr, key: Vec<u8>) -> Self {
        let bracket = expr.bracket();
        let conn = expr.connectivity().expect("loop-free expression");
        let trivializable = decide_trivializable(&bracket.p, &bracket.q).expect("nonzero bracket");
        let crossings = expr.crossings() as u32;
        Self { expr, crossings, bracket, conn, key, trivializable }
    }

    pub fn to_json(&self) -> String {
        let w = Wire {
            expr: self.expr.to_string(),
            c: self.crossings,
            p: self.bracket.p.clone(),
            q: self.bracket.q.clone(),
            conn: self.conn.as_str().to_string(),
            triv: self.trivializable,
            key: hex::encode(&self.key),
        };
        serde_json::to_string(&w).expect("serializable record")
    }

    pub fn from_json(line: &str) -> Result<Self, RecordError> {
        let w: Wire = serde_json::from_str(line)?;
        Ok(Self {
            expr: w.expr.parse()?,
            crossings: w.c,
            bracket: BracketPair::new(w.p, w.q),
            conn: Connectivity::parse(&w.conn).ok_or(RecordError::Conn(w.conn))?,
            key: hex::decode(&w.key)?,
            trivializable: w.triv,
        })
    }
}

/// Canonical continued fractions `[a1; a2, ..., ak]` (last term at least 2
/// unless `k = 1`) with term sum exactly `c`, as fractions `>= 1`.
pub fn rationals_of_cost(c: i64) -> Vec<Frac> {
    fn rec(seq: &mut Vec<i64>, left: i64, out: &mut Vec<Frac>) {
        if left == 0 {
            if seq.len() == 1 || *seq.last().unwrap() >= 2 {
                let mut v = Frac::int(*seq.last().unwrap());
                for &a in seq.iter().rev().skip(1) {
                    v = v.recip().add_int(a);
                }
                out.push(v);
            }
            return;
        }
        for a in 1..=left {
            seq.push(a);
            rec(seq, left - a, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), c, &mut out);
    out
}

struct Opt {
    child: Child,
    cost: i64,
    conn: Connectivity,
    sign: i64,
    /// Twist count of a nested sum (zero for pieces).
    inner_e: i64,
}

/// Raw normal-form nodes grouped by exact crossing number.
pub struct NodeLevels {
    levels: Vec<Vec<Node>>,
}

fn e_allowed(e: i64, seq: &[&Opt]) -> bool {
    if e == 0 {
        return true;
    }
    let s = e.signum();
    seq.iter().all(|o| match o.child {
        Child::Piece(_) => o.sign != -s,
        Child::Rot(_) => o.inner_e.signum() != s,
    })
}

impl NodeLevels {
    /// All nodes of cost up to `max`, built level by level.
    pub fn build(max: i64) -> Self {
        let mut pieces = Vec::new();
        for c in 2..max {
            for v in rationals_of_cost(c) {
                if v == Frac::int(1) {
                    continue;
                }
                for f in [v.recip(), v.recip().neg()] {
                    pieces.push(Opt { child: Child::Piece(f), cost: c, conn: f.connectivity(), sign: f.signum(), inner_e: 0 });
                }
            }
        }
        let mut levels: Vec<Vec<Node>> = vec![Vec::new(); (max + 1).max(1) as usize];
        let mut opts = pieces;
        for c in 2..=max {
            let mut out = Vec::new();
            let mut seq = Vec::new();
            Self::extend(&opts, c, 0, Connectivity::H, &mut seq, &mut out);
            levels[c as usize] = out;
            // Nodes of cost c become available as rotated summands.
            for n in &levels[c as usize] {
                let conn = n.connectivity().expect("loop-free").swap();
                opts.push(Opt { child: Child::Rot(Box::new(n.clone())), cost: c, conn, sign: 0, inner_e: n.e });
            }
            opts.sort_by_key(|o| o.cost);
        }
        Self { levels }
    }

    fn extend<'a>(opts: &'a [Opt], c: i64, spent: i64, conn: Connectivity, seq: &mut Vec<&'a Opt>, out: &mut Vec<Node>) {
        let k = seq.len();
        if k >= 1 && !(k == 1 && matches!(seq[0].child, Child::Piece(_))) {
            let rest = c - spent;
            let choices: &[i64] = if rest == 0 { &[0] } else { &[rest, -rest] };
            for &e in choices {
                if k == 1 && e == 0 {
                    continue;
                }
                if !e_allowed(e, seq) {
                    continue;
                }
                let tail = if e % 2 == 0 { Connectivity::H } else { Connectivity::X };
                if conn.add(tail).1 != 0 {
                    continue;
                }
                out.push(Node { e, kids: seq.iter().map(|o| o.child.clone()).collect() });
            }
        }
        for o in opts {
            if spent + o.cost > c {
                break;
            }
            let (next, loops) = conn.add(o.conn);
            if loops != 0 {
                continue;
            }
            seq.push(o);
            Self::extend(opts, c, spent + o.cost, next, seq, out);
            seq.pop();
        }
    }

    pub fn level(&self, c: i64) -> &[Node] {
        self.levels.get(c as usize).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Canonical representatives of the nonrational classes at each cost.
pub fn nonrational_classes(max: i64) -> Vec<BTreeMap<Vec<u8>, Node>> {
    let levels = NodeLevels::build(max);
    (0..=max)
        .map(|c| {
            let reps: Vec<(Vec<u8>, Node)> = levels.level(c).par_iter().map(|n| {
                let (rep, key) = n.canonical();
                (key, rep)
            }).collect();
            reps.into_iter().collect()
        })
        .collect()
}

/// One record per class of loop-free algebraic tangles with at most
/// `max_crossings` crossings, ordered by crossing number and then key.
pub fn enumerate_tangles(max_crossings: u32, trivializable_only: bool) -> Vec<TangleRecord> {
    let max = max_crossings as i64;
    let classes = nonrational_classes(max);
    let mut out = Vec::new();
    for c in 1..=max {
        let mut level: Vec<(Vec<u8>, TangleExpr)> = rationals_of_cost(c)
            .into_iter()
            .map(|v| (rational_key(v), rational_expr(v)))
            .collect();
        level.extend(classes[c as usize].iter().map(|(k, n)| (k.clone(), n.to_expr())));
        level.sort_by(|a, b| a.0.cmp(&b.0));
        let recs: Vec<TangleRecord> = level
            .into_par_iter()
            .map(|(key, expr)| TangleRecord::from_expr(expr, key))
            .filter(|r| !trivializable_only || r.trivializable)
            .collect();
        out.extend(recs);
    }
    out
}

/// Class counts `(total, trivializable)` for crossing numbers `1..=max`.
pub fn class_counts(records: &[TangleRecord], max: u32) -> Vec<(usize, usize)> {
    (1..=max)
        .map(|c| {
            let at: Vec<_> = records.iter().filter(|r| r.crossings == c).collect();
            (at.len(), at.iter().filter(|r| r.trivializable).count())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_class_counts_double() {
        assert_eq!(rationals_of_cost(1), vec![Frac::int(1)]);
        for c in 2..10 {
            assert_eq!(rationals_of_cost(c).len(), 1 << (c - 2));
        }
    }

    #[test]
    fn small_counts() {
        let recs = enumerate_tangles(6, false);
        let counts = class_counts(&recs, 6);
        assert_eq!(counts.iter().map(|c| c.0).collect::<Vec<_>>(), vec![1, 1, 2, 4, 12, 36]);
        assert_eq!(counts.iter().map(|c| c.1).collect::<Vec<_>>(), vec![1, 1, 2, 4, 12, 30]);
        assert_eq!(recs.len(), 56);
        assert_eq!(enumerate_tangles(6, true).len(), 50);
        assert_eq!(enumerate_tangles(1, false).len(), 1);
    }

    #[test]
    fn json_roundtrip() {
        for r in enumerate_tangles(5, false) {
            let back = TangleRecord::from_json(&r.to_json()).unwrap();
            assert_eq!(back, r);
        }
    }
}
