//! Reidemeister moves on planar diagram codes.
//!
//! A move is addressed by a dart `4x + p` of the code it applies to, so a
//! recorded trace can be replayed on the same sequence of normalized codes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::pd::{links, PDCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    /// Inverse of R2: the arc at `dart` is pushed across the arc at `with`
    /// (over it when `over` is set), adding two crossings.
    Push { with: usize, over: bool },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub dart: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MoveKind::Push { with, over } => {
                let side = if over { "over" } else { "under" };
                write!(f, "R2+@{}.{}/{}.{}/{side}", self.dart / 4, self.dart % 4, with / 4, with % 4)
            }
            k => write!(f, "{k:?}@{}.{}", self.dart / 4, self.dart % 4),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("{0} does not apply")]
    NotApplicable(Move),
}

fn is_over(port: usize) -> bool {
    port % 2 == 1
}

/// Face walk step used throughout: along the arc, then counterclockwise.
fn next_corner(other: &[usize], d: usize) -> usize {
    let e = other[d];
    4 * (e / 4) + (e % 4 + 1) % 4
}

/// Merges arc labels and drops the listed crossings.
fn contract(cr: &[[u32; 4]], drop: &[usize], merges: &[(u32, u32)]) -> PDCode {
    let mut max = cr.iter().flatten().copied().max().unwrap_or(0) as usize;
    max += 1;
    let mut parent: Vec<u32> = (0..max as u32).collect();
    fn find(p: &mut [u32], x: u32) -> u32 {
        let mut r = x;
        while p[r as usize] != r {
            r = p[r as usize];
        }
        let mut y = x;
        while p[y as usize] != r {
            let n = p[y as usize];
            p[y as usize] = r;
            y = n;
        }
        r
    }
    for &(a, b) in merges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[rb as usize] = ra;
        }
    }
    let crossings = cr
        .iter()
        .enumerate()
        .filter(|(x, _)| !drop.contains(x))
        .map(|(_, c)| c.map(|l| find(&mut parent, l)))
        .collect();
    PDCode::new(crossings)
}

/// Kink: ports `p` and `p + 1` of one crossing share an arc.
fn r1(pd: &PDCode, dart: usize) -> Option<PDCode> {
    let (x, p) = (dart / 4, dart % 4);
    let c = pd.crossings.get(x)?;
    let q = (p + 1) % 4;
    if c[p] != c[q] {
        return None;
    }
    let (a, b) = (c[(p + 2) % 4], c[(p + 3) % 4]);
    Some(contract(&pd.crossings, &[x], &[(a, b)]))
}

/// Bigon face starting at `dart` whose two edges pass over-over or under-under.
fn r2(pd: &PDCode, other: &[usize], dart: usize) -> Option<PDCode> {
    let d1 = dart;
    let d2 = next_corner(other, d1);
    if next_corner(other, d2) != d1 {
        return None;
    }
    let (x, y) = (d1 / 4, d2 / 4);
    if x == y {
        return None;
    }
    // Edge 1 runs from (x, i) to (y, j); edge 2 from (y, k) back to (x, l).
    let (i, j) = (d1 % 4, other[d1] % 4);
    let (k, l) = (d2 % 4, other[d2] % 4);
    if is_over(i) != is_over(j) {
        return None;
    }
    let c = &pd.crossings;
    let strand1 = (c[x][(i + 2) % 4], c[y][(j + 2) % 4]);
    let strand2 = (c[y][(k + 2) % 4], c[x][(l + 2) % 4]);
    Some(contract(c, &[x, y], &[strand1, strand2]))
}

/// Triangle face starting at `dart` with a strand above (or below) the
/// other two; every strand swaps the order of its two triangle crossings.
fn r3(pd: &PDCode, other: &[usize], dart: usize) -> Option<PDCode> {
    let d = [dart, next_corner(other, dart), next_corner(other, next_corner(other, dart))];
    if next_corner(other, d[2]) != d[0] {
        return None;
    }
    let xs = [d[0] / 4, d[1] / 4, d[2] / 4];
    if xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2] {
        return None;
    }
    // Edge k runs from dart d[k] to the far end other[d[k]].
    let ends: [(usize, usize); 3] = std::array::from_fn(|k| (d[k], other[d[k]]));
    let top = ends.iter().any(|&(a, b)| is_over(a % 4) && is_over(b % 4));
    if !top {
        return None;
    }
    let c = &pd.crossings;
    let label = |dd: usize| c[dd / 4][dd % 4];
    let opp = |dd: usize| 4 * (dd / 4) + (dd % 4 + 2) % 4;
    let mut out = c.clone();
    for &(a, b) in &ends {
        let e = label(a);
        let (oa, ob) = (label(opp(a)), label(opp(b)));
        out[a / 4][a % 4] = ob;
        out[opp(a) / 4][opp(a) % 4] = e;
        out[b / 4][b % 4] = oa;
        out[opp(b) / 4][opp(b) % 4] = e;
    }
    Some(PDCode::new(out))
}

/// Two arcs on the boundary of one face; the first makes a finger across
/// the face and through the second.
fn push(pd: &PDCode, other: &[usize], da: usize, db: usize, over: bool) -> Option<PDCode> {
    if da == db || da >= other.len() || db >= other.len() {
        return None;
    }
    let mut d = next_corner(other, da);
    while d != da && d != db {
        d = next_corner(other, d);
    }
    if d != db {
        return None;
    }
    let c = &pd.crossings;
    let (la, lb) = (c[da / 4][da % 4], c[db / 4][db % 4]);
    if la == lb {
        return None;
    }
    // The face lies right of each arc walked towards `other[d]`, so walking
    // back from `other[d]` to `d` it lies on the left. Along `a` the finger
    // meets X1 then X2, along `b` it meets X2 then X1.
    let top = c.iter().flatten().copied().max().unwrap_or(0);
    let (a2, a3, b2, b3) = (top + 1, top + 2, top + 3, top + 4);
    let (a1, b1) = (la, lb);
    let mut out = c.clone();
    out[da / 4][da % 4] = a3;
    out[db / 4][db % 4] = b3;
    if over {
        out.push([b2, a2, b3, a1]);
        out.push([b1, a2, b2, a3]);
    } else {
        out.push([a1, b2, a2, b3]);
        out.push([a3, b1, a2, b2]);
    }
    Some(PDCode::new(out))
}

/// Pushes between every ordered pair of distinct arcs sharing a face.
pub fn push_moves(pd: &PDCode) -> Vec<Move> {
    let Ok(faces) = pd.faces() else { return Vec::new() };
    let mut out = Vec::new();
    for f in &faces {
        for &da in f {
            for &db in f {
                if da != db && pd.crossings[da / 4][da % 4] != pd.crossings[db / 4][db % 4] {
                    for over in [true, false] {
                        out.push(Move { kind: MoveKind::Push { with: db, over }, dart: da });
                    }
                }
            }
        }
    }
    out
}

/// Applies `m` and renormalizes; rejects results that are not single planar curves.
pub fn apply_move(pd: &PDCode, m: Move) -> Result<PDCode, MoveError> {
    let err = MoveError::NotApplicable(m);
    if m.dart >= 4 * pd.len() {
        return Err(err);
    }
    let other = links(&pd.crossings).map_err(|_| err.clone())?;
    let raw = match m.kind {
        MoveKind::R1 => r1(pd, m.dart),
        MoveKind::R2 => r2(pd, &other, m.dart),
        MoveKind::R3 => r3(pd, &other, m.dart),
        MoveKind::Push { with, over } => push(pd, &other, m.dart, with, over),
    }
    .ok_or_else(|| err.clone())?;
    let norm = raw.normalized().map_err(|_| err.clone())?;
    if !norm.is_planar() {
        return Err(err);
    }
    Ok(norm)
}

/// Moves that remove crossings, then crossing-preserving triangle moves.
pub fn available_moves(pd: &PDCode) -> (Vec<Move>, Vec<Move>) {
    let Ok(other) = links(&pd.crossings) else { return (Vec::new(), Vec::new()) };
    let mut reducing = Vec::new();
    let mut flat = Vec::new();
    // Bigons and triangles are addressed by their least dart only.
    let least = |dart: usize, sides: usize| {
        let mut d = dart;
        for _ in 1..sides {
            d = next_corner(&other, d);
            if d < dart {
                return false;
            }
        }
        true
    };
    for dart in 0..4 * pd.len() {
        if r1(pd, dart).is_some() {
            reducing.push(Move { kind: MoveKind::R1, dart });
        }
        if least(dart, 2) && r2(pd, &other, dart).is_some() {
            reducing.push(Move { kind: MoveKind::R2, dart });
        }
        if least(dart, 3) && r3(pd, &other, dart).is_some() {
            flat.push(Move { kind: MoveKind::R3, dart });
        }
    }
    (reducing, flat)
}
