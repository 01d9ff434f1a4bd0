//! Planar diagram codes.
//!
//! Each crossing lists four arc labels counterclockwise, starting with the
//! incoming under-strand. Ports 0 and 2 are the under-strand, 1 and 3 the
//! over-strand.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PDCode {
    pub crossings: Vec<[u32; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PdError {
    #[error("line {0}: expected `X a b c d`")]
    Syntax(usize),
    #[error("arc {0} appears {1} times")]
    LabelCount(u32, usize),
    #[error("code has {0} components")]
    Components(usize),
}

/// Dart-level view: `other[4x + p]` is the port at the far end of the arc at `(x, p)`.
pub(crate) fn links(cr: &[[u32; 4]]) -> Result<Vec<usize>, PdError> {
    let mut occ: Vec<(u32, usize)> = cr.iter().flatten().copied().zip(0..).collect();
    occ.sort_unstable();
    let mut other = vec![0; occ.len()];
    let mut i = 0;
    while i < occ.len() {
        let l = occ[i].0;
        let run = occ[i..].iter().take_while(|o| o.0 == l).count();
        if run != 2 {
            return Err(PdError::LabelCount(l, run));
        }
        let (a, b) = (occ[i].1, occ[i + 1].1);
        other[a] = b;
        other[b] = a;
        i += 2;
    }
    Ok(other)
}

/// Relabels by walking the strand that enters `start` (a dart). Arcs are
/// numbered 1..2n in walking order, the arc entering `start` first; each
/// tuple starts at the under-port the walk enters by. Returns `None` if the
/// walk misses part of the diagram.
fn walk_code(cr: &[[u32; 4]], other: &[usize], start: usize) -> Option<Vec<[u32; 4]>> {
    let n = cr.len();
    let mut label = vec![0u32; 4 * n];
    let mut entered = vec![false; 4 * n];
    let mut entered_under = vec![usize::MAX; n];
    let mut d = start;
    for next in 1..=2 * n as u32 {
        if entered[d] {
            return None;
        }
        entered[d] = true;
        let (x, p) = (d / 4, d % 4);
        if p % 2 == 0 {
            entered_under[x] = p;
        }
        label[d] = next;
        label[other[d]] = next;
        d = other[4 * x + (p + 2) % 4];
    }
    if d != start || entered_under.contains(&usize::MAX) {
        return None;
    }
    let mut out: Vec<[u32; 4]> =
        (0..n).map(|x| std::array::from_fn(|k| label[4 * x + (entered_under[x] + k) % 4])).collect();
    out.sort_unstable();
    Some(out)
}

/// Walk from `start`, one entry per step: the crossing's rank in order of
/// first visit, then for a first visit whether it is the over-strand, for
/// a second visit the port offset from the first (negated under reflection).
/// Stops as soon as the code exceeds `best`; returns whether it beat it.
fn gauss_walk(
    other: &[usize],
    start: usize,
    reflect: bool,
    best: &[u32],
    cur: &mut Vec<u32>,
    first: &mut [u32],
    first_port: &mut [usize],
) -> bool {
    let steps = other.len() / 2;
    cur.clear();
    first.fill(u32::MAX);
    let mut seen = 0u32;
    let mut tied = !best.is_empty();
    let mut d = start;
    for _ in 0..steps {
        let (x, p) = (d / 4, d % 4);
        let v = if first[x] == u32::MAX {
            first[x] = seen;
            first_port[x] = p;
            seen += 1;
            8 * first[x] + (p % 2) as u32
        } else {
            let off = (p + 4 - first_port[x]) % 4;
            let off = if reflect { (4 - off) % 4 } else { off };
            8 * first[x] + 4 + off as u32
        };
        if tied {
            let b = best[cur.len()];
            if v > b {
                return false;
            }
            tied = v == b;
        }
        cur.push(v);
        d = other[4 * x + (p + 2) % 4];
    }
    if d != start || (seen as usize) * 4 != other.len() {
        return false;
    }
    best.is_empty() || !tied
}

impl PDCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Self {
        Self { crossings }
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Every arc label appears exactly twice.
    pub fn validate(&self) -> Result<(), PdError> {
        links(&self.crossings).map(|_| ())
    }

    /// Number of closed curves traced straight through crossings.
    pub fn component_count(&self) -> Result<usize, PdError> {
        let other = links(&self.crossings)?;
        let mut seen = vec![false; other.len()];
        let mut comps = 0;
        for s in 0..other.len() {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                let out = 4 * (d / 4) + (d % 4 + 2) % 4;
                seen[out] = true;
                d = other[out];
            }
        }
        Ok(comps)
    }

    /// Relabels arcs 1..2n along the knot, starting from the under-strand
    /// entering the first crossing; crossings sorted by their labels.
    pub fn normalized(&self) -> Result<PDCode, PdError> {
        if self.is_empty() {
            return Ok(PDCode::default());
        }
        let other = links(&self.crossings)?;
        walk_code(&self.crossings, &other, 0)
            .map(PDCode::new)
            .ok_or_else(|| PdError::Components(self.component_count().unwrap_or(0)))
    }

    /// Least walk code over every starting dart and the planar reflection.
    /// Two codes agree exactly when the diagrams differ by relabelling,
    /// reorientation or reflection of the sphere.
    pub fn canonical_key(&self) -> Vec<u32> {
        let Ok(other) = links(&self.crossings) else { return Vec::new() };
        let mut best: Vec<u32> = Vec::new();
        let mut cur = Vec::with_capacity(other.len() / 2);
        let mut first = vec![u32::MAX; self.len()];
        let mut first_port = vec![0usize; self.len()];
        for start in 0..other.len() {
            for reflect in [false, true] {
                if gauss_walk(&other, start, reflect, &best, &mut cur, &mut first, &mut first_port) {
                    std::mem::swap(&mut best, &mut cur);
                }
            }
        }
        best
    }

    /// Sum of crossing signs. A crossing is positive when the over-strand
    /// runs from port 3 to port 1 while the under-strand runs from 0 to 2.
    pub fn writhe(&self) -> i64 {
        let Ok(other) = links(&self.crossings) else { return 0 };
        if other.is_empty() {
            return 0;
        }
        // Walk from an under-port so every crossing's under-strand is entered
        // at port 0 or 2; the sign flips when it is entered at 2.
        let mut under_in = vec![0usize; self.len()];
        let mut over_in = vec![0usize; self.len()];
        let mut d = 0;
        for _ in 0..other.len() / 2 {
            let (x, p) = (d / 4, d % 4);
            if p % 2 == 0 {
                under_in[x] = p;
            } else {
                over_in[x] = p;
            }
            d = other[4 * x + (p + 2) % 4];
        }
        (0..self.len()).map(|x| if (over_in[x] + 4 - under_in[x]) % 4 == 3 { 1 } else { -1 }).sum()
    }

    /// Faces as cycles of darts `4x + p`, each followed by the next dart
    /// counterclockwise at the far end of its arc.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>, PdError> {
        let other = links(&self.crossings)?;
        let mut seen = vec![false; other.len()];
        let mut faces = Vec::new();
        for s in 0..other.len() {
            if seen[s] {
                continue;
            }
            let mut f = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                f.push(d);
                let e = other[d];
                d = 4 * (e / 4) + (e % 4 + 1) % 4;
            }
            faces.push(f);
        }
        Ok(faces)
    }

    /// Connected and spherical: `faces = n + 2`.
    pub fn is_planar(&self) -> bool {
        match self.faces() {
            Ok(f) => self.is_empty() || f.len() == self.len() + 2,
            Err(_) => false,
        }
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X {a} {b} {c} {d}")?;
        }
        Ok(())
    }
}

impl FromStr for PDCode {
    type Err = PdError;
    fn from_str(s: &str) -> Result<Self, PdError> {
        let mut crossings = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            if it.next() != Some("X") {
                return Err(PdError::Syntax(i + 1));
            }
            let v: Vec<u32> = it.map(|t| t.parse().map_err(|_| PdError::Syntax(i + 1))).collect::<Result<_, _>>()?;
            let [a, b, c, d] = v[..] else { return Err(PdError::Syntax(i + 1)) };
            crossings.push([a, b, c, d]);
        }
        let pd = PDCode { crossings };
        pd.validate()?;
        Ok(pd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> PDCode {
        "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2".parse().unwrap()
    }

    #[test]
    fn text_roundtrip() {
        let t = trefoil();
        assert_eq!(t.to_string().parse::<PDCode>().unwrap(), t);
        assert!("X 1 2 3".parse::<PDCode>().is_err());
        assert!(matches!("X 1 1 2 3".parse::<PDCode>(), Err(PdError::LabelCount(..))));
    }

    #[test]
    fn trefoil_basics() {
        let t = trefoil();
        assert_eq!(t.component_count().unwrap(), 1);
        assert!(t.is_planar());
        assert_eq!(t.writhe().abs(), 3);
        let n = t.normalized().unwrap();
        assert_eq!(n.canonical_key(), t.canonical_key());
        assert_eq!(n.normalized().unwrap(), n);
        assert_eq!(n.crossings[0][0], 1);
    }
}
