//! Rotation systems of 4-valent maps on the sphere.

use std::collections::VecDeque;

/// Darts are `0..4v`. `rotation[v]` lists the darts at vertex `v` in
/// counterclockwise order; `pairing[d]` is the other end of the edge of `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rotation: Vec<[usize; 4]>,
    pairing: Vec<usize>,
    vert: Vec<usize>,
    pos: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("dart lists do not cover 0..4v exactly once")]
    DartCover,
    #[error("pairing is not a fixed-point-free involution")]
    Pairing,
}

impl PlanarEmbedding {
    pub fn new(rotation: Vec<[usize; 4]>, pairing: Vec<usize>) -> Result<Self, EmbeddingError> {
        let n = 4 * rotation.len();
        if pairing.len() != n {
            return Err(EmbeddingError::DartCover);
        }
        let mut vert = vec![usize::MAX; n];
        let mut pos = vec![0; n];
        for (v, ds) in rotation.iter().enumerate() {
            for (i, &d) in ds.iter().enumerate() {
                if d >= n || vert[d] != usize::MAX {
                    return Err(EmbeddingError::DartCover);
                }
                vert[d] = v;
                pos[d] = i;
            }
        }
        for (d, &e) in pairing.iter().enumerate() {
            if e >= n || e == d || pairing[e] != d {
                return Err(EmbeddingError::Pairing);
            }
        }
        Ok(Self { rotation, pairing, vert, pos })
    }

    /// Standard layout: dart `4v + i` is the `i`-th dart of vertex `v`.
    pub fn from_pairing(pairing: Vec<usize>) -> Result<Self, EmbeddingError> {
        let v = pairing.len() / 4;
        Self::new((0..v).map(|v| [4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3]).collect(), pairing)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn dart_count(&self) -> usize {
        self.pairing.len()
    }

    pub fn rotation(&self) -> &[[usize; 4]] {
        &self.rotation
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        self.vert[d]
    }

    pub fn partner(&self, d: usize) -> usize {
        self.pairing[d]
    }

    /// Next dart counterclockwise (`step = 1`) or clockwise (`step = 3`).
    pub fn turn(&self, d: usize, step: usize) -> usize {
        self.rotation[self.vert[d]][(self.pos[d] + step) % 4]
    }

    /// Position of `d` counted from `base` at the same vertex.
    pub fn offset(&self, base: usize, d: usize, step: usize) -> usize {
        let k = (self.pos[d] + 4 - self.pos[base]) % 4;
        if step == 1 {
            k
        } else {
            (4 - k) % 4
        }
    }

    /// Face boundary walks; each face is listed by its darts.
    pub fn face_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut f = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                f.push(d);
                d = self.turn(self.pairing[d], 1);
            }
            faces.push(f);
        }
        faces
    }

    pub fn faces(&self) -> Vec<usize> {
        self.face_cycles().iter().map(Vec::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&[]) == 1
    }

    /// `V - E + F = 2` for a connected map.
    pub fn is_spherical(&self) -> bool {
        let v = self.vertex_count() as i64;
        let e = (self.dart_count() / 2) as i64;
        self.is_connected() && v - e + self.faces().len() as i64 == 2
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            let mut nb: Vec<usize> = self.rotation[v].iter().map(|&d| self.vert[self.pairing[d]]).collect();
            if nb.contains(&v) {
                return false;
            }
            nb.sort_unstable();
            nb.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Number of connected components after deleting the edges of the given darts.
    fn components_without(&self, cut: &[usize]) -> usize {
        let v = self.vertex_count();
        let mut seen = vec![false; v];
        let mut comps = 0;
        for s in 0..v {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &d in &self.rotation[x] {
                    let e = self.pairing[d];
                    if cut.contains(&d) || cut.contains(&e) {
                        continue;
                    }
                    let y = self.vert[e];
                    if !seen[y] {
                        seen[y] = true;
                        q.push_back(y);
                    }
                }
            }
        }
        comps
    }

    /// Whether deleting at most two edges disconnects the graph.
    pub fn has_two_edge_cut(&self) -> bool {
        let edges: Vec<usize> = (0..self.dart_count()).filter(|&d| d < self.pairing[d]).collect();
        for (i, &a) in edges.iter().enumerate() {
            if self.components_without(&[a]) > 1 {
                return true;
            }
            for &b in &edges[i + 1..] {
                if self.components_without(&[a, b]) > 1 {
                    return true;
                }
            }
        }
        false
    }

    /// Breadth-first relabelling trace from `root`, turning in direction `step`.
    fn bfs_code(&self, root: usize, step: usize, best: Option<&[u8]>) -> Option<Vec<u8>> {
        let v = self.vertex_count();
        let mut label = vec![u8::MAX; v];
        let mut entry = vec![0usize; v];
        let mut order = Vec::with_capacity(v);
        label[self.vert[root]] = 0;
        entry[0] = root;
        order.push(self.vert[root]);
        let mut code = Vec::with_capacity(8 * v);
        let mut smaller = false;
        for i in 0..v {
            let mut d = entry[i];
            for _ in 0..4 {
                let e = self.pairing[d];
                let w = self.vert[e];
                if label[w] == u8::MAX {
                    label[w] = order.len() as u8;
                    entry[order.len()] = e;
                    order.push(w);
                }
                let lw = label[w] as usize;
                code.push(label[w]);
                code.push(self.offset(entry[lw], e, step) as u8);
                if let (Some(b), false) = (best, smaller) {
                    let n = code.len();
                    match code[n - 2..].cmp(&b[n - 2..n]) {
                        std::cmp::Ordering::Greater => return None,
                        std::cmp::Ordering::Less => smaller = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                d = self.turn(d, step);
            }
        }
        Some(code)
    }

    /// Least trace over every root dart and both orientations; equal exactly
    /// for maps related by a sphere homeomorphism, reflections included.
    pub fn canonical_code(&self) -> Vec<u8> {
        assert!(self.is_connected(), "canonical code needs a connected map");
        let mut best: Option<Vec<u8>> = None;
        for root in 0..self.dart_count() {
            for step in [1, 3] {
                if let Some(c) = self.bfs_code(root, step, best.as_deref()) {
                    if best.as_ref().is_none_or(|b| c < *b) {
                        best = Some(c);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }

    /// The same map with vertex `v` renamed `perm[v]` and each rotation
    /// cyclically shifted by `shift[v]`.
    pub fn relabel(&self, perm: &[usize], shift: &[usize]) -> PlanarEmbedding {
        let n = self.dart_count();
        let mut dart_map = vec![0; n];
        for v in 0..self.vertex_count() {
            for i in 0..4 {
                dart_map[self.rotation[v][i]] = 4 * perm[v] + (i + 4 - shift[v] % 4) % 4;
            }
        }
        let mut pairing = vec![0; n];
        for d in 0..n {
            pairing[dart_map[d]] = dart_map[self.pairing[d]];
        }
        PlanarEmbedding::from_pairing(pairing).expect("relabelling preserves validity")
    }

    /// Mirror image: every rotation reversed.
    pub fn reflect(&self) -> PlanarEmbedding {
        let rotation = self.rotation.iter().map(|r| [r[0], r[3], r[2], r[1]]).collect();
        PlanarEmbedding::new(rotation, self.pairing.clone()).expect("reflection preserves validity")
    }
}

/// The octahedron as a 4-valent map.
pub fn octahedron() -> PlanarEmbedding {
    // Vertices 0 (top), 1..4 (equator, counterclockwise seen from the top), 5 (bottom).
    let mut rot: Vec<Vec<usize>> = vec![vec![1, 2, 3, 4]];
    for i in 1..=4 {
        let prev = if i == 1 { 4 } else { i - 1 };
        let next = if i == 4 { 1 } else { i + 1 };
        rot.push(vec![0, prev, 5, next]);
    }
    rot.push(vec![4, 3, 2, 1]);
    from_neighbor_lists(&rot)
}

/// Builds a map of a simple graph from counterclockwise neighbour lists.
pub fn from_neighbor_lists(nb: &[Vec<usize>]) -> PlanarEmbedding {
    let mut pairing = vec![usize::MAX; 4 * nb.len()];
    for (v, list) in nb.iter().enumerate() {
        assert_eq!(list.len(), 4, "vertex {v} is not 4-valent");
        for (i, &w) in list.iter().enumerate() {
            let j = nb[w].iter().position(|&x| x == v).expect("symmetric adjacency");
            pairing[4 * v + i] = 4 * w + j;
        }
    }
    PlanarEmbedding::from_pairing(pairing).expect("valid neighbour lists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_shape() {
        let o = octahedron();
        assert!(o.is_spherical());
        assert!(o.is_simple());
        assert_eq!(o.faces(), vec![3; 8]);
        assert!(!o.has_two_edge_cut());
    }

    #[test]
    fn code_ignores_labels_and_reflection() {
        let o = octahedron();
        let c = o.canonical_code();
        let r = o.relabel(&[3, 5, 0, 2, 4, 1], &[1, 0, 3, 2, 2, 1]);
        assert_eq!(r.canonical_code(), c);
        assert_eq!(o.reflect().canonical_code(), c);
    }
}
