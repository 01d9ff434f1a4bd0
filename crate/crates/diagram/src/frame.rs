//! Strand tracing through a polyhedron whose vertices carry tangle matchings.

use polyhedra_gen::PlanarEmbedding;
use skein_core::Connectivity;

/// Partner position inside a vertex. Positions follow the rotation:
/// 0 = NW, 1 = SW, 2 = SE, 3 = NE.
pub fn strand_partner(conn: Connectivity, i: usize) -> usize {
    match conn {
        Connectivity::H => 3 - i,
        Connectivity::V => i ^ 1,
        Connectivity::X => (i + 2) % 4,
    }
}

/// Closed curves after placing `conn(v)` at every vertex.
pub fn count_curves(e: &PlanarEmbedding, conn: impl Fn(usize) -> Connectivity) -> usize {
    let n = e.dart_count();
    let mut pos = vec![0usize; n];
    for ds in e.rotation() {
        for (i, &d) in ds.iter().enumerate() {
            pos[d] = i;
        }
    }
    let mut seen = vec![false; n];
    let mut curves = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        curves += 1;
        let mut d = start;
        while !seen[d] {
            let v = e.vertex_of(d);
            let out = e.rotation()[v][strand_partner(conn(v), pos[d])];
            seen[d] = true;
            seen[out] = true;
            d = e.partner(out);
        }
    }
    curves
}

/// Loop counts of all `2^v` smoothing states, bit `k` set meaning vertex
/// `k` takes the ∞ smoothing.
#[derive(Clone, Debug)]
pub struct PolyFrame {
    pub embedding: PlanarEmbedding,
    pub loops: Vec<u8>,
    /// States with exactly one loop; the only ones surviving at `zeta`.
    pub one_loop: Vec<u32>,
}

impl PolyFrame {
    pub fn new(embedding: PlanarEmbedding) -> Self {
        let v = embedding.vertex_count();
        assert!(v < 32, "too many vertices for a state table");
        let loops: Vec<u8> = (0u32..1 << v)
            .map(|s| {
                let l = count_curves(&embedding, |k| if s >> k & 1 == 0 { Connectivity::H } else { Connectivity::V });
                l as u8
            })
            .collect();
        let one_loop = (0u32..1 << v).filter(|&s| loops[s as usize] == 1).collect();
        Self { embedding, loops, one_loop }
    }

    pub fn vertex_count(&self) -> usize {
        self.embedding.vertex_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyhedra_gen::octahedron;

    #[test]
    fn octahedron_straight_ahead_walks() {
        assert_eq!(count_curves(&octahedron(), |_| Connectivity::X), 3);
    }

    #[test]
    fn state_loops_are_bounded_by_faces() {
        let f = PolyFrame::new(octahedron());
        assert!(f.loops.iter().all(|&l| (1..=8).contains(&l)));
        assert!(!f.one_loop.is_empty());
    }
}
