//! Exhaustive search over 4-valent spherical maps.
//!
//! Maps are grown one edge at a time from a root vertex. The dart with the
//! least index that is still unmatched is either joined to a fresh vertex
//! (entering at that vertex's dart 0) or to another open dart. Every rooted
//! map has exactly one such construction, so the search is complete; planar
//! growth only joins two open darts that lie on the same open face.

use std::collections::BTreeMap;

use crate::embedding::PlanarEmbedding;

const OPEN: usize = usize::MAX;

struct Search {
    n: usize,
    partner: Vec<usize>,
    verts: usize,
    found: BTreeMap<Vec<u8>, PlanarEmbedding>,
}

impl Search {
    fn new(n: usize) -> Self {
        Self { n, partner: vec![OPEN; 4 * n], verts: 1, found: BTreeMap::new() }
    }

    /// Face walk step; an open dart acts as a pendant edge.
    fn step(&self, d: usize) -> usize {
        let e = if self.partner[d] == OPEN { d } else { self.partner[d] };
        (e & !3) | ((e + 1) & 3)
    }

    /// Face index per dart, plus for each face its dart count and whether it is open.
    fn faces(&self, face_of: &mut [usize]) -> Vec<(usize, bool)> {
        let m = 4 * self.verts;
        face_of[..m].fill(OPEN);
        let mut info = Vec::new();
        for s in 0..m {
            if face_of[s] != OPEN {
                continue;
            }
            let f = info.len();
            let (mut len, mut open) = (0, false);
            let mut d = s;
            while face_of[d] == OPEN {
                face_of[d] = f;
                len += 1;
                open |= self.partner[d] == OPEN;
                d = self.step(d);
            }
            info.push((len, open));
        }
        info
    }

    fn adjacent(&self, u: usize, w: usize) -> bool {
        (4 * u..4 * u + 4).any(|d| self.partner[d] != OPEN && self.partner[d] / 4 == w)
    }

    fn run(&mut self) {
        let mut face_of = vec![OPEN; 4 * self.n];
        self.rec(&mut face_of);
    }

    fn rec(&mut self, face_of: &mut [usize]) {
        let m = 4 * self.verts;
        let Some(d) = (0..m).find(|&d| self.partner[d] == OPEN) else {
            if self.verts == self.n {
                self.accept();
            }
            return;
        };
        let info = self.faces(face_of);
        // With no fresh vertices left, every open face must pair off its darts.
        if self.verts == self.n {
            let mut count = vec![0usize; info.len()];
            for x in 0..m {
                if self.partner[x] == OPEN {
                    count[face_of[x]] += 1;
                }
            }
            if count.iter().any(|c| c % 2 == 1) {
                return;
            }
        }

        let fd = face_of[d];
        let targets: Vec<usize> = (d + 1..m)
            .filter(|&x| self.partner[x] == OPEN && face_of[x] == fd && x / 4 != d / 4 && !self.adjacent(d / 4, x / 4))
            .collect();
        let before = info.len();

        if self.verts < self.n {
            let w = self.verts;
            self.partner[d] = 4 * w;
            self.partner[4 * w] = d;
            self.verts += 1;
            self.rec(face_of);
            self.verts -= 1;
            self.partner[d] = OPEN;
            self.partner[4 * w] = OPEN;
        }

        for x in targets {
            self.partner[d] = x;
            self.partner[x] = d;
            let after = self.faces(face_of);
            let ok = after.len() == before + 1 && after.iter().all(|&(len, open)| open || len >= 3);
            if ok {
                self.rec(face_of);
            }
            self.partner[d] = OPEN;
            self.partner[x] = OPEN;
        }
    }

    fn accept(&mut self) {
        let emb = PlanarEmbedding::from_pairing(self.partner.clone()).expect("complete pairing");
        if emb.has_two_edge_cut() {
            return;
        }
        let code = emb.canonical_code();
        self.found.entry(code).or_insert(emb);
    }
}

/// Non-thin polyhedra with exactly `v` vertices, keyed by canonical code.
pub fn polyhedra_with_vertices(v: usize) -> BTreeMap<Vec<u8>, PlanarEmbedding> {
    if v < 2 {
        return BTreeMap::new();
    }
    let mut s = Search::new(v);
    s.run();
    s.found
}
