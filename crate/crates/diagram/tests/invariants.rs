use std::sync::Arc;

use diagram_engine::{
    bracket_cyclotomic, bracket_laurent, component_count, determinant, enumerate_diagrams, is_candidate, FilledDiagram,
    Orientation, Source, TanglePool,
};
use polyhedra_gen::{PlanarEmbedding, PolyhedronRecord};

fn inputs(c: u32) -> (Vec<Arc<PolyhedronRecord>>, TanglePool) {
    let polys = polyhedra_gen::enumerate_polyhedra(c as usize).into_iter().map(Arc::new).collect();
    (polys, TanglePool::new(tangle_gen::enumerate_tangles(c, false)).unwrap())
}

/// Orientation-preserving automorphisms as (vertex image, rotation offset) per vertex.
fn automorphisms(e: &PlanarEmbedding) -> Vec<Vec<(usize, usize)>> {
    let n = e.dart_count();
    let mut pos = vec![(0, 0); n];
    for (v, r) in e.rotation().iter().enumerate() {
        for (i, &d) in r.iter().enumerate() {
            pos[d] = (v, i);
        }
    }
    let next = |d: usize| {
        let (v, i) = pos[d];
        e.rotation()[v][(i + 1) % 4]
    };
    let mut out = Vec::new();
    'target: for t in 0..n {
        let mut phi = vec![usize::MAX; n];
        let mut stack = vec![(e.rotation()[0][0], t)];
        while let Some((d, img)) = stack.pop() {
            if phi[d] != usize::MAX {
                if phi[d] != img {
                    continue 'target;
                }
                continue;
            }
            phi[d] = img;
            stack.push((next(d), next(img)));
            stack.push((e.partner(d), e.partner(img)));
        }
        let mut seen = vec![false; n];
        for &img in &phi {
            if img == usize::MAX || seen[img] {
                continue 'target;
            }
            seen[img] = true;
        }
        out.push(
            e.rotation()
                .iter()
                .map(|r| {
                    let (w, k) = pos[phi[r[0]]];
                    (w, k)
                })
                .collect(),
        );
    }
    out
}

#[test]
fn zeta_evaluation_commutes_with_the_state_sum() {
    for c in 1..=9 {
        let (polys, pool) = inputs(c);
        for d in enumerate_diagrams(c, &polys, &pool) {
            assert_eq!(bracket_laurent(&d).eval_zeta8(), bracket_cyclotomic(&d));
        }
    }
}

#[test]
fn corpus_diagrams_are_knots_with_odd_determinants() {
    for c in 1..=9 {
        let (polys, pool) = inputs(c);
        for d in enumerate_diagrams(c, &polys, &pool) {
            assert_eq!(component_count(&d), 1);
            assert_eq!(d.crossings, c);
            assert!(determinant(&d).unwrap().bit(0));
        }
    }
}

#[test]
fn polyhedron_symmetries_preserve_invariants() {
    let (polys, pool) = inputs(8);
    let mut checked = 0;
    for d in enumerate_diagrams(8, &polys, &pool) {
        let Source::Fill { poly, assignment } = &d.source else { continue };
        let autos = automorphisms(&poly.embedding);
        assert!(!autos.is_empty());
        let (b, det, cand) = (bracket_laurent(&d), determinant(&d).unwrap(), is_candidate(&d));
        for a in &autos {
            let mut moved = assignment.clone();
            for (v, &(w, k)) in a.iter().enumerate() {
                // Corner i of v lands on corner i + k of w: k quarter turns.
                let (t, o) = &assignment[v];
                let o = if k % 2 == 1 { if *o == Orientation::D0 { Orientation::D90 } else { Orientation::D0 } } else { *o };
                moved[w] = (t.clone(), o);
            }
            let e = FilledDiagram::fill(poly.clone(), moved).unwrap();
            assert_eq!(bracket_laurent(&e), b);
            assert_eq!(determinant(&e).unwrap(), det);
            assert_eq!(is_candidate(&e), cand);
            checked += 1;
        }
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn octahedron_has_twenty_four_rotations() {
    assert_eq!(automorphisms(&polyhedra_gen::octahedron()).len(), 24);
}
