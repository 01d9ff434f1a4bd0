//! Expansion and moves checked against brute-force invariants computed
//! straight from planar diagram codes.

mod support;

use std::sync::Arc;

use diagram_engine::{bracket_laurent, component_count, determinant, enumerate_diagrams, FilledDiagram, Orientation, TanglePool};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplifier::{apply_move, available_moves, expand_to_pd, push_moves, MoveKind, PDCode};
use support::{as_poly, goeritz_determinant, mul, normalized_bracket, state_sum, Poly};
use tangle_gen::{TangleExpr, TangleRecord};

fn knots(c: u32) -> Vec<FilledDiagram> {
    let polys: Vec<_> = polyhedra_gen::enumerate_polyhedra(c as usize).into_iter().map(Arc::new).collect();
    let pool = TanglePool::new(tangle_gen::enumerate_tangles(c, false)).unwrap();
    enumerate_diagrams(c, &polys, &pool).into_iter().filter(|d| component_count(d) == 1).collect()
}

fn closure(s: &str) -> FilledDiagram {
    let e: TangleExpr = s.parse().unwrap();
    let key = tangle_gen::canonical_key(&e).unwrap();
    FilledDiagram::closure(Arc::new(TangleRecord::from_expr(e, key)), Orientation::D0)
}

#[test]
fn state_sum_oracle_on_standard_knots() {
    let trefoil: PDCode = "X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2".parse().unwrap();
    let b = state_sum(&trefoil);
    let left = Poly::from([(5, -1), (-3, -1), (-7, 1)]);
    let right = Poly::from([(-5, -1), (3, -1), (7, 1)]);
    assert!(b == left || b == right, "{b:?}");
    let kink: PDCode = "X 1 1 2 2".parse().unwrap();
    assert_eq!(normalized_bracket(&kink), Poly::from([(0, 1)]));
    assert_eq!(goeritz_determinant(&trefoil), 3);
}

#[test]
fn expansion_matches_diagram_brackets() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for c in 3..=10 {
        let mut ds = knots(c);
        if c > 8 {
            ds.shuffle(&mut rng);
            ds.truncate(150);
        }
        for d in ds {
            let pd = expand_to_pd(&d).unwrap();
            assert_eq!(pd.len() as u32, d.crossings);
            assert!(pd.is_planar());
            assert_eq!(pd.component_count().unwrap(), 1);
            assert_eq!(state_sum(&pd), as_poly(&bracket_laurent(&d)), "{pd}");
            checked += 1;
        }
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn determinants_match_goeritz() {
    let mut checked = 0;
    for c in 3..=8 {
        for d in knots(c) {
            let pd = expand_to_pd(&d).unwrap();
            let det = determinant(&d).unwrap();
            assert_eq!(BigInt::from(goeritz_determinant(&pd)), det, "{pd}");
            assert!(det.bit(0), "even determinant {det} for a knot");
            checked += 1;
        }
    }
    assert!(checked >= 1000, "{checked}");
}

#[test]
fn moves_preserve_normalized_bracket() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut ds = knots(7);
    ds.shuffle(&mut rng);
    ds.truncate(40);
    ds.push(closure("3"));
    ds.push(closure("(1 + (-1 + 1))"));
    ds.push(closure("1"));
    ds.push(closure("(r(-2) + 2)"));
    let (mut applied, mut kinks) = (0, 0);
    for d in ds {
        let pd = expand_to_pd(&d).unwrap();
        let inv = normalized_bracket(&pd);
        let (red, flat) = available_moves(&pd);
        let mut pushes = push_moves(&pd);
        pushes.shuffle(&mut rng);
        pushes.truncate(6);
        let raw = state_sum(&pd);
        for m in red.into_iter().chain(flat).chain(pushes) {
            let next = apply_move(&pd, m).unwrap();
            assert_eq!(normalized_bracket(&next), inv, "{m} on\n{pd}");
            let after = state_sum(&next);
            if m.kind == MoveKind::R1 {
                kinks += 1;
                let up = mul(&after, &Poly::from([(3, -1)]));
                let down = mul(&after, &Poly::from([(-3, -1)]));
                assert!(up == raw || down == raw, "{m} on\n{pd}");
            } else {
                assert_eq!(after, raw, "{m} on\n{pd}");
            }
            applied += 1;
        }
    }
    assert!(applied > 100, "{applied}");
    assert!(kinks > 0);
}
