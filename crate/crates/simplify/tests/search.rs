use std::sync::Arc;

use diagram_engine::{is_candidate, plan_batches, run_batch, FilledDiagram, Orientation, TanglePool};
use simplifier::{expand_to_pd, replay, simplify, PDCode, Status, DEFAULT_BUDGET};
use tangle_gen::{Axis, TangleExpr, TangleRecord};

fn record(e: TangleExpr) -> Arc<TangleRecord> {
    let key = tangle_gen::canonical_key(&e).unwrap_or_default();
    Arc::new(TangleRecord::from_expr(e, key))
}

fn closure(s: &str) -> FilledDiagram {
    FilledDiagram::closure(record(s.parse().unwrap()), Orientation::D0)
}

fn mirror(e: &TangleExpr) -> TangleExpr {
    match e {
        TangleExpr::Twist { n, axis } => TangleExpr::Twist { n: -n, axis: *axis },
        TangleExpr::Add(a, b) => TangleExpr::add(mirror(a), mirror(b)),
        TangleExpr::Mul(a, b) => TangleExpr::mul(mirror(a), mirror(b)),
        TangleExpr::Rot(a) => TangleExpr::rot(mirror(a)),
    }
}

#[test]
fn one_twist_closure_is_a_kink() {
    let pd = expand_to_pd(&closure("1")).unwrap();
    assert_eq!(pd.len(), 1);
    let [a, b, c, d] = pd.crossings[0];
    assert!((a == b && c == d) || (b == c && d == a), "{pd}");
    assert_eq!(pd.writhe().abs(), 1);
}

#[test]
fn kinks_and_bigons_are_confirmed() {
    let kink: PDCode = "X 1 1 2 2".parse().unwrap();
    let out = simplify(&kink, DEFAULT_BUDGET);
    assert_eq!(out.status, Status::Confirmed);
    assert_eq!(out.trace.len(), 1);

    let pd = expand_to_pd(&closure("(1 + (-1 + 1))")).unwrap();
    let out = simplify(&pd, DEFAULT_BUDGET);
    assert_eq!(out.status, Status::Confirmed);
    assert_eq!(out.final_crossings, 0);
    assert!(replay(&pd, &out.trace).unwrap().is_empty());
}

#[test]
fn knotted_diagrams_stay_unresolved() {
    for s in ["3", "(r(-2) + 2)", "5"] {
        let pd = expand_to_pd(&closure(s)).unwrap();
        let out = simplify(&pd, 2_000);
        assert_eq!(out.status, Status::Unresolved, "{s}");
        assert!(out.final_crossings >= 3, "{s}");
        assert!(out.nodes_explored <= 2_000);
        assert_eq!(replay(&pd, &out.trace).unwrap().len(), out.final_crossings);
    }
}

#[test]
fn writhe_of_twist_closures() {
    for n in [1i64, 3, 5, -3] {
        let pd = expand_to_pd(&closure(&n.to_string())).unwrap();
        assert_eq!(pd.writhe().abs(), n.abs(), "{n}");
        let m = expand_to_pd(&closure(&(-n).to_string())).unwrap();
        assert_eq!(m.writhe(), -pd.writhe(), "{n}");
    }
    let pair = expand_to_pd(&closure("(1 + (-1 + 1))")).unwrap();
    assert_eq!(pair.writhe(), 1);
    // The standard figure-eight diagram has writhe zero.
    assert_eq!(expand_to_pd(&closure("(r(-2) + 2)")).unwrap().writhe(), 0);
}

#[test]
fn every_small_candidate_is_confirmed_with_a_replayable_trace() {
    for c in 3..=9u32 {
        let polys: Vec<_> = polyhedra_gen::enumerate_polyhedra(c as usize).into_iter().map(Arc::new).collect();
        let pool = TanglePool::new(tangle_gen::enumerate_tangles(c, false)).unwrap();
        for id in plan_batches(c, &polys) {
            for (d, _) in run_batch(&id, c, &polys, &pool).candidates {
                let pd = expand_to_pd(&d).unwrap();
                let out = simplify(&pd, DEFAULT_BUDGET);
                assert_eq!(out.status, Status::Confirmed, "{}", id.label(&polys));
                assert!(replay(&pd, &out.trace).unwrap().is_empty());
            }
        }
    }
}

#[test]
fn candidacy_is_mirror_invariant() {
    let pool = tangle_gen::enumerate_tangles(7, false);
    for t in &pool {
        let m = record(mirror(&t.expr));
        for o in Orientation::BOTH {
            let d = FilledDiagram::closure(Arc::new(t.clone()), o);
            let dm = FilledDiagram::closure(m.clone(), o);
            match (is_candidate(&d), is_candidate(&dm)) {
                (Some(b), Some(bm)) => assert_eq!(b.mirror(), bm, "{}", t.expr),
                (None, None) => {}
                _ => panic!("mirror disagrees for {}", t.expr),
            }
        }
    }
    let v = TangleExpr::Twist { n: 2, axis: Axis::Vertical };
    assert!(matches!(mirror(&v), TangleExpr::Twist { n: -2, axis: Axis::Vertical }));
}
