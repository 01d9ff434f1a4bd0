//! Normal forms against compositional brackets on random expressions.

use proptest::prelude::*;
use skein_core::{BracketPair, LaurentPoly};
use tangle_gen::{normalize, Form, TangleExpr};

fn arb_expr() -> impl Strategy<Value = TangleExpr> {
    let leaf = prop_oneof![
        (-3i64..=3).prop_filter("nonzero", |n| *n != 0).prop_map(TangleExpr::twist),
        (-3i64..=3).prop_filter("nonzero", |n| *n != 0).prop_map(TangleExpr::vtwist),
    ];
    leaf.prop_recursive(4, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| TangleExpr::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| TangleExpr::mul(a, b)),
            inner.prop_map(TangleExpr::rot),
        ]
    })
}

/// Bracket of a crossingless normal form.
fn crossingless(f: &Form) -> BracketPair {
    match f {
        Form::Rational(g) if g.is_infinite() => BracketPair::infinity_tangle(),
        _ => BracketPair::zero_tangle(),
    }
}

/// Equal up to a unit `(-A^3)^k` coming from at most `kinks` Reidemeister-1 kinks.
fn equal_up_to_kinks(a: &BracketPair, b: &BracketPair, kinks: i64) -> bool {
    (-3 * kinks..=3 * kinks).step_by(3).any(|k| {
        let u = LaurentPoly::monomial(if k % 2 == 0 { 1 } else { -1 }, k);
        a.p == &b.p * &u && a.q == &b.q * &u
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn normal_form_keeps_the_bracket(e in arb_expr()) {
        let Ok(f) = normalize(&e) else { return Ok(()) };
        let b = e.bracket();
        let rebuilt = f.to_expr().map(|x| x.bracket()).unwrap_or_else(|| crossingless(&f));
        prop_assert!(equal_up_to_kinks(&b, &rebuilt, e.crossings() as i64), "{e}: {b:?} vs {rebuilt:?}");
        if let Some(x) = f.to_expr() {
            prop_assert!(x.crossings() <= e.crossings());
        }
    }

    #[test]
    fn rejections_come_from_loops_or_infinity(e in arb_expr()) {
        if normalize(&e).is_err() {
            prop_assert!(e.connectivity().is_none() || has_infinity(&e), "{e}");
        }
    }
}

/// Some subexpression reduces to the crossingless ∞-tangle, either directly or
/// as a 0-tangle that is rotated or transposed as the left factor of a product.
fn has_infinity(e: &TangleExpr) -> bool {
    let here = matches!(normalize(e), Ok(Form::Rational(g)) if g.is_infinite());
    let zero = |x: &TangleExpr| matches!(normalize(x), Ok(Form::Rational(g)) if g.num() == 0);
    here || match e {
        TangleExpr::Add(a, b) => has_infinity(a) || has_infinity(b),
        TangleExpr::Mul(a, b) => zero(a) || has_infinity(a) || has_infinity(b),
        TangleExpr::Rot(a) => zero(a) || has_infinity(a),
        TangleExpr::Twist { .. } => false,
    }
}
