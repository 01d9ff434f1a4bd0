use num_bigint::BigInt;
use proptest::prelude::*;
use skein_core::{closure_bracket, delta, denominator_bracket, BracketPair, Cyclotomic8, LaurentPoly};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-6i64..6, prop::collection::vec(-40i64..40, 0..7))
        .prop_map(|(lo, cs)| LaurentPoly::from_parts(lo, cs.into_iter().map(BigInt::from).collect()))
}

fn cyc() -> impl Strategy<Value = Cyclotomic8> {
    prop::array::uniform4(-50i64..50).prop_map(Cyclotomic8::from_i64)
}

fn pair() -> impl Strategy<Value = BracketPair> {
    (poly(), poly()).prop_map(|(p, q)| BracketPair::new(p, q))
}

/// Naive evaluation of `sum c_k zeta^k` by repeated multiplication by zeta.
fn eval_by_powers(a: &LaurentPoly) -> Cyclotomic8 {
    let zinv = &Cyclotomic8::zeta_pow(7);
    let mut acc = Cyclotomic8::zero();
    for (e, c) in a.terms() {
        let mut z = Cyclotomic8::one();
        for _ in 0..e.unsigned_abs() {
            z = if e > 0 { &z * &Cyclotomic8::zeta() } else { &z * zinv };
        }
        let scalar = Cyclotomic8::new([c.clone(), BigInt::from(0), BigInt::from(0), BigInt::from(0)]);
        acc = &acc + &(&scalar * &z);
    }
    acc
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn laurent_results_are_normalized(a in poly(), b in poly()) {
        for r in [&a + &b, &a - &b, &a * &b] {
            if r.is_zero() {
                prop_assert_eq!(r.lo(), 0);
            } else {
                prop_assert!(r.coeffs()[0] != BigInt::from(0));
                prop_assert!(r.coeffs()[r.coeffs().len() - 1] != BigInt::from(0));
            }
        }
    }

    #[test]
    fn cyclotomic_ring_laws(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly()) {
        prop_assert_eq!((&a + &b).eval_zeta8(), &a.eval_zeta8() + &b.eval_zeta8());
        prop_assert_eq!((&a * &b).eval_zeta8(), &a.eval_zeta8() * &b.eval_zeta8());
        prop_assert_eq!(a.eval_zeta8(), eval_by_powers(&a));
    }

    #[test]
    fn mirror_evaluates_to_conjugate(a in poly()) {
        prop_assert_eq!(a.mirror().eval_zeta8(), a.eval_zeta8().conj());
    }

    #[test]
    fn bracket_addition_laws(s in pair(), t in pair(), u in pair()) {
        prop_assert_eq!(s.add(&t).add(&u), s.add(&t.add(&u)));
        prop_assert_eq!(BracketPair::zero_tangle().add(&s), s.clone());
        prop_assert_eq!(s.add(&BracketPair::zero_tangle()), s.clone());
        prop_assert_eq!(BracketPair::infinity_tangle().mul(&s), s.clone());
    }

    #[test]
    fn bracket_symmetries(s in pair()) {
        prop_assert_eq!(s.rotate90().rotate90(), s.clone());
        prop_assert_eq!(s.transpose().transpose(), s.clone());
        prop_assert_eq!(s.mirror().mirror(), s.clone());
        prop_assert_eq!(s.mirror().rotate90(), s.rotate90().mirror());
        prop_assert_eq!(closure_bracket(&s.rotate90()), denominator_bracket(&s));
        prop_assert_eq!(denominator_bracket(&s), &s.p + &(&s.q * &delta()));
    }
}
