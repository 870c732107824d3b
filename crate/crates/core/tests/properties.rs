use proptest::prelude::*;

use prolate_core::genfun::{gen_poly, taction_image, vector_of};
use prolate_core::operators::{pascal_apply, OperatorKind, OperatorSpec};
use prolate_core::ring::{legendre_symbol, pochhammer};
use prolate_core::{q, ExactVector, ModInt, Modulus, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn vector(max_order: usize) -> impl Strategy<Value = ExactVector> {
    (0..=max_order).prop_flat_map(|n| prop::collection::vec(-9i64..=9, n + 1).prop_map(|v| ExactVector::from_ints(&v)))
}

fn modint_triple() -> impl Strategy<Value = (ModInt, ModInt, ModInt)> {
    (
        prop::sample::select(vec![(3u64, 1u32), (3, 4), (5, 2), (7, 3), (101, 1)]),
        any::<i64>(),
        any::<i64>(),
        any::<i64>(),
    )
        .prop_map(|((p, n), a, b, c)| {
            let m = Modulus::new(p, n).unwrap();
            (ModInt::new(a, m), ModInt::new(b, m), ModInt::new(c, m))
        })
}

proptest! {
    #[test]
    fn pochhammer_splits(x in small_rational(), j in 0usize..8, k in 0usize..8) {
        let shifted = &x + &Rational::from(j as i64);
        prop_assert_eq!(pochhammer(&x, j + k), pochhammer(&x, j) * pochhammer(&shifted, k));
    }

    #[test]
    fn modint_ring_laws((a, b, c) in modint_triple()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, ModInt::zero(a.modulus()));
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(a * inv, ModInt::one(a.modulus()));
        } else {
            prop_assert!(!a.is_unit());
        }
    }

    #[test]
    fn legendre_is_multiplicative(a in -500i64..500, b in -500i64..500, p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 97, 101])) {
        let ab = legendre_symbol(a * b, p).unwrap();
        prop_assert_eq!(ab, legendre_symbol(a, p).unwrap() * legendre_symbol(b, p).unwrap());
    }

    #[test]
    fn matrix_free_matches_dense(v in vector(12)) {
        let n = v.order();
        for kind in [OperatorKind::Pascal, OperatorKind::Jacobi, OperatorKind::BinomialForward, OperatorKind::BinomialAdjoint] {
            let op = OperatorSpec::new(kind, n);
            let dense = op.dense();
            let expected: Vec<Rational> = dense
                .iter()
                .map(|row| row.iter().zip(v.entries()).map(|(a, b)| a * b).sum())
                .collect();
            prop_assert_eq!(op.apply(&v).unwrap(), ExactVector::new(expected), "{:?}", kind);
        }
    }

    #[test]
    fn gen_poly_round_trips(v in vector(20)) {
        prop_assert_eq!(vector_of(&gen_poly(&v), v.order()), v);
    }

    #[test]
    fn taction_matches_pascal(v in vector(20)) {
        let n = v.order();
        prop_assert_eq!(taction_image(n, &v).unwrap(), gen_poly(&pascal_apply(n, &v).unwrap()));
    }
}
