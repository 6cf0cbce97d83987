use proptest::prelude::*;

use adsfam::arith::q;
use adsfam::geometry::{embed, invert, on_cone};
use adsfam::{compute_coefficients, EnvelopingAlgebra, PolyLambda, RatFunc, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| q(a, b))
}

fn poly() -> impl Strategy<Value = PolyLambda> {
    prop::collection::vec(rational(), 0..4).prop_map(PolyLambda::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::normalize(n, d).ok())
}

proptest! {
    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn normalize_is_idempotent(n in poly(), d in poly()) {
        if let Ok(r) = RatFunc::normalize(n, d) {
            let again = RatFunc::normalize(r.num().clone(), r.den().clone()).unwrap();
            prop_assert_eq!(&again, &r);
            prop_assert!(r.den().is_monic());
            prop_assert!(r.num().gcd(r.den()).is_one() || r.num().is_zero());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), x in rational()) {
        if let (Ok(va), Ok(vb)) = (a.eval_at(&x), b.eval_at(&x)) {
            prop_assert_eq!((&a + &b).eval_at(&x).unwrap(), &va + &vb);
            prop_assert_eq!((&a * &b).eval_at(&x).unwrap(), &va * &vb);
        }
    }

    #[test]
    fn polynomial_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn embedding_round_trip(w in prop::collection::vec(rational(), 3..6)) {
        let p = embed(&w);
        prop_assert!(on_cone(&p));
        prop_assert_eq!(invert(&p).unwrap(), w);
    }

    #[test]
    fn enveloping_product_is_associative(
        a in prop::collection::vec(0usize..10, 1..3),
        b in prop::collection::vec(0usize..10, 1..3),
        c in prop::collection::vec(0usize..10, 1..3),
    ) {
        let alg = EnvelopingAlgebra::new(4).unwrap();
        let word = |letters: &[usize]| {
            letters.iter().try_fold(alg.one(), |acc, &i| {
                let g = alg.lie().basis()[i].name;
                alg.multiply(&acc, &alg.generator(g))
            }).unwrap()
        };
        let (x, y, z) = (word(&a), word(&b), word(&c));
        let left = alg.multiply(&alg.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn family_coefficients_satisfy_recursion(n in 4usize..9, order in 0u32..9) {
        let c = compute_coefficients(n, order).unwrap();
        prop_assert!(c.satisfies_recursion());
        prop_assert_eq!(c.coeffs.len(), order as usize / 2 + 1);
        prop_assert!(c.coeffs.last().unwrap().is_one());
    }
}
