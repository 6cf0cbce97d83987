use super::*;
use crate::arith::q;
use crate::pbw::Weight;

fn poly(c: &[i64]) -> PolyLambda {
    PolyLambda::from_ints(c)
}

#[test]
fn coefficient_examples() {
    assert_eq!(compute_coefficients(7, 0).unwrap().coeffs, vec![poly(&[1])]);
    let c = compute_coefficients(5, 2).unwrap();
    assert_eq!(c.coeffs, vec![poly(&[-2, -2]), poly(&[1])]);
    for n in 4..=8 {
        let c = compute_coefficients(n, 4).unwrap();
        let k = n as i64;
        let a1 = poly(&[-2 * (k - 5), -4]);
        let a0 = (&poly(&[k - 5, 2]) * &poly(&[k - 7, 2])).scale(&q(1, 3));
        assert_eq!(c.coeffs, vec![a0, a1, poly(&[1])]);
    }
}

#[test]
fn odd_coefficients_follow_their_recursion() {
    // order 3: (1)(3) b0 + (n - 3 + 2L - 4 + 2) b1 = 0
    let c = compute_coefficients(5, 3).unwrap();
    assert_eq!(c.parity, Parity::Odd);
    assert_eq!(c.coeffs, vec![poly(&[0, -2]).scale(&q(1, 3)), poly(&[1])]);
    assert_eq!(compute_coefficients(4, 1).unwrap().coeffs, vec![poly(&[1])]);
}

#[test]
fn recursion_holds_and_is_polynomial() {
    for n in 4..=7 {
        for order in 0..=8 {
            let c = compute_coefficients(n, order).unwrap();
            assert!(c.satisfies_recursion(), "n={n} N={order}");
            assert!(!c.perturbed(0).satisfies_recursion() || c.coeffs.len() == 1);
        }
    }
}

#[test]
fn family_n4_order2() {
    let alg = ambient_algebra(4).unwrap();
    let fam = assemble(&alg, &compute_coefficients(4, 2).unwrap()).unwrap();
    let delta = alg.dalembertian(1);
    let t2 = alg.pow(&alg.generator(Generator::YMinus(2)), 2).unwrap();
    let expected = t2.scale(&RatFunc::poly(poly(&[-1, -2]))).add(&delta).unwrap();
    assert_eq!(fam.element, expected);
    assert_eq!(fam.coeffs.render(), "(-1 - 2*L)*T^2 + Delta");
}

#[test]
fn family_order1_is_t_and_graded() {
    let alg = ambient_algebra(5).unwrap();
    let fam = assemble(&alg, &compute_coefficients(5, 1).unwrap()).unwrap();
    assert_eq!(fam.element, alg.generator(Generator::YMinus(3)));
    for order in 0..=5 {
        let fam = assemble(&alg, &compute_coefficients(5, order).unwrap()).unwrap();
        assert_eq!(alg.weight(&fam.element), Weight::Homogeneous(-(order as i32)));
        assert!(fam.element.terms().keys().all(|m| m.degree() == order));
    }
}

#[test]
fn equivariance_small_cases() {
    for (n, order) in [(4, 2), (5, 3), (4, 3)] {
        let r = verify_equivariance(n, order).unwrap();
        assert!(r.pass(), "{r:?}");
    }
    let r = verify_equivariance(4, 2).unwrap();
    assert_eq!(r.negative_controls.len(), 2);
}

#[test]
fn uniqueness_small_cases() {
    let r = verify_uniqueness(4, 2).unwrap();
    assert_eq!(r.unknowns, 10);
    assert_eq!(r.dimension, 1);
    assert!(r.proportional_to_family);
    let r = verify_uniqueness(4, 1).unwrap();
    assert_eq!(r.unknowns, 4);
    assert!(r.pass());
}

#[test]
fn parity_small_cases() {
    for order in [2, 3] {
        let checks = verify_parity(4, order).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }
}

#[test]
fn centralizer_small_cases() {
    let r = verify_centralizer(4, 2).unwrap();
    assert_eq!((r.unknowns, r.dimension), (10, 2));
    assert!(r.pass());
    assert_eq!(verify_centralizer(5, 2).unwrap().dimension, 2);
}

#[test]
fn too_small() {
    assert_eq!(compute_coefficients(3, 1).unwrap_err(), Error::DimensionTooSmall(3));
}
