use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use weylcheb_core::chebyshev::{fundamental_values, is_congruence_homogeneous, poly_t, poly_u};
use weylcheb_core::exp_ring::{character_exp_sum, decompose_into_c, exact_divide, exp_sum, multiply};
use weylcheb_core::lie::{congruence_number, omega_to_e};
use weylcheb_core::orbit_functions::{eval_c, eval_s};
use weylcheb_core::{weyl, AlphaPoint, ExpSum, OrbitKind, Rank, Weight};

fn dominant(n: usize, bound: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=bound, n).prop_map(|c| Weight::from_coords(c).unwrap())
}

fn any_weight(n: usize) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-4i64..=4, n).prop_map(|c| Weight::from_coords(c).unwrap())
}

fn point(n: usize) -> impl Strategy<Value = AlphaPoint> {
    prop::collection::vec(0.0f64..1.0, n).prop_map(move |c| AlphaPoint::new(Rank::new(n).unwrap(), c).unwrap())
}

/// Three orbit sums of one rank, scaled by integers from `scales`.
fn c_triple_scaled(scales: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = (ExpSum, ExpSum, ExpSum)> {
    (1usize..=3).prop_flat_map(move |n| {
        let scales = scales.clone();
        let sum = move || {
            (dominant(n, 2), scales.clone())
                .prop_map(|(l, k)| exp_sum(&l, OrbitKind::C).unwrap().scale(&BigInt::from(k)))
        };
        (sum(), sum(), sum())
    })
}

fn c_triple() -> impl Strategy<Value = (ExpSum, ExpSum, ExpSum)> {
    c_triple_scaled(-3..=3)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws((a, b, c) in c_triple()) {
        let ab = multiply(&a, &b).unwrap();
        prop_assert_eq!(&ab, &multiply(&b, &a).unwrap());
        prop_assert_eq!(multiply(&ab, &c).unwrap(), multiply(&a, &multiply(&b, &c).unwrap()).unwrap());
        let left = multiply(&a, &b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(left, ab.add(&multiply(&a, &c).unwrap()).unwrap());
        prop_assert_eq!(multiply(&a, &ExpSum::one(a.rank())).unwrap(), a.clone());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn products_stay_invariant_and_decompose((a, b, _) in c_triple_scaled(1..=3)) {
        let p = multiply(&a, &b).unwrap();
        prop_assert!(p.is_w_invariant());
        let dec = decompose_into_c(&p).unwrap();
        prop_assert!(dec.terms().all(|(_, m)| *m > BigInt::from(0)));
        prop_assert_eq!(dec.expand(), p.clone());
        prop_assert!(decompose_into_c(&p.scale(&BigInt::from(-1))).is_err());
    }

    #[test]
    fn json_round_trip((a, _, _) in c_triple()) {
        prop_assert_eq!(ExpSum::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn orbit_points_fold_back(mu in (1usize..=4).prop_flat_map(any_weight)) {
        let (dom, _) = weyl::dominant_representative(&mu);
        prop_assert!(dom.is_dominant());
        let orbit = weyl::orbit(&dom).unwrap();
        prop_assert!(orbit.points().iter().any(|p| p.weight == mu));
        prop_assert_eq!(orbit.points()[0].weight.clone(), dom.clone());
        prop_assert_eq!(orbit.len() as u64 * orbit.stabilizer_order(), dom.rank().weyl_order());
        for p in orbit.points() {
            prop_assert_eq!(&weyl::dominant_representative(&p.weight).0, &dom);
            prop_assert_eq!(congruence_number(&p.weight), congruence_number(&dom));
        }
    }

    #[test]
    fn reflections_flip_signs_of_generic_orbits(l in (1usize..=4).prop_flat_map(|n| dominant(n, 3)), i in 1usize..=4) {
        prop_assume!(l.is_strictly_dominant() && i <= l.rank().get());
        let orbit = weyl::orbit(&l).unwrap();
        for p in orbit.points() {
            let r = weyl::reflect_weight(i, &p.weight).unwrap();
            let q = orbit.points().iter().find(|q| q.weight == r).unwrap();
            prop_assert_eq!(q.sign, p.sign.flip());
        }
    }

    #[test]
    fn c_is_invariant_and_conjugate_symmetric(
        (l, x) in (1usize..=3).prop_flat_map(|n| (dominant(n, 3), point(n))),
    ) {
        let c = eval_c(&l, &x).unwrap();
        for i in 1..=l.rank().get() {
            prop_assert!(close(eval_c(&l, &x.reflect(i).unwrap()).unwrap(), c, 1e-12));
        }
        prop_assert!(close(eval_c(&l, &x.negate()).unwrap(), c.conj(), 1e-12));
    }

    #[test]
    fn t_polynomial_evaluates_to_c(
        (l, x) in (1usize..=3).prop_flat_map(|n| (dominant(n, 2), point(n))),
    ) {
        let p = poly_t(&l).unwrap();
        prop_assert!(is_congruence_homogeneous(&p, &l));
        let v = p.evaluate(&fundamental_values(&x).unwrap()).unwrap();
        prop_assert!(close(v, eval_c(&l, &x).unwrap(), 1e-9));
    }

    #[test]
    fn u_polynomial_is_the_character(
        (l, x) in (1usize..=3).prop_flat_map(|n| (dominant(n, 2), point(n))),
    ) {
        let rho = Weight::rho(l.rank());
        let lr = l.checked_add(&rho).unwrap();
        let s_lr = exp_sum(&lr, OrbitKind::S).unwrap();
        let s_rho = exp_sum(&rho, OrbitKind::S).unwrap();
        let chi = character_exp_sum(&l).unwrap();
        prop_assert_eq!(multiply(&chi, &s_rho).unwrap(), s_lr.clone());
        prop_assert_eq!(exact_divide(&s_lr, &s_rho).unwrap(), chi.clone());
        prop_assert_eq!(chi.coeff(&l), BigInt::from(1));

        let den = eval_s(&rho, &x).unwrap().value;
        prop_assume!(den.norm() > 1e-3);
        let ratio = eval_s(&lr, &x).unwrap().value / den;
        let v = poly_u(&l).unwrap().evaluate(&fundamental_values(&x).unwrap()).unwrap();
        prop_assert!(close(v, ratio, 1e-7));
    }

    #[test]
    fn e_coordinates_sum_to_zero(l in (1usize..=5).prop_flat_map(any_weight)) {
        let e = omega_to_e(&l);
        let total = e.coords().iter().fold(num_rational::Rational64::from_integer(0), |a, b| a + b);
        prop_assert_eq!(total, num_rational::Rational64::from_integer(0));
    }
}
