use proptest::prelude::*;

use eulerian::catalan::binom_product_holds;
use eulerian::operators::{
    apply_s, apply_s2, apply_stilde, constant_c_first, constant_c_second, euler_inverse, euler_inverse_interp,
    euler_poly2, leading_coeff_check,
};
use eulerian::scalar::{int, rational, sign};
use eulerian::{QPoly, Rational};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| rational(n, d))
}

fn poly_up_to(deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rational(), 0..=deg + 1).prop_map(QPoly::from_coeffs)
}

fn nonzero_poly(deg: usize) -> impl Strategy<Value = QPoly> {
    poly_up_to(deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_up_to(6), b in poly_up_to(6), c in poly_up_to(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPoly::zero());
    }

    #[test]
    fn interpolation_round_trip(p in poly_up_to(10)) {
        let deg = p.degree().unwrap_or(0);
        let pts: Vec<(Rational, Rational)> = (0..=deg as i64)
            .map(|k| { let x = rational(2 * k - 3, 2); (x.clone(), p.eval(&x)) })
            .collect();
        prop_assert_eq!(QPoly::interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn shift_inverse(p in poly_up_to(12), a in small_rational()) {
        prop_assert_eq!(p.shift(&a).shift(&-a.clone()), p.clone());
        prop_assert_eq!(p.shift(&a).eval(&int(0)), p.eval(&a));
    }

    #[test]
    fn sqrt_of_square(q in nonzero_poly(8)) {
        let sq = q.pow(2);
        let root = sq.sqrt().unwrap();
        prop_assert!(root == q || root == -q);
    }

    #[test]
    fn euler_inverse_law(p in poly_up_to(40)) {
        prop_assert_eq!(apply_stilde(&euler_inverse(&p)), p.clone());
        prop_assert_eq!(euler_inverse(&apply_stilde(&p)), p);
    }

    #[test]
    fn euler_routes_agree(p in nonzero_poly(25)) {
        let trace = euler_inverse_interp(&p).unwrap();
        prop_assert_eq!(&trace.preimage, &euler_inverse(&p));
        prop_assert_eq!(trace.f_values[0].clone(), Rational::from(int(0)));
        for k in 0..trace.f_values.len() - 1 {
            let lhs = trace.f_values[k + 1].clone();
            prop_assert_eq!(lhs, p.eval(&int(k as i64)) - trace.f_values[k].clone());
        }
        prop_assert_eq!(&trace.g + &trace.b.scale(&trace.c), trace.preimage);
        prop_assert_eq!(constant_c_first(&p).unwrap(), constant_c_second(&p).unwrap());
    }

    #[test]
    fn s_and_stilde(p in poly_up_to(15)) {
        prop_assert_eq!(apply_stilde(&p), apply_s(&p).shift(&rational(1, 2)));
        prop_assert_eq!(apply_s2(&p), apply_s(&apply_s(&p)));
    }

    #[test]
    fn discrete_s2_kernel(c0 in small_rational(), c1 in small_rational(), n in 1i64..=50) {
        let b = |k: i64| sign::<Rational>(k) * (c1.clone() * int(k) + c0.clone());
        prop_assert_eq!(b(n + 1) + int(2) * b(n) + b(n - 1), Rational::from(int(0)));
    }

    #[test]
    fn leading_coefficient_identity(coeffs in prop::collection::vec(small_rational(), 7), lead in small_rational()) {
        prop_assume!(lead != int(0));
        let mut all = coeffs;
        all.push(lead);
        prop_assert!(leading_coeff_check(&QPoly::from_coeffs(all)).unwrap());
    }

    #[test]
    fn binomial_product_identity(k in -20i64..60, n in 1i64..15, nu in 0i64..20) {
        prop_assert!(binom_product_holds(k, nu, n, &rational(nu - 1, n)));
    }
}

#[test]
fn second_order_euler() {
    for n in 0..12 {
        let xn = QPoly::monomial(int(1), n);
        assert_eq!(euler_poly2(n), euler_inverse(&euler_inverse(&xn)));
    }
}

#[test]
fn printed_binomial_weight_has_a_counterexample() {
    assert!(!binom_product_holds(2, 1, 1, &rational(1, 1)));
}
