mod common;

use common::regular_poly;
use germ_core::{weierstrass_prepare, Monomial, Order, Polynomial, Rational, Var};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn preparation_invariants(
        (f, order) in ((1usize..=3).prop_flat_map(|n| regular_poly(n, 5)), 5u32..=8)
    ) {
        let n = f.var_count();
        let var = Var::from_index(n - 1);
        let report = germ_core::regular_order(&f, var).unwrap();
        let Order::Finite(d) = report.order else { unreachable!() };
        prop_assume!(d <= order);
        let w = weierstrass_prepare(&f, var, order).unwrap();

        prop_assert_eq!(w.degree, d);
        let back = w.multiply_back();
        prop_assert_eq!(back.body(), &f.truncate(order));
        prop_assert!(w.coefficients.iter().all(|e| e.constant_term().is_zero()));
        prop_assert!(w.coefficients.iter().all(|e| !e.body().involves(var)));

        let c = f.coefficient(&Monomial::var(n, n - 1, d));
        prop_assert_eq!(w.unit.constant_term(), c);

        // w(0, …, 0, y) = y^d
        let mut axis = vec![Polynomial::zero(1); n];
        axis[n - 1] = Polynomial::var(1, Var::z(1));
        let restricted = w.polynomial().body().substitute(&axis).unwrap();
        prop_assert_eq!(restricted, Polynomial::var(1, Var::z(1)).pow(d));

        prop_assert_eq!(weierstrass_prepare(&f, var, order).unwrap(), w);
    }
}

#[test]
fn preparation_with_nonconstant_unit() {
    // the unit is not constant, so w only agrees with f after truncation
    let f: Polynomial = germ_core::parse_poly("z2^2 + z1*z2^3 - z1^2 + z2^3", None).unwrap();
    let w = weierstrass_prepare(&f, Var::z(2), 8).unwrap();
    assert_eq!(w.multiply_back().body(), &f.truncate(8));
    assert!(!w.unit.body().is_zero());
    assert_ne!(w.unit.constant_term(), Rational::zero());
}
