mod common;

use common::{nonzero_poly, point, poly};
use germ_core::{Order, Point, Var};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_then_eval_is_eval_at_sum(
        (f, p, q) in (1usize..=3).prop_flat_map(|n| (poly(n, 5, 6), point(n), point(n)))
    ) {
        let shifted = f.shift(&p).unwrap();
        prop_assert_eq!(shifted.eval(&q).unwrap(), f.eval(&(&p + &q)).unwrap());
    }

    #[test]
    fn shift_is_undone_by_opposite_shift(
        (f, p) in (1usize..=3).prop_flat_map(|n| (poly(n, 5, 6), point(n)))
    ) {
        prop_assert_eq!(f.shift(&p).unwrap().shift(&-&p).unwrap(), f);
    }
}

proptest! {
    #[test]
    fn derivative_is_linear_and_leibniz(
        (f, g, i) in (1usize..=3).prop_flat_map(|n| (poly(n, 4, 5), poly(n, 4, 5), 0..n))
    ) {
        let v = Var::from_index(i);
        let d = |p: &germ_core::Polynomial| p.derivative(v).unwrap();
        prop_assert_eq!(d(&(&f + &g)), &d(&f) + &d(&g));
        prop_assert_eq!(d(&(&f * &g)), &(&d(&f) * &g) + &(&f * &d(&g)));
    }

    #[test]
    fn variable_order_adds_under_products(
        (f, g, i) in (1usize..=3).prop_flat_map(|n| (nonzero_poly(n, 4, 5), nonzero_poly(n, 4, 5), 0..n))
    ) {
        let v = Var::from_index(i);
        let (Order::Finite(a), Order::Finite(b)) = (f.variable_order(v).unwrap(), g.variable_order(v).unwrap()) else {
            unreachable!("nonzero polynomials have finite order");
        };
        prop_assert_eq!((&f * &g).variable_order(v).unwrap(), Order::Finite(a + b));
    }

    #[test]
    fn monomial_unit_split_reconstructs(f in (1usize..=3).prop_flat_map(|n| nonzero_poly(n, 5, 5))) {
        if let Some((alpha, unit)) = f.monomial_unit_split().unwrap() {
            prop_assert_eq!(unit.mul_monomial(&alpha), f.clone());
            prop_assert!(!unit.eval(&Point::origin(f.var_count())).unwrap().is_zero());
        }
    }
}
