mod common;

use common::{nonzero_rational, poly, rational, z};
use germ_core::{discriminant, resultant, Point, Polynomial, Rational, Var};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Coefficients in `var` of `f` after substituting `base` for the other
/// variables, index = power.
fn specialize(f: &Polynomial, var: Var, base: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); f.degree_in(var).unwrap_or(0) as usize + 1];
    for (m, c) in f.terms() {
        let mut v = c.clone();
        for (i, &e) in m.exponents().iter().enumerate() {
            if i != var.index() {
                v *= num_traits::pow(base[i].clone(), e as usize);
            }
        }
        out[m.exponent(var.index()) as usize] += v;
    }
    out
}

/// Determinant over Q by Gaussian elimination.
fn det_q(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for r in k + 1..n {
            let factor = &a[r][k] / &a[k][k];
            let pivot = a[k].clone();
            for (entry, p) in a[r].iter_mut().zip(&pivot).skip(k) {
                *entry -= &factor * p;
            }
        }
    }
    det
}

/// Resultant of two dense univariate polynomials from their Sylvester matrix.
fn univariate_resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let size = df + dg;
    let mut m = vec![vec![Rational::zero(); size]; size];
    for r in 0..dg {
        for k in 0..=df {
            m[r][r + k] = f[df - k].clone();
        }
    }
    for r in 0..df {
        for k in 0..=dg {
            m[dg + r][r + k] = g[dg - k].clone();
        }
    }
    det_q(m)
}

/// A polynomial with positive degree in the last variable.
fn in_last(n: usize) -> impl Strategy<Value = Polynomial> {
    (poly(n, 3, 4), 1u32..=3, nonzero_rational())
        .prop_map(move |(f, d, c)| &f + &Polynomial::term(germ_core::Monomial::var(n, n - 1, d), c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn specialization_commutes_with_resultant(
        (f, g, points) in (2usize..=3).prop_flat_map(|n| (
            in_last(n),
            in_last(n),
            prop::collection::vec(prop::collection::vec(rational(), n), 20),
        ))
    ) {
        let n = f.var_count();
        let var = Var::from_index(n - 1);
        let res = resultant(&f, &g, var).unwrap();
        prop_assert!(!res.involves(var));
        let (df, dg) = (f.degree_in(var).unwrap() as usize, g.degree_in(var).unwrap() as usize);
        for base in points {
            let fs = specialize(&f, var, &base);
            let gs = specialize(&g, var, &base);
            if fs[df].is_zero() || gs[dg].is_zero() {
                continue;
            }
            let expected = univariate_resultant(&fs, &gs);
            prop_assert_eq!(res.eval(&Point::new(base)).unwrap(), expected);
        }
    }

    #[test]
    fn resultant_swaps_with_sign((f, g) in (2usize..=3).prop_flat_map(|n| (in_last(n), in_last(n)))) {
        let var = Var::from_index(f.var_count() - 1);
        let (df, dg) = (f.degree_in(var).unwrap(), g.degree_in(var).unwrap());
        let fg = resultant(&f, &g, var).unwrap();
        let gf = resultant(&g, &f, var).unwrap();
        prop_assert_eq!(fg, if (df * dg) % 2 == 1 { -gf } else { gf });
    }

    #[test]
    fn planted_common_factor_kills_resultant(
        (h, a, b) in (2usize..=3).prop_flat_map(|n| (in_last(n), in_last(n), in_last(n)))
    ) {
        let var = Var::from_index(h.var_count() - 1);
        prop_assert!(resultant(&(&h * &a), &(&h * &b), var).unwrap().is_zero());
    }

    #[test]
    fn products_of_distinct_linear_factors_are_coprime(
        roots in prop::collection::vec(poly(2, 2, 3), 3..=5)
    ) {
        // y - r_i with pairwise distinct r_i in z1, z2
        let mut distinct: Vec<Polynomial> = Vec::new();
        for r in roots {
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        prop_assume!(distinct.len() >= 2);
        let lin = |r: &Polynomial| &z(3, 3) - &r.insert_var(Var::z(3));
        let split = distinct.len() / 2;
        let f = distinct[..split].iter().map(lin).fold(Polynomial::one(3), |acc, l| &acc * &l);
        let g = distinct[split..].iter().map(lin).fold(Polynomial::one(3), |acc, l| &acc * &l);
        prop_assert!(!resultant(&f, &g, Var::z(3)).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn monic_quadratic_discriminant((a, b) in (poly(2, 3, 4), poly(2, 3, 4))) {
        let a = a.insert_var(Var::z(3));
        let b = b.insert_var(Var::z(3));
        let y = z(3, 3);
        let f = &(&y.pow(2) + &(&a * &y)) + &b;
        let four = Polynomial::constant(3, Rational::from_integer(4.into()));
        prop_assert_eq!(discriminant(&f, Var::z(3)).unwrap(), &a.pow(2) - &(&four * &b));
    }
}
