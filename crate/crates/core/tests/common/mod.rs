#![allow(dead_code)]

use germ_core::{Monomial, Point, Polynomial, Rational, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=6, 1i64..=4, any::<bool>()).prop_map(|(n, d, neg)| {
        Rational::new(BigInt::from(if neg { -n } else { n }), BigInt::from(d))
    })
}

fn exponents(n: usize, max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max_deg, n).prop_filter_map("total degree bound", move |mut e| {
        while e.iter().sum::<u32>() > max_deg {
            let i = e.iter().position(|&x| x > 0)?;
            e[i] -= 1;
        }
        Some(e)
    })
}

/// Random polynomial in `n` variables of total degree at most `max_deg`.
pub fn poly(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((exponents(n, max_deg), rational()), 0..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::new(e), c)))
        },
    )
}

pub fn nonzero_poly(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    poly(n, max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn point(n: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(rational(), n).prop_map(Point::new)
}

/// Random `f` with `f(0) = 0`, regular in the last variable, degree ≤ `max_deg`.
pub fn regular_poly(n: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    (poly(n, max_deg, 6), 1..=max_deg, nonzero_rational()).prop_map(move |(f, d, c)| {
        let f = &f - &Polynomial::constant(n, f.constant_term());
        let pure = Polynomial::term(Monomial::var(n, n - 1, d), c);
        let g = &f + &pure;
        // adding the pure power can cancel an existing one; fall back to it alone
        if germ_core::regular_order(&g, Var::from_index(n - 1))
            .unwrap()
            .regular
        {
            g
        } else {
            pure
        }
    })
}

pub fn z(n: usize, k: usize) -> Polynomial {
    Polynomial::var(n, Var::z(k))
}
