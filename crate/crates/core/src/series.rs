//! Power series truncated at a total degree, standing in for germs at the
//! origin.
//!
//! A [`TruncatedSeries`] of order `N` keeps every term of total degree at most
//! `N`; arithmetic is exact in all retained degrees.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{rational_sqrt, Polynomial, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    body: Polynomial,
    order: u32,
}

/// Result of [`TruncatedSeries::sqrt`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesSqrt {
    /// The square root with positive constant term.
    Root(TruncatedSeries),
    /// A root exists over C, but its constant term is irrational.
    ConstantNotARationalSquare,
}

impl TruncatedSeries {
    /// Truncates `body` at total degree `order`.
    pub fn new(body: Polynomial, order: u32) -> Self {
        TruncatedSeries {
            body: body.truncate(order),
            order,
        }
    }

    pub fn zero(var_count: usize, order: u32) -> Self {
        Self::new(Polynomial::zero(var_count), order)
    }

    pub fn one(var_count: usize, order: u32) -> Self {
        Self::constant(var_count, Rational::one(), order)
    }

    pub fn constant(var_count: usize, c: Rational, order: u32) -> Self {
        Self::new(Polynomial::constant(var_count, c), order)
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    pub fn into_body(self) -> Polynomial {
        self.body
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn var_count(&self) -> usize {
        self.body.var_count()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn constant_term(&self) -> Rational {
        self.body.constant_term()
    }

    pub fn is_unit(&self) -> bool {
        !self.constant_term().is_zero()
    }

    /// Same series cut down to a lower order.
    pub fn truncate(&self, order: u32) -> TruncatedSeries {
        TruncatedSeries::new(self.body.clone(), order.min(self.order))
    }

    /// Equality of the terms up to total degree `order`.
    pub fn congruent(&self, other: &TruncatedSeries, order: u32) -> bool {
        self.body.truncate(order) == other.body.truncate(order)
    }

    fn check_dims(&self, other: &TruncatedSeries) -> Result<()> {
        if self.var_count() == other.var_count() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.var_count(),
                found: other.var_count(),
            })
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_dims(other)?;
        Ok(Self::new(
            &self.body + &other.body,
            self.order.min(other.order),
        ))
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_dims(other)?;
        Ok(Self::new(
            &self.body - &other.body,
            self.order.min(other.order),
        ))
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            body: -&self.body,
            order: self.order,
        }
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.scale(c),
            order: self.order,
        }
    }

    /// Product at order `min(self.order, other.order)`.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_dims(other)?;
        Ok(truncated_product(
            &self.body,
            &other.body,
            self.order.min(other.order),
        ))
    }

    /// Multiplicative inverse of a unit, by Newton iteration `r ← r(2 − a·r)`.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.var_count();
        let two = Polynomial::constant(n, Rational::from_integer(2.into()));
        let mut r = Polynomial::constant(n, c.recip());
        let mut correct = 0;
        while correct < self.order {
            correct = (2 * correct + 1).min(self.order);
            let ar = truncated_product(&self.body, &r, correct).body;
            r = truncated_product(&r, &(&two - &ar), correct).body;
        }
        Ok(TruncatedSeries {
            body: r,
            order: self.order,
        })
    }

    /// Square root with positive constant term, by Newton iteration
    /// `r ← (r + a/r)/2` from the rational root of the constant term.
    pub fn sqrt(&self) -> Result<SeriesSqrt> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NotAUnit);
        }
        let Some(root) = rational_sqrt(&c) else {
            return Ok(SeriesSqrt::ConstantNotARationalSquare);
        };
        let n = self.var_count();
        let half = Rational::new(1.into(), 2.into());
        let mut r = TruncatedSeries::constant(n, root, 0);
        let mut correct = 0;
        while correct < self.order {
            correct = (2 * correct + 1).min(self.order);
            let r_at = TruncatedSeries::new(r.body.clone(), correct);
            let quotient = self.truncate(correct).mul(&r_at.inverse()?)?;
            r = r_at.add(&quotient)?.scale(&half);
        }
        Ok(SeriesSqrt::Root(TruncatedSeries {
            body: r.body,
            order: self.order,
        }))
    }
}

fn truncated_product(a: &Polynomial, b: &Polynomial, order: u32) -> TruncatedSeries {
    let n = a.var_count();
    let mut out = Polynomial::zero(n);
    for (ma, ca) in a.terms() {
        let da = ma.total_degree();
        if da > order {
            break;
        }
        for (mb, cb) in b.terms() {
            if da + mb.total_degree() > order {
                break;
            }
            out.add_term(ma.mul(mb), ca * cb);
        }
    }
    TruncatedSeries { body: out, order }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.body, self.order + 1)
    }
}
