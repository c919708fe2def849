use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, Order, Point, Rational, Var};
use crate::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by [`Monomial`]; zero coefficients are never
/// stored, so equal polynomials have identical term tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var_count: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(var_count: usize) -> Self {
        Polynomial {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var_count: usize) -> Self {
        Self::constant(var_count, Rational::one())
    }

    pub fn constant(var_count: usize, c: Rational) -> Self {
        Self::term(Monomial::one(var_count), c)
    }

    /// The polynomial `z_k` (`var` must be below `var_count`).
    pub fn var(var_count: usize, var: Var) -> Self {
        Self::term(Monomial::var(var_count, var.index(), 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero(m.len());
        p.add_term(m, c);
        p
    }

    /// Collects terms, merging repeated monomials.
    pub fn from_terms<I>(var_count: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(var_count);
        for (m, c) in terms {
            assert_eq!(
                m.len(),
                var_count,
                "monomial length differs from variable count"
            );
            p.add_term(m, c);
        }
        p
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    /// Terms in canonical printing order.
    pub fn terms_print_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| Monomial::print_order(a.0, b.0));
        t
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.var_count))
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var.index())).max()
    }

    /// Whether `var` occurs in some term.
    pub fn involves(&self, var: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(var.index()) > 0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.var_count);
        }
        Polynomial {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.var_count);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_point(&self, p: &Point) -> Result<()> {
        if p.dim() == self.var_count {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.var_count,
                found: p.dim(),
            })
        }
    }

    /// Exact value at `p`.
    pub fn eval(&self, p: &Point) -> Result<Rational> {
        self.check_point(p)?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in p.coordinates().iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Partial derivative with respect to `var`.
    pub fn derivative(&self, var: Var) -> Result<Polynomial> {
        var.check(self.var_count)?;
        let i = var.index();
        let mut out = Polynomial::zero(self.var_count);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.add_term(
                    m.with_exponent(i, e - 1),
                    c * Rational::from_integer(e.into()),
                );
            }
        }
        Ok(out)
    }

    /// Gradient at `p`, one partial derivative per variable.
    pub fn gradient_at(&self, p: &Point) -> Result<Vec<Rational>> {
        self.check_point(p)?;
        (0..self.var_count)
            .map(|i| self.derivative(Var::from_index(i))?.eval(p))
            .collect()
    }

    /// Writes `self` as `Σ_k c_k · var^k`; entry `k` of the result is `c_k`
    /// (same variable count, `var` absent).
    pub fn coefficients_in(&self, var: Var) -> Vec<Polynomial> {
        let i = var.index();
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Polynomial::zero(self.var_count); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            out[e].add_term(m.with_exponent(i, 0), c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Re-centres at `p`: the result `g` satisfies `g(x) = f(p + x)`.
    ///
    /// One variable at a time, the coefficient list in that variable is
    /// Taylor-shifted by Horner's scheme.
    pub fn shift(&self, p: &Point) -> Result<Polynomial> {
        self.check_point(p)?;
        let mut f = self.clone();
        for (i, c) in p.coordinates().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = Var::from_index(i);
            let coeffs = f.coefficients_in(var);
            let x_plus_c = &Polynomial::var(self.var_count, var)
                + &Polynomial::constant(self.var_count, c.clone());
            let mut acc = Polynomial::zero(self.var_count);
            for ck in coeffs.iter().rev() {
                acc = &(&acc * &x_plus_c) + ck;
            }
            f = acc;
        }
        Ok(f)
    }

    /// Minimal exponent of `var` over the support; infinite for zero.
    pub fn variable_order(&self, var: Var) -> Result<Order> {
        var.check(self.var_count)?;
        Ok(self
            .terms
            .keys()
            .map(|m| m.exponent(var.index()))
            .min()
            .map_or(Order::Infinite, Order::Finite))
    }

    /// Minimal total degree over the support; infinite for zero.
    pub fn order(&self) -> Order {
        self.terms
            .keys()
            .next()
            .map_or(Order::Infinite, |m| Order::Finite(m.total_degree()))
    }

    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        Polynomial {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of the terms of minimal total degree, with that degree.
    pub fn lowest_homogeneous_form(&self) -> Result<(Polynomial, u32)> {
        match self.order() {
            Order::Infinite => Err(Error::ZeroPolynomial),
            Order::Finite(d) => Ok((self.homogeneous_part(d), d)),
        }
    }

    /// Splits `f = x^α · U` with `α` the componentwise minimal exponent.
    ///
    /// Returns `None` when `U(0) = 0`, i.e. `f` is not a monomial times a unit.
    pub fn monomial_unit_split(&self) -> Result<Option<(Monomial, Polynomial)>> {
        let alpha = self
            .terms
            .keys()
            .cloned()
            .reduce(|a, b| a.gcd(&b))
            .ok_or(Error::ZeroPolynomial)?;
        let unit = Polynomial {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        m.checked_div(&alpha).expect("alpha divides support"),
                        c.clone(),
                    )
                })
                .collect(),
        };
        Ok((!unit.constant_term().is_zero()).then_some((alpha, unit)))
    }

    /// Drops every term of total degree above `order`.
    pub fn truncate(&self, order: u32) -> Polynomial {
        Polynomial {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= order)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Composes with `images`: `z_i ↦ images[i]`. All images share one
    /// variable count, which becomes the result's.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.var_count {
            return Err(Error::DimensionMismatch {
                expected: self.var_count,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, Polynomial::var_count);
        if let Some(bad) = images.iter().find(|g| g.var_count != target) {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: bad.var_count,
            });
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|g| vec![Polynomial::one(target), g.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Removes a variable that does not occur, lowering the variable count.
    pub fn remove_var(&self, var: Var) -> Result<Option<Polynomial>> {
        var.check(self.var_count)?;
        if self.involves(var) {
            return Ok(None);
        }
        Ok(Some(Polynomial {
            var_count: self.var_count - 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.without(var.index()), c.clone()))
                .collect(),
        }))
    }

    /// Inserts a new, absent variable at position `var`.
    pub fn insert_var(&self, var: Var) -> Polynomial {
        assert!(var.index() <= self.var_count);
        Polynomial {
            var_count: self.var_count + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.inserting(var.index(), 0), c.clone()))
                .collect(),
        }
    }

    /// Quotient of an exact division, `None` if `divisor` does not divide `self`.
    ///
    /// Division by graded-lex leading terms. A single polynomial is a
    /// Gröbner basis of the ideal it generates, so the reduction reaches zero
    /// exactly when the quotient exists.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.var_count, divisor.var_count);
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(self.var_count);
        while let Some((m, c)) = rest.leading_term() {
            let qm = m.checked_div(&lm)?;
            let qc = c / &lc;
            let step = Polynomial::term(qm.clone(), qc.clone());
            rest = &rest - &(divisor * &step);
            quotient.add_term(qm, qc);
        }
        Some(quotient)
    }

    pub(crate) fn write_canonical(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms_print_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: ascending total degree, `z1`-heaviest first within a
    /// degree, explicit `*` and `^`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_canonical(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.var_count, rhs.var_count, "variable counts differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.var_count, rhs.var_count, "variable counts differ");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.var_count, rhs.var_count, "variable counts differ");
        let mut out = Polynomial::zero(self.var_count);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}
