//! Exact rational scalars, sparse multivariate polynomials and points.
//!
//! Variables are written `z1, …, zn`. Internally a [`Var`] stores a 0-based
//! index; [`Var::z`] takes the 1-based name used in printed output.

mod monomial;
mod point;
mod poly;
pub(crate) mod univariate;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

pub use monomial::Monomial;
pub use point::Point;
pub use poly::Polynomial;

/// Exact rational number; always stored in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Square root in Q, if one exists.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// A variable `z_k`, stored 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(usize);

impl Var {
    /// The variable `z_k` for a 1-based `k`.
    ///
    /// Panics if `k == 0`.
    pub fn z(k: usize) -> Self {
        assert!(k >= 1, "variables are numbered from z1");
        Var(k - 1)
    }

    pub fn from_index(index: usize) -> Self {
        Var(index)
    }

    pub fn index(self) -> usize {
        self.0
    }

    /// 1-based number, as in `z3`.
    pub fn number(self) -> usize {
        self.0 + 1
    }

    pub fn check(self, var_count: usize) -> crate::Result<()> {
        if self.0 < var_count {
            Ok(())
        } else {
            Err(crate::Error::VariableOutOfRange {
                var: self,
                var_count,
            })
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}", self.0 + 1)
    }
}

/// Order of vanishing; `Infinite` for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(k) => Some(k),
            Order::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("+inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&rat(1, 2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }

    #[test]
    fn var_naming() {
        assert_eq!(Var::z(3).index(), 2);
        assert_eq!(Var::z(3).to_string(), "z3");
        assert!(Order::Finite(7) < Order::Infinite);
    }
}
