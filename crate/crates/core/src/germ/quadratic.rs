use num_traits::One;

use super::{Certificate, Factors, GermStatus, LocalSquare, SquareRoot};
use crate::algebra::{Monomial, Polynomial, Rational};
use crate::series::TruncatedSeries;
use crate::weierstrass::WeierstrassData;
use crate::{Error, Result};

/// A monic quadratic `y² + e₁y + e₂` splits exactly when its discriminant
/// `e₁² − 4e₂` is a square; the factors are `y + (e₁ ∓ r)/2`.
pub fn quadratic_germ_test(w: &WeierstrassData) -> Result<GermStatus> {
    if w.degree != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: w.degree,
        });
    }
    let e1 = &w.coefficients[0];
    let e2 = &w.coefficients[1];
    let four = Rational::from_integer(4.into());
    let disc = e1.mul(e1)?.sub(&e2.scale(&four))?;

    match super::is_local_square(disc.body(), w.order)? {
        LocalSquare::Yes(root) => {
            let factors = match &root {
                SquareRoot::Explicit(r) => Some(split(w, e1, r)?),
                SquareRoot::Symbolic { .. } => None,
            };
            Ok(GermStatus::SingularReducible {
                certificate: Certificate::MonomialUnitSquare { root },
                factors,
            })
        }
        LocalSquare::No(certificate) => Ok(GermStatus::SingularIrreducible(certificate)),
        LocalSquare::Undetermined => Ok(GermStatus::Undetermined(
            "discriminant is neither certified square nor certified non-square".into(),
        )),
    }
}

fn split(w: &WeierstrassData, e1: &TruncatedSeries, r: &TruncatedSeries) -> Result<Factors> {
    let n = w.var_count();
    let y = TruncatedSeries::new(
        Polynomial::term(
            Monomial::var(n, w.distinguished.index(), 1),
            Rational::one(),
        ),
        w.order,
    );
    let half = Rational::new(1.into(), 2.into());
    Ok(Factors {
        first: y.add(&e1.sub(r)?.scale(&half))?,
        second: y.add(&e1.add(r)?.scale(&half))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Point, Var};
    use crate::weierstrass::weierstrass_prepare;

    fn z(n: usize, k: usize) -> Polynomial {
        Polynomial::var(n, Var::z(k))
    }

    fn counterexample() -> Polynomial {
        &z(3, 3).pow(2) - &(&z(3, 1) * &z(3, 2).pow(2))
    }

    #[test]
    fn irreducible_at_origin() {
        let w = weierstrass_prepare(&counterexample(), Var::z(3), 8).unwrap();
        assert_eq!(
            quadratic_germ_test(&w).unwrap(),
            GermStatus::SingularIrreducible(Certificate::OddVariableOrder {
                var: Var::z(1),
                order: 1
            })
        );
    }

    #[test]
    fn splits_after_shift() {
        let shifted = counterexample()
            .shift(&Point::from_integers(&[1, 0, 0]))
            .unwrap();
        let w = weierstrass_prepare(&shifted, Var::z(3), 8).unwrap();
        let status = quadratic_germ_test(&w).unwrap();
        let factors = status.factors().expect("explicit factors");
        let product = factors.first.mul(&factors.second).unwrap();
        assert_eq!(product, w.polynomial());
        // z3 - z2 (1 + z1/2 - z1^2/8 + ...)
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        let first = factors.first.body();
        assert_eq!(first.coefficient(&m(&[0, 0, 1])), int(1));
        assert_eq!(first.coefficient(&m(&[0, 1, 0])), int(-1));
        assert_eq!(first.coefficient(&m(&[1, 1, 0])), rat(-1, 2));
        assert_eq!(first.coefficient(&m(&[2, 1, 0])), rat(1, 8));
        assert_eq!(factors.second.body(), &(&(&z(3, 3) + &z(3, 3)) - first));
    }

    #[test]
    fn repeated_factor() {
        let w = weierstrass_prepare(&z(2, 2).pow(2), Var::z(2), 4).unwrap();
        let status = quadratic_germ_test(&w).unwrap();
        let f = status.factors().unwrap();
        assert_eq!(f.first.body(), &z(2, 2));
        assert_eq!(f.second.body(), &z(2, 2));
    }

    #[test]
    fn rejects_other_degrees() {
        let w = weierstrass_prepare(&z(2, 2).pow(3), Var::z(2), 4).unwrap();
        assert_eq!(
            quadratic_germ_test(&w),
            Err(Error::WrongDegree {
                expected: 2,
                found: 3
            })
        );
    }
}
