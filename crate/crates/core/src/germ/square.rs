use num_traits::Zero;

use super::{Certificate, SquareRoot};
use crate::algebra::{univariate, Monomial, Polynomial, Rational, Var};
use crate::series::{SeriesSqrt, TruncatedSeries};
use crate::Result;

/// Answer of [`is_local_square`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalSquare {
    Yes(SquareRoot),
    No(Certificate),
    Undetermined,
}

/// Whether the germ of `d` at the origin is a square of a germ, over C.
///
/// Decided in this order:
/// 1. `d = 0` is the square of `0`.
/// 2. `d = x^α · U` with `U(0) ≠ 0` is a square iff every `α_i` is even; the
///    root is `x^{α/2} · √U`.
/// 3. In a square every variable has even minimal exponent (the lowest slice
///    in that variable squares without cancellation), so an odd one is a
///    certificate against.
/// 4. The lowest homogeneous form of a square is a square: odd degree rules
///    it out, and with at most two variables occurring in the form squareness
///    is checked exactly.
/// 5. Otherwise undetermined.
pub fn is_local_square(d: &Polynomial, order: u32) -> Result<LocalSquare> {
    let n = d.var_count();
    if d.is_zero() {
        return Ok(LocalSquare::Yes(SquareRoot::Explicit(
            TruncatedSeries::zero(n, order),
        )));
    }

    if let Some((alpha, unit)) = d.monomial_unit_split()? {
        if let Some(i) = alpha.exponents().iter().position(|e| e % 2 == 1) {
            return Ok(LocalSquare::No(Certificate::OddVariableOrder {
                var: Var::from_index(i),
                order: alpha.exponent(i),
            }));
        }
        let half = Monomial::new(alpha.exponents().iter().map(|e| e / 2).collect());
        return Ok(LocalSquare::Yes(
            match TruncatedSeries::new(unit.clone(), order).sqrt()? {
                SeriesSqrt::Root(r) => {
                    SquareRoot::Explicit(TruncatedSeries::new(r.body().mul_monomial(&half), order))
                }
                SeriesSqrt::ConstantNotARationalSquare => SquareRoot::Symbolic {
                    monomial: alpha,
                    unit,
                },
            },
        ));
    }

    for i in 0..n {
        let var = Var::from_index(i);
        if let Some(k) = d.variable_order(var)?.finite() {
            if k % 2 == 1 {
                return Ok(LocalSquare::No(Certificate::OddVariableOrder {
                    var,
                    order: k,
                }));
            }
        }
    }

    let (form, degree) = d.lowest_homogeneous_form()?;
    if degree % 2 == 1 || form_is_not_square(&form, degree) {
        return Ok(LocalSquare::No(Certificate::LowestFormNotASquare {
            form,
            degree,
        }));
    }
    Ok(LocalSquare::Undetermined)
}

/// Exact non-squareness for forms in at most two variables; `false` when
/// more variables occur (unknown).
fn form_is_not_square(form: &Polynomial, degree: u32) -> bool {
    let vars: Vec<usize> = (0..form.var_count())
        .filter(|&i| form.involves(Var::from_index(i)))
        .collect();
    match vars.as_slice() {
        [] => false,
        [_] => degree % 2 == 1,
        [a, _] => {
            // dehomogenize at z_b = 1; the degree drop is the multiplicity of
            // the root at infinity
            let mut dense = vec![Rational::zero(); degree as usize + 1];
            for (m, c) in form.terms() {
                dense[m.exponent(*a) as usize] += c;
            }
            let dense = univariate::trim(dense);
            let deg = univariate::degree(&dense).unwrap_or(0) as u32;
            (degree - deg) % 2 == 1
                || univariate::squarefree_multiplicities(&dense)
                    .iter()
                    .any(|m| m % 2 == 1)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn z(n: usize, k: usize) -> Polynomial {
        Polynomial::var(n, Var::z(k))
    }

    fn c(n: usize, v: i64) -> Polynomial {
        Polynomial::constant(n, int(v))
    }

    #[test]
    fn odd_order_obstruction() {
        let d = &z(2, 1) * &z(2, 2).pow(2);
        assert_eq!(
            is_local_square(&d, 8).unwrap(),
            LocalSquare::No(Certificate::OddVariableOrder {
                var: Var::z(1),
                order: 1
            })
        );
    }

    #[test]
    fn shifted_discriminant_has_explicit_root() {
        // 4(1 + z1) z2^2
        let d = &(&c(3, 4) + &(&c(3, 4) * &z(3, 1))) * &z(3, 2).pow(2);
        let LocalSquare::Yes(SquareRoot::Explicit(r)) = is_local_square(&d, 8).unwrap() else {
            panic!("expected explicit root");
        };
        assert!(r.mul(&r).unwrap().congruent(&TruncatedSeries::new(d, 8), 8));
        // 2 z2 (1 + z1/2 - z1^2/8 + ...)
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        assert_eq!(r.body().coefficient(&m(&[0, 1, 0])), int(2));
        assert_eq!(r.body().coefficient(&m(&[1, 1, 0])), int(1));
        assert_eq!(r.body().coefficient(&m(&[2, 1, 0])), rat(-1, 4));
    }

    #[test]
    fn sum_of_squares_is_not_a_square() {
        let d = &z(2, 1).pow(2) + &z(2, 2).pow(2);
        assert!(matches!(
            is_local_square(&d, 8).unwrap(),
            LocalSquare::No(Certificate::LowestFormNotASquare { degree: 2, .. })
        ));
    }

    #[test]
    fn zero_is_a_square() {
        assert_eq!(
            is_local_square(&Polynomial::zero(2), 4).unwrap(),
            LocalSquare::Yes(SquareRoot::Explicit(TruncatedSeries::zero(2, 4)))
        );
    }

    #[test]
    fn irrational_unit_gives_symbolic_root() {
        let d = &(&c(2, 2) + &z(2, 1)) * &z(2, 2).pow(2);
        assert!(matches!(
            is_local_square(&d, 6).unwrap(),
            LocalSquare::Yes(SquareRoot::Symbolic { .. })
        ));
    }

    #[test]
    fn square_of_binary_form_is_undetermined_not_refuted() {
        // (z1 - z2)^2 + z1^3: lowest form is a square, nothing decides
        let d = &(&z(2, 1) - &z(2, 2)).pow(2) + &z(2, 1).pow(3);
        assert_eq!(is_local_square(&d, 6).unwrap(), LocalSquare::Undetermined);
        // (z1 - z2)^2 (z1 + z2) + z1^4 has odd lowest degree
        let d = &(&(&z(2, 1) - &z(2, 2)).pow(2) * &(&z(2, 1) + &z(2, 2))) + &z(2, 1).pow(4);
        assert!(matches!(
            is_local_square(&d, 6).unwrap(),
            LocalSquare::No(Certificate::LowestFormNotASquare { degree: 3, .. })
        ));
    }

    #[test]
    fn form_with_root_at_infinity() {
        // lowest form z2 (z1^3 + z2^3): simple root at z2 = 0
        let d = &(&(&z(2, 1).pow(3) * &z(2, 2)) + &z(2, 2).pow(4)) + &z(2, 1).pow(6);
        assert!(matches!(
            is_local_square(&d, 8).unwrap(),
            LocalSquare::No(Certificate::LowestFormNotASquare { degree: 4, .. })
        ));
    }
}
