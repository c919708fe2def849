//! Sylvester resultants, discriminants, and the coprimality and
//! discreteness checks built on them.

use num_traits::Zero;

use crate::algebra::{Point, Polynomial, Var};
use crate::weierstrass::{make_regular, Shear};
use crate::{Error, Result};

/// Determinant of a square matrix of polynomials.
///
/// Cofactor expansion up to size 4, fraction-free Bareiss elimination above.
pub fn determinant(matrix: &[Vec<Polynomial>], var_count: usize) -> Polynomial {
    if matrix.len() <= 4 {
        cofactor_determinant(matrix, var_count)
    } else {
        bareiss_determinant(matrix, var_count)
    }
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(matrix: &[Vec<Polynomial>], var_count: usize) -> Polynomial {
    let m = matrix.len();
    if m == 0 {
        return Polynomial::one(var_count);
    }
    if m == 1 {
        return matrix[0][0].clone();
    }
    let mut det = Polynomial::zero(var_count);
    for (col, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry * &cofactor_determinant(&minor, var_count);
        det = if col % 2 == 0 {
            &det + &term
        } else {
            &det - &term
        };
    }
    det
}

/// Bareiss elimination; every division in it is exact.
pub fn bareiss_determinant(matrix: &[Vec<Polynomial>], var_count: usize) -> Polynomial {
    let m = matrix.len();
    if m == 0 {
        return Polynomial::one(var_count);
    }
    let mut a = matrix.to_vec();
    let mut negate = false;
    let mut prev = Polynomial::one(var_count);
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                return Polynomial::zero(var_count);
            };
            a.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `f` and `g` as polynomials in `var`, coefficients
/// listed from the highest power down.
pub fn sylvester_matrix(f: &Polynomial, g: &Polynomial, var: Var) -> Result<Vec<Vec<Polynomial>>> {
    var.check(f.var_count())?;
    var.check(g.var_count())?;
    if f.var_count() != g.var_count() {
        return Err(Error::DimensionMismatch {
            expected: f.var_count(),
            found: g.var_count(),
        });
    }
    let df = positive_degree(f, var)?;
    let dg = positive_degree(g, var)?;
    let n = f.var_count();
    let size = df + dg;
    let fc = f.coefficients_in(var);
    let gc = g.coefficients_in(var);
    let mut rows = Vec::with_capacity(size);
    for (shift, coeffs, deg) in (0..dg)
        .map(|s| (s, &fc, df))
        .chain((0..df).map(|s| (s, &gc, dg)))
    {
        let mut row = vec![Polynomial::zero(n); size];
        for k in 0..=deg {
            row[shift + k] = coeffs[deg - k].clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

fn positive_degree(f: &Polynomial, var: Var) -> Result<usize> {
    match f.degree_in(var) {
        Some(d) if d >= 1 => Ok(d as usize),
        _ => Err(Error::DegreeZero { var }),
    }
}

/// `Res_var(f, g)`, a polynomial in which `var` no longer occurs.
pub fn resultant(f: &Polynomial, g: &Polynomial, var: Var) -> Result<Polynomial> {
    let m = sylvester_matrix(f, g, var)?;
    Ok(determinant(&m, f.var_count()))
}

/// `(−1)^{d(d−1)/2} · Res(f, ∂f/∂var) / lc`; `a² − 4b` for `var² + a·var + b`.
pub fn discriminant(f: &Polynomial, var: Var) -> Result<Polynomial> {
    var.check(f.var_count())?;
    let d = f.degree_in(var).unwrap_or(0);
    if d < 2 {
        return Err(Error::DegreeTooSmall {
            var,
            degree: d,
            required: 2,
        });
    }
    let lc = f.coefficients_in(var)[d as usize]
        .as_constant()
        .ok_or(Error::NonConstantLeadingCoefficient { var })?;
    let res = resultant(f, &f.derivative(var)?, var)?;
    let mut factor = lc.recip();
    if (d * (d - 1) / 2) % 2 == 1 {
        factor = -factor;
    }
    Ok(res.scale(&factor))
}

/// Outcome of [`coprime_at`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimeReport {
    /// Resultant of the re-centred (and possibly sheared) pair.
    pub resultant: Polynomial,
    pub coprime_germ_at_point: bool,
    pub vanishing_at_point: bool,
    /// Shear applied to both polynomials after re-centring, if any.
    pub applied_change: Option<Shear>,
}

/// Coprimality of the germs of `g` and `h` at `p`, witnessed by a resultant.
///
/// Both are moved to the origin; one shear regularizing `g·h` in `var` is
/// applied to both. A nonzero resultant means the germs stay coprime at every
/// nearby point.
pub fn coprime_at(g: &Polynomial, h: &Polynomial, p: &Point, var: Var) -> Result<CoprimeReport> {
    let gs = g.shift(p)?;
    let hs = h.shift(p)?;
    let product = &gs * &hs;
    let (_, report) = make_regular(&product, var).map_err(|e| match e {
        Error::ShearsExhausted { var, .. } => Error::NotRegular { var },
        other => other,
    })?;
    let (gs, hs) = match &report.applied_change {
        Some(shear) => (shear.apply(&gs)?, shear.apply(&hs)?),
        None => (gs, hs),
    };
    let res = resultant(&gs, &hs, var)?;
    let vanishing = res.constant_term().is_zero();
    Ok(CoprimeReport {
        coprime_germ_at_point: !res.is_zero(),
        vanishing_at_point: vanishing,
        resultant: res,
        applied_change: report.applied_change,
    })
}

/// Whether the zero set of `resultant` is discrete near `p`.
///
/// `resultant` lives in the base variables only, so its variable count is the
/// base dimension (see [`Polynomial::remove_var`]).
pub fn zero_set_discrete(resultant: &Polynomial, p: &Point) -> Result<bool> {
    let value = resultant.eval(p)?;
    if resultant.is_zero() {
        return Ok(false);
    }
    Ok(!value.is_zero() || resultant.var_count() <= 1)
}
