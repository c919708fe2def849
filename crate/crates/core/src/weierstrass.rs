//! Regularity in a distinguished variable, shear coordinate changes, and the
//! Weierstrass preparation `f = u · w` at a finite total-degree order.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{int, Monomial, Order, Polynomial, Rational, Var};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Number of shears [`make_regular`] tries before giving up.
pub const DEFAULT_SHEAR_ATTEMPTS: usize = 8;

/// Linear change `z_i ← z_i + c_i · z_j` for every `i ≠ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shear {
    pub distinguished: Var,
    /// One entry per variable; the distinguished entry is zero.
    pub coefficients: Vec<Rational>,
}

impl Shear {
    /// The same coefficient `c` on every non-distinguished variable.
    pub fn uniform(var_count: usize, distinguished: Var, c: Rational) -> Self {
        let coefficients = (0..var_count)
            .map(|i| {
                if i == distinguished.index() {
                    Rational::zero()
                } else {
                    c.clone()
                }
            })
            .collect();
        Shear {
            distinguished,
            coefficients,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let n = f.var_count();
        let zj = Polynomial::var(n, self.distinguished);
        let images: Vec<Polynomial> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| &Polynomial::var(n, Var::from_index(i)) + &zj.scale(c))
            .collect();
        f.substitute(&images)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub regular: bool,
    /// Order of vanishing of `t ↦ f(0, …, t, …, 0)`.
    pub order: Order,
    pub applied_change: Option<Shear>,
}

/// Order of `f` restricted to the axis of `var`. No coordinate change.
pub fn regular_order(f: &Polynomial, var: Var) -> Result<RegularityReport> {
    var.check(f.var_count())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let j = var.index();
    let order = f
        .terms()
        .filter(|(m, _)| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(i, &e)| i == j || e == 0)
        })
        .map(|(m, _)| m.exponent(j))
        .min()
        .map_or(Order::Infinite, Order::Finite);
    Ok(RegularityReport {
        regular: order.is_finite(),
        order,
        applied_change: None,
    })
}

/// Tries the shears `0, 1, −1, 2, −2, …` until `f` becomes regular in `var`.
pub fn make_regular(f: &Polynomial, var: Var) -> Result<(Polynomial, RegularityReport)> {
    make_regular_with_limit(f, var, DEFAULT_SHEAR_ATTEMPTS)
}

pub fn make_regular_with_limit(
    f: &Polynomial,
    var: Var,
    attempts: usize,
) -> Result<(Polynomial, RegularityReport)> {
    for k in 0..attempts {
        let c = shear_coefficient(k);
        let shear = Shear::uniform(f.var_count(), var, c);
        let g = if shear.is_identity() {
            f.clone()
        } else {
            shear.apply(f)?
        };
        let mut report = regular_order(&g, var)?;
        if report.regular {
            if !shear.is_identity() {
                report.applied_change = Some(shear);
            }
            return Ok((g, report));
        }
    }
    Err(Error::ShearsExhausted { var, attempts })
}

fn shear_coefficient(k: usize) -> Rational {
    let k = k as i64;
    if k % 2 == 1 {
        int((k + 1) / 2)
    } else {
        int(-k / 2)
    }
}

/// `f ≡ u · (z_j^d + e_1 z_j^{d−1} + ⋯ + e_d)` modulo total degree `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassData {
    pub degree: u32,
    /// `e_1, …, e_d`; none of them involves the distinguished variable.
    pub coefficients: Vec<TruncatedSeries>,
    pub unit: TruncatedSeries,
    pub distinguished: Var,
    pub order: u32,
}

impl WeierstrassData {
    pub fn var_count(&self) -> usize {
        self.unit.var_count()
    }

    /// The Weierstrass polynomial `w` as a series.
    pub fn polynomial(&self) -> TruncatedSeries {
        let n = self.var_count();
        let y = |k: u32| Monomial::var(n, self.distinguished.index(), k);
        let mut w = Polynomial::term(y(self.degree), Rational::from_integer(1.into()));
        for (i, e) in self.coefficients.iter().enumerate() {
            let k = self.degree - 1 - i as u32;
            w = &w + &e.body().mul_monomial(&y(k));
        }
        TruncatedSeries::new(w, self.order)
    }

    /// `u · w`, which agrees with the prepared polynomial up to the order.
    pub fn multiply_back(&self) -> TruncatedSeries {
        self.unit
            .mul(&self.polynomial())
            .expect("unit and w share dimensions")
    }

    /// `e_d`, the coefficient of `z_j^0`.
    pub fn constant_coefficient(&self) -> &TruncatedSeries {
        self.coefficients.last().expect("degree is positive")
    }
}

type Dense = Vec<Rational>;

/// Weierstrass preparation of `f` in the variable `var` up to total degree `order`.
///
/// Writes `f = Σ_α f_α(y) x^α` with `y = z_j` and `x` the remaining
/// variables, and solves slice by slice in increasing `|α|`:
/// `f_0 = u_0 y^d`, then `f_α − Σ u_β w_γ = u_0 w_α + u_α y^d` where `w_α`
/// has degree below `d`. Each slice is a power series in `y`; enough terms are
/// carried that every coefficient of total degree at most `order` is exact.
pub fn weierstrass_prepare(f: &Polynomial, var: Var, order: u32) -> Result<WeierstrassData> {
    var.check(f.var_count())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NonvanishingAtOrigin);
    }
    let report = regular_order(f, var)?;
    let d = report.order.finite().ok_or(Error::NotRegular { var })?;
    if order < d {
        return Err(Error::OrderTooSmall { order, degree: d });
    }
    let n = f.var_count();
    let j = var.index();
    let du = d as usize;
    let precision = (order as usize) * (du + 1);

    let mut f_slices: BTreeMap<Monomial, Dense> = BTreeMap::new();
    for (m, c) in f.terms() {
        let k = m.exponent(j) as usize;
        if k > precision {
            continue;
        }
        let slice = f_slices
            .entry(m.with_exponent(j, 0))
            .or_insert_with(|| vec![Rational::zero(); precision + 1]);
        slice[k] += c;
    }

    let zero_key = Monomial::one(n);
    let f0 = f_slices
        .get(&zero_key)
        .expect("regular f has a pure y part");
    let mut u0 = vec![Rational::zero(); precision + 1];
    u0[..=precision - du].clone_from_slice(&f0[du..=precision]);
    let u0_inv = dense_inverse(&u0);

    let mut unit: BTreeMap<Monomial, Dense> = BTreeMap::new();
    let mut poly: BTreeMap<Monomial, Dense> = BTreeMap::new();
    unit.insert(zero_key.clone(), u0.clone());

    for s in 1..=order {
        for alpha in base_monomials(n, j, s) {
            let mut rhs = f_slices
                .get(&alpha)
                .cloned()
                .unwrap_or_else(|| vec![Rational::zero(); precision + 1]);
            for (beta, ub) in unit.iter() {
                if beta.is_one() {
                    continue;
                }
                let Some(gamma) = alpha.checked_div(beta) else {
                    continue;
                };
                if let Some(wg) = poly.get(&gamma) {
                    dense_sub_product(&mut rhs, ub, wg);
                }
            }
            let g = dense_mul(&rhs, &u0_inv, precision);
            let w_alpha: Dense = g[..du].to_vec();
            let mut tail = vec![Rational::zero(); precision + 1];
            tail[..=precision - du].clone_from_slice(&g[du..=precision]);
            let u_alpha = dense_mul(&tail, &u0, precision);
            if w_alpha.iter().any(|c| !c.is_zero()) {
                poly.insert(alpha.clone(), w_alpha);
            }
            if u_alpha.iter().any(|c| !c.is_zero()) {
                unit.insert(alpha, u_alpha);
            }
        }
    }

    let mut u_terms = Vec::new();
    for (alpha, series) in &unit {
        let base = alpha.total_degree();
        for (k, c) in series.iter().enumerate().take((order - base) as usize + 1) {
            u_terms.push((alpha.with_exponent(j, k as u32), c.clone()));
        }
    }
    let mut coefficients = vec![Polynomial::zero(n); du];
    for (alpha, w_alpha) in &poly {
        for (k, c) in w_alpha.iter().enumerate() {
            // coefficient of y^k is e_{d−k}
            coefficients[du - 1 - k].add_term(alpha.clone(), c.clone());
        }
    }

    Ok(WeierstrassData {
        degree: d,
        coefficients: coefficients
            .into_iter()
            .map(|e| TruncatedSeries::new(e, order))
            .collect(),
        unit: TruncatedSeries::new(Polynomial::from_terms(n, u_terms), order),
        distinguished: var,
        order,
    })
}

/// Monomials of total degree `degree` in every variable except `skip`.
fn base_monomials(n: usize, skip: usize, degree: u32) -> Vec<Monomial> {
    fn go(n: usize, skip: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        if i == skip {
            go(n, skip, i + 1, left, cur, out);
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(n, skip, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(n, skip, 0, degree, &mut vec![0; n], &mut out);
    out
}

fn dense_inverse(a: &Dense) -> Dense {
    let inv0 = a[0].recip();
    let mut b = vec![Rational::zero(); a.len()];
    b[0] = inv0.clone();
    for k in 1..a.len() {
        let mut acc = Rational::zero();
        for i in 1..=k {
            if !a[i].is_zero() {
                acc += &a[i] * &b[k - i];
            }
        }
        b[k] = -acc * &inv0;
    }
    b
}

fn dense_mul(a: &Dense, b: &Dense, precision: usize) -> Dense {
    let mut out = vec![Rational::zero(); precision + 1];
    for (i, x) in a.iter().enumerate().take(precision + 1) {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate().take(precision + 1 - i) {
            if !y.is_zero() {
                out[i + k] += x * y;
            }
        }
    }
    out
}

fn dense_sub_product(acc: &mut Dense, a: &Dense, b: &Dense) {
    let p = acc.len();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (k, y) in b.iter().enumerate().take(p.saturating_sub(i)) {
            if !y.is_zero() {
                acc[i + k] -= x * y;
            }
        }
    }
}
