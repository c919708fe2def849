use num_traits::{One, Zero};

use super::{
    newton_polygon, polygon_verdict, quadratic_germ_test, Certificate, Factors, GermStatus,
};
use crate::algebra::{Monomial, Point, Polynomial, Rational, Var};
use crate::series::TruncatedSeries;
use crate::weierstrass::{make_regular, weierstrass_prepare, RegularityReport, WeierstrassData};
use crate::{Error, Result};

/// The germ of `f` at `point`, analysed up to total degree `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermQuery {
    pub f: Polynomial,
    pub point: Point,
    pub order: u32,
    /// Variable to prepare in; the last one when unset.
    pub distinguished: Option<Var>,
}

impl GermQuery {
    pub fn new(f: Polynomial, point: Point, order: u32) -> Result<Self> {
        if f.var_count() != point.dim() {
            return Err(Error::DimensionMismatch {
                expected: f.var_count(),
                found: point.dim(),
            });
        }
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        Ok(GermQuery {
            f,
            point,
            order,
            distinguished: None,
        })
    }

    pub fn with_distinguished(mut self, var: Var) -> Result<Self> {
        var.check(self.f.var_count())?;
        self.distinguished = Some(var);
        Ok(self)
    }
}

/// Status together with the local data it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermAnalysis {
    pub status: GermStatus,
    /// `f` re-centred at the point and sheared as recorded in `regularity`.
    pub local: Option<Polynomial>,
    pub regularity: Option<RegularityReport>,
    pub weierstrass: Option<WeierstrassData>,
}

pub fn analyze_germ(query: &GermQuery) -> Result<GermStatus> {
    analyze_germ_detailed(query).map(|a| a.status)
}

/// Decision cascade: unit, smooth point, then Weierstrass preparation of the
/// re-centred polynomial and the degree-specific tests.
pub fn analyze_germ_detailed(query: &GermQuery) -> Result<GermAnalysis> {
    let f = &query.f;
    let p = &query.point;
    let n = f.var_count();
    if p.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.dim(),
        });
    }
    let early = |status| GermAnalysis {
        status,
        local: None,
        regularity: None,
        weierstrass: None,
    };

    let value = f.eval(p)?;
    if !value.is_zero() {
        return Ok(early(GermStatus::Unit(Certificate::NonzeroValue { value })));
    }
    let gradient = f.gradient_at(p)?;
    if gradient.iter().any(|g| !g.is_zero()) {
        return Ok(early(GermStatus::SmoothIrreducible(
            Certificate::SmoothPoint { gradient },
        )));
    }

    let var = query.distinguished.unwrap_or(Var::from_index(n - 1));
    let shifted = f.shift(p)?;
    let (local, regularity) = make_regular(&shifted, var)?;
    let w = weierstrass_prepare(&local, var, query.order)?;
    let status = classify_prepared(&w)?;
    Ok(GermAnalysis {
        status,
        local: Some(local),
        regularity: Some(regularity),
        weierstrass: Some(w),
    })
}

fn classify_prepared(w: &WeierstrassData) -> Result<GermStatus> {
    if w.degree == 1 {
        return Ok(GermStatus::SingularIrreducible(Certificate::DegreeOne));
    }
    if w.constant_coefficient().is_zero() {
        return Ok(GermStatus::SingularReducible {
            certificate: Certificate::DistinguishedVarDivides {
                var: w.distinguished,
            },
            factors: Some(split_distinguished(w)),
        });
    }
    if w.var_count() == 2 {
        let verdict = polygon_verdict(&newton_polygon(w)?);
        if !verdict.is_undetermined() || w.degree != 2 {
            return Ok(verdict);
        }
    }
    if w.degree == 2 {
        return quadratic_germ_test(w);
    }
    Ok(GermStatus::Undetermined(
        "degree >= 3 in dimension >= 3 outside decidable fragment".into(),
    ))
}

/// `w = y · (y^{d−1} + e_1 y^{d−2} + ⋯ + e_{d−1})` when `e_d = 0`.
fn split_distinguished(w: &WeierstrassData) -> Factors {
    let n = w.var_count();
    let y = |k: u32| Monomial::var(n, w.distinguished.index(), k);
    let mut rest = Polynomial::term(y(w.degree - 1), Rational::one());
    for (i, e) in w
        .coefficients
        .iter()
        .take(w.coefficients.len() - 1)
        .enumerate()
    {
        rest = &rest + &e.body().mul_monomial(&y(w.degree - 2 - i as u32));
    }
    Factors {
        first: TruncatedSeries::new(Polynomial::term(y(1), Rational::one()), w.order),
        second: TruncatedSeries::new(rest, w.order),
    }
}
