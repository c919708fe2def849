//! Machine-readable report envelope.
//!
//! Field names are stable. Rationals are written as `"num/den"` strings (or
//! plain integers as `"n"`) so no value passes through floating point; a
//! polynomial term is `[[exponents…], "coefficient"]`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Monomial, Point, Polynomial, Rational};
use crate::germ::{Certificate, GermStatus, ScanReport, SquareRoot};
use crate::parse::{self, ParseError};
use crate::series::TruncatedSeries;
use crate::weierstrass::WeierstrassData;

pub const TOOL_NAME: &str = "germ";

/// `[exponents, coefficient]`.
pub type TermJson = (Vec<u32>, String);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: Input,
    pub result: ResultPayload,
    pub timing_ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub poly: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub var: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultPayload {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Factors of the Weierstrass polynomial, each a list of terms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Vec<TermJson>>>,
    /// The local polynomial the factors refer to (re-centred, sheared).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shear: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanJson>,
    /// Resultant or discriminant.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coprime: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vanishing: Option<bool>,
    /// Whether the resultant's zero set is discrete at the point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discrete: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weierstrass: Option<WeierstrassJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data")]
pub enum CertificateJson {
    #[serde(rename = "odd-order")]
    OddOrder { var: String, order: u32 },
    #[serde(rename = "lowest-form-not-square")]
    LowestFormNotSquare { form: String, degree: u32 },
    #[serde(rename = "monomial-unit-square")]
    MonomialUnitSquare {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        root: Option<Vec<TermJson>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        monomial: Option<Vec<u32>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        unit: Option<String>,
    },
    #[serde(rename = "distinguished-var-divides")]
    DistinguishedVarDivides { var: String },
    #[serde(rename = "multi-edge-polygon")]
    MultiEdgePolygon { edges: usize },
    #[serde(rename = "binomial-coprime-edge")]
    BinomialCoprimeEdge { d: u32, m: u32 },
    #[serde(rename = "binomial-noncoprime-edge")]
    BinomialNoncoprimeEdge { gcd: u32 },
    #[serde(rename = "edge-polynomial-splits")]
    EdgePolynomialSplits { factors: usize },
    #[serde(rename = "smooth-point")]
    SmoothPoint { gradient: Vec<String> },
    #[serde(rename = "nonzero-value")]
    NonzeroValue { value: String },
    #[serde(rename = "degree-one")]
    DegreeOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanJson {
    pub base_status: String,
    pub samples: Vec<SampleJson>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleJson {
    pub t: String,
    pub point: Vec<String>,
    pub on_locus: bool,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeierstrassJson {
    pub degree: u32,
    pub var: String,
    pub unit: Vec<TermJson>,
    /// `e_1 … e_d`.
    pub coefficients: Vec<Vec<TermJson>>,
}

pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

pub fn point_strings(p: &Point) -> Vec<String> {
    p.coordinates().iter().map(rational_string).collect()
}

pub fn terms_json(f: &Polynomial) -> Vec<TermJson> {
    f.terms_print_order()
        .into_iter()
        .map(|(m, c)| (m.exponents().to_vec(), rational_string(c)))
        .collect()
}

/// Rebuilds a polynomial from its JSON terms.
pub fn polynomial_from_terms(
    var_count: usize,
    terms: &[TermJson],
) -> Result<Polynomial, ParseError> {
    let mut out = Polynomial::zero(var_count);
    for (exponents, c) in terms {
        if exponents.len() != var_count {
            return Err(ParseError::Syntax {
                position: 0,
                expected: format!("{var_count} exponents"),
                found: format!("{}", exponents.len()),
            });
        }
        let m = Monomial::new(exponents.clone());
        out = &out + &Polynomial::term(m, parse::parse_rational(c)?);
    }
    Ok(out)
}

pub fn series_from_terms(
    var_count: usize,
    order: u32,
    terms: &[TermJson],
) -> Result<TruncatedSeries, ParseError> {
    polynomial_from_terms(var_count, terms).map(|p| TruncatedSeries::new(p, order))
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        match c {
            Certificate::OddVariableOrder { var, order } => CertificateJson::OddOrder {
                var: var.to_string(),
                order: *order,
            },
            Certificate::LowestFormNotASquare { form, degree } => {
                CertificateJson::LowestFormNotSquare {
                    form: form.to_string(),
                    degree: *degree,
                }
            }
            Certificate::MonomialUnitSquare { root } => match root {
                SquareRoot::Explicit(r) => CertificateJson::MonomialUnitSquare {
                    root: Some(terms_json(r.body())),
                    monomial: None,
                    unit: None,
                },
                SquareRoot::Symbolic { monomial, unit } => CertificateJson::MonomialUnitSquare {
                    root: None,
                    monomial: Some(monomial.exponents().to_vec()),
                    unit: Some(unit.to_string()),
                },
            },
            Certificate::DistinguishedVarDivides { var } => {
                CertificateJson::DistinguishedVarDivides {
                    var: var.to_string(),
                }
            }
            Certificate::MultiEdgePolygon { edges } => {
                CertificateJson::MultiEdgePolygon { edges: *edges }
            }
            Certificate::BinomialCoprimeEdge { degree, m } => {
                CertificateJson::BinomialCoprimeEdge { d: *degree, m: *m }
            }
            Certificate::BinomialNoncoprimeEdge { gcd } => {
                CertificateJson::BinomialNoncoprimeEdge { gcd: *gcd }
            }
            Certificate::EdgePolynomialSplits { factors } => {
                CertificateJson::EdgePolynomialSplits { factors: *factors }
            }
            Certificate::SmoothPoint { gradient } => CertificateJson::SmoothPoint {
                gradient: gradient.iter().map(rational_string).collect(),
            },
            Certificate::NonzeroValue { value } => CertificateJson::NonzeroValue {
                value: rational_string(value),
            },
            Certificate::DegreeOne => CertificateJson::DegreeOne,
        }
    }
}

impl ResultPayload {
    /// Status, certificate and factors of a classification.
    pub fn from_status(status: &GermStatus) -> Self {
        let mut out = ResultPayload {
            status: Some(status.name().to_string()),
            certificate: status.certificate().map(CertificateJson::from),
            ..Default::default()
        };
        if let GermStatus::Undetermined(reason) = status {
            out.reason = Some(reason.clone());
        }
        if let Some(f) = status.factors() {
            out.factors = Some(vec![
                terms_json(f.first.body()),
                terms_json(f.second.body()),
            ]);
        }
        out
    }
}

impl From<&ScanReport> for ScanJson {
    fn from(r: &ScanReport) -> Self {
        ScanJson {
            base_status: r.base_status.name().to_string(),
            samples: r
                .samples
                .iter()
                .map(|s| SampleJson {
                    t: rational_string(&s.t),
                    point: point_strings(&s.point),
                    on_locus: s.on_locus,
                    status: s.status.name().to_string(),
                    certificate: s.status.certificate().map(CertificateJson::from),
                })
                .collect(),
            verdict: r.verdict.label().to_string(),
            witness: match r.verdict {
                crate::germ::Verdict::Unstable { witness } => Some(witness),
                _ => None,
            },
        }
    }
}

impl From<&WeierstrassData> for WeierstrassJson {
    fn from(w: &WeierstrassData) -> Self {
        WeierstrassJson {
            degree: w.degree,
            var: w.distinguished.to_string(),
            unit: terms_json(w.unit.body()),
            coefficients: w
                .coefficients
                .iter()
                .map(|e| terms_json(e.body()))
                .collect(),
        }
    }
}
