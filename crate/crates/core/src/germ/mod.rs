//! Classification of polynomial germs with re-checkable certificates.
//!
//! The analyzer is a partial decision procedure. It decides units, smooth
//! points, Weierstrass degree one and two in any dimension, and bivariate
//! germs whose Newton polygon settles the question; everything else comes
//! back [`GermStatus::Undetermined`] with a reason.

mod analyze;
mod polygon;
mod quadratic;
mod scan;
mod square;

use std::fmt;

use crate::algebra::{Monomial, Polynomial, Rational, Var};
use crate::series::TruncatedSeries;

pub use analyze::{analyze_germ, analyze_germ_detailed, GermAnalysis, GermQuery};
pub use polygon::{newton_polygon, polygon_verdict, Edge, NewtonPolygon};
pub use quadratic::quadratic_germ_test;
pub use scan::{scan_stability, ScanReport, ScanSample, Verdict};
pub use square::{is_local_square, LocalSquare};

/// A square root of a germ `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareRoot {
    /// `r` with `r² ≡ D` up to the series order.
    Explicit(TruncatedSeries),
    /// `D = x^monomial · unit` with even exponents and `unit(0) ≠ 0`; a root
    /// exists over C but `unit(0)` has no rational square root.
    Symbolic {
        monomial: Monomial,
        unit: Polynomial,
    },
}

/// Evidence attached to a classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The discriminant has odd minimal exponent in `var`; no square has.
    OddVariableOrder {
        var: Var,
        order: u32,
    },
    /// The lowest-degree form of the discriminant is not a square.
    LowestFormNotASquare {
        form: Polynomial,
        degree: u32,
    },
    MonomialUnitSquare {
        root: SquareRoot,
    },
    /// `z_j` divides the Weierstrass polynomial.
    DistinguishedVarDivides {
        var: Var,
    },
    MultiEdgePolygon {
        edges: usize,
    },
    BinomialCoprimeEdge {
        degree: u32,
        m: u32,
    },
    BinomialNoncoprimeEdge {
        gcd: u32,
    },
    /// Number of distinct roots of the edge polynomial.
    EdgePolynomialSplits {
        factors: usize,
    },
    SmoothPoint {
        gradient: Vec<Rational>,
    },
    NonzeroValue {
        value: Rational,
    },
    DegreeOne,
}

impl Certificate {
    /// Stable machine name, used in JSON output.
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::OddVariableOrder { .. } => "odd-order",
            Certificate::LowestFormNotASquare { .. } => "lowest-form-not-square",
            Certificate::MonomialUnitSquare { .. } => "monomial-unit-square",
            Certificate::DistinguishedVarDivides { .. } => "distinguished-var-divides",
            Certificate::MultiEdgePolygon { .. } => "multi-edge-polygon",
            Certificate::BinomialCoprimeEdge { .. } => "binomial-coprime-edge",
            Certificate::BinomialNoncoprimeEdge { .. } => "binomial-noncoprime-edge",
            Certificate::EdgePolynomialSplits { .. } => "edge-polynomial-splits",
            Certificate::SmoothPoint { .. } => "smooth-point",
            Certificate::NonzeroValue { .. } => "nonzero-value",
            Certificate::DegreeOne => "degree-one",
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::OddVariableOrder { var, order } => write!(f, "odd-order({var}, {order})"),
            Certificate::LowestFormNotASquare { form, degree } => {
                write!(f, "lowest-form-not-square({form}, degree {degree})")
            }
            Certificate::MonomialUnitSquare { root } => match root {
                SquareRoot::Explicit(r) => write!(f, "monomial-unit-square(root {})", r.body()),
                SquareRoot::Symbolic { monomial, unit } => {
                    write!(
                        f,
                        "monomial-unit-square({monomial} * ({unit}), root over C)"
                    )
                }
            },
            Certificate::DistinguishedVarDivides { var } => {
                write!(f, "distinguished-var-divides({var})")
            }
            Certificate::MultiEdgePolygon { edges } => {
                write!(f, "multi-edge-polygon({edges} edges)")
            }
            Certificate::BinomialCoprimeEdge { degree, m } => {
                write!(f, "binomial-coprime-edge({degree}, {m})")
            }
            Certificate::BinomialNoncoprimeEdge { gcd } => {
                write!(f, "binomial-noncoprime-edge(gcd {gcd})")
            }
            Certificate::EdgePolynomialSplits { factors } => {
                write!(f, "edge-polynomial-splits({factors} distinct roots)")
            }
            Certificate::SmoothPoint { gradient } => {
                f.write_str("smooth-point(gradient (")?;
                for (i, g) in gradient.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str("))")
            }
            Certificate::NonzeroValue { value } => write!(f, "nonzero-value({value})"),
            Certificate::DegreeOne => f.write_str("degree-one"),
        }
    }
}

/// Two non-unit factors of the Weierstrass polynomial, in the local
/// coordinates of the analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factors {
    pub first: TruncatedSeries,
    pub second: TruncatedSeries,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GermStatus {
    /// `f(p) ≠ 0`.
    Unit(Certificate),
    /// `f(p) = 0` and the gradient is nonzero.
    SmoothIrreducible(Certificate),
    SingularIrreducible(Certificate),
    SingularReducible {
        certificate: Certificate,
        factors: Option<Factors>,
    },
    Undetermined(String),
}

impl GermStatus {
    pub fn name(&self) -> &'static str {
        match self {
            GermStatus::Unit(_) => "Unit",
            GermStatus::SmoothIrreducible(_) => "SmoothIrreducible",
            GermStatus::SingularIrreducible(_) => "SingularIrreducible",
            GermStatus::SingularReducible { .. } => "SingularReducible",
            GermStatus::Undetermined(_) => "Undetermined",
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            GermStatus::Unit(c)
            | GermStatus::SmoothIrreducible(c)
            | GermStatus::SingularIrreducible(c) => Some(c),
            GermStatus::SingularReducible { certificate, .. } => Some(certificate),
            GermStatus::Undetermined(_) => None,
        }
    }

    pub fn factors(&self) -> Option<&Factors> {
        match self {
            GermStatus::SingularReducible { factors, .. } => factors.as_ref(),
            _ => None,
        }
    }

    /// Smooth or singular irreducible.
    pub fn is_irreducible(&self) -> bool {
        matches!(
            self,
            GermStatus::SmoothIrreducible(_) | GermStatus::SingularIrreducible(_)
        )
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, GermStatus::SingularReducible { .. })
    }

    pub fn is_undetermined(&self) -> bool {
        matches!(self, GermStatus::Undetermined(_))
    }
}

impl fmt::Display for GermStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GermStatus::Undetermined(reason) => write!(f, "Undetermined ({reason})"),
            other => write!(
                f,
                "{} [{}]",
                other.name(),
                other.certificate().expect("decided status")
            ),
        }
    }
}
