//! Exact local analysis of polynomial germs at rational points.
//!
//! The crate covers the whole pipeline: sparse rational polynomials
//! ([`algebra`]), truncated power series ([`series`]), Weierstrass preparation
//! ([`weierstrass`]), Sylvester resultants ([`elimination`]) and the germ
//! classifier with its certificates ([`germ`]). [`parse`] and [`report`] hold
//! the textual and JSON surfaces used by the command-line tool.

pub mod algebra;
pub mod elimination;
mod error;
pub mod germ;
pub mod parse;
pub mod report;
pub mod series;
pub mod weierstrass;

pub use algebra::{int, rat, Monomial, Order, Point, Polynomial, Rational, Var};
pub use elimination::{coprime_at, discriminant, resultant, zero_set_discrete, CoprimeReport};
pub use error::{Error, Result};
pub use germ::{
    analyze_germ, analyze_germ_detailed, is_local_square, newton_polygon, polygon_verdict,
    quadratic_germ_test, scan_stability, Certificate, Factors, GermAnalysis, GermQuery, GermStatus,
    LocalSquare, NewtonPolygon, ScanReport, ScanSample, SquareRoot, Verdict,
};
pub use parse::{
    format_poly, parse_curve, parse_curve_coordinate, parse_poly, parse_rational,
    parse_rational_list, parse_var, ParseError,
};
pub use series::{SeriesSqrt, TruncatedSeries};
pub use weierstrass::{
    make_regular, regular_order, weierstrass_prepare, RegularityReport, Shear, WeierstrassData,
};
