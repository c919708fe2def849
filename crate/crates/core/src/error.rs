use thiserror::Error;

use crate::algebra::Var;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable {var} out of range for a polynomial in {var_count} variables")]
    VariableOutOfRange { var: Var, var_count: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("series is not a unit: constant term is zero")]
    NotAUnit,
    #[error("polynomial does not vanish at the origin")]
    NonvanishingAtOrigin,
    #[error("polynomial is not regular in {var}")]
    NotRegular { var: Var },
    #[error("truncation order {order} is smaller than the Weierstrass degree {degree}")]
    OrderTooSmall { order: u32, degree: u32 },
    #[error("no shear made the polynomial regular in {var} after {attempts} attempts")]
    ShearsExhausted { var: Var, attempts: usize },
    #[error("polynomial has degree zero in {var}")]
    DegreeZero { var: Var },
    #[error("polynomial has degree {degree} in {var}, at least {required} required")]
    DegreeTooSmall {
        var: Var,
        degree: u32,
        required: u32,
    },
    #[error("leading coefficient in {var} is not a constant")]
    NonConstantLeadingCoefficient { var: Var },
    #[error("expected a Weierstrass polynomial of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("distinguished variable divides the Weierstrass polynomial")]
    DistinguishedVarDivides,
    #[error("invalid truncation order {0}")]
    InvalidOrder(u32),
    #[error("curve does not pass through the base point at t = 0")]
    CurveMissesBase,
    #[error("no parameter values given")]
    EmptySamples,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
