//! Exact Laurent-polynomial arithmetic over the rationals.

pub mod json;
pub mod matrix;
pub mod monomial;
pub mod ops;
pub mod poly;
pub mod rational;
pub mod series;
pub mod var;

pub use matrix::{determinant, determinant_bareiss, determinant_cofactor};
pub use monomial::Monomial;
pub use ops::{exact_div, factorial_power, poly_arith, ArithOp};
pub use poly::MultiPoly;
pub use rational::Rational;
pub use series::{gf_coeff, series_inverse_linear, TruncatedSeries};
pub use var::{Var, VarTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable {0} is not in the variable table")]
    VarTableMismatch(String),
    #[error("unknown variable name {0:?}")]
    UnknownVariable(String),
    #[error("rank n must be at least 1")]
    InvalidRank,
    #[error("factorial parameter a{index} is beyond the retained a{a_max}")]
    ParameterOutOfRange { index: usize, a_max: usize },
    #[error("negative exponent on {0}")]
    NegativeExponent(String),
    #[error("binding for {0} is not invertible")]
    NonInvertibleBinding(String),
    #[error("division is not exact")]
    NonExactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({rows} rows, a row of {cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("{0} is not an x or y variable")]
    NotAFactorialVariable(String),
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}
