//! Exact computation of factorial characters of GL(n), Sp(2n), SO(2n+1) and
//! of factorial Q-functions, by several independent routes, together with
//! suites that check the identities relating them.

pub mod algebra;
pub mod characters;
pub mod qfunctions;
pub mod registry;
pub mod suites;
pub mod tableau;

pub use algebra::{AlgebraError, MultiPoly, Rational, Var, VarTable};
pub use tableau::{Partition, ShapeError, StrictPartition, Tableau, TableauKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("unknown {what} {name:?}; available: {available}")]
    UnknownName {
        what: &'static str,
        name: String,
        available: String,
    },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
