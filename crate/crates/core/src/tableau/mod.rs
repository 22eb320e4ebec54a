//! Partitions, tableau families, enumeration and lattice paths.

pub mod entry;
pub mod enumerate;
pub mod filling;
pub mod partition;
pub mod paths;

pub use entry::{entry_weight, CellEntry, TableauKind};
pub use enumerate::{
    count_tableaux, enumerate_tableaux, tableau_sum, weighted_tableau_sum, TableauIter, TableauWeight,
};
pub use filling::{parse_rows, Layout, Rule, Tableau, Violation};
pub use partition::{enumerate_partitions, parse_parts, Partition, StrictPartition};
pub use paths::{tableau_to_paths, Edge, EdgeType, LatticePath, PathTuple, Point};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("{0:?} is not weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("{0:?} is not a strict partition")]
    NotStrict(Vec<usize>),
    #[error("partition has {len} parts but n = {n}")]
    TooLong { len: usize, n: usize },
    #[error("cannot parse part list {0:?}")]
    BadPartList(String),
    #[error("unknown tableau kind {0:?}")]
    UnknownKind(String),
    #[error("unknown tableau entry {0:?}")]
    BadEntry(String),
    #[error("malformed tableau JSON: {0}")]
    BadJson(String),
    #[error("invalid tableau: {0}")]
    Invalid(Violation),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
