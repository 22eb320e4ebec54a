//! Variable identifiers and the variable table.

use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// A polynomial indeterminate.
///
/// The derived ordering is the global block order: every `X` before every
/// `Y`, then the factorial parameters `A`, then `T`. Indices are 1-based.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u16),
    Y(u16),
    A(u16),
    T,
}

impl Var {
    /// Laurent exponents are only meaningful for the `x` and `y` blocks.
    pub fn allows_negative(self) -> bool {
        matches!(self, Var::X(_) | Var::Y(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::A(i) => write!(f, "a{i}"),
            Var::T => write!(f, "t"),
        }
    }
}

impl FromStr for Var {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::UnknownVariable(s.to_string());
        if s == "t" {
            return Ok(Var::T);
        }
        let (head, idx) = s.split_at(1.min(s.len()));
        let i: u16 = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match head {
            "x" => Ok(Var::X(i)),
            "y" => Ok(Var::Y(i)),
            "a" => Ok(Var::A(i)),
            _ => Err(bad()),
        }
    }
}

/// The finite set of variables a computation may touch:
/// `x_1..x_n`, `y_1..y_n`, `a_1..a_max`, `t`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    n: usize,
    a_max: usize,
}

impl VarTable {
    pub fn new(n: usize, a_max: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::InvalidRank);
        }
        Ok(VarTable { n, a_max })
    }

    /// Table large enough for every route applied to a partition whose
    /// largest part is `largest_part`: `a_max = largest_part + 2n`.
    pub fn for_partition(n: usize, largest_part: usize) -> Result<Self, AlgebraError> {
        Self::new(n, largest_part + 2 * n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a_max(&self) -> usize {
        self.a_max
    }

    pub fn contains(&self, v: Var) -> bool {
        match v {
            Var::X(i) | Var::Y(i) => i >= 1 && (i as usize) <= self.n,
            Var::A(i) => i >= 1 && (i as usize) <= self.a_max,
            Var::T => true,
        }
    }

    /// All variables in table order.
    pub fn vars(&self) -> Vec<Var> {
        let n = self.n as u16;
        (1..=n)
            .map(Var::X)
            .chain((1..=n).map(Var::Y))
            .chain((1..=self.a_max as u16).map(Var::A))
            .chain(std::iter::once(Var::T))
            .collect()
    }

    pub fn x(&self, i: usize) -> Result<Var, AlgebraError> {
        self.checked(Var::X(i as u16))
    }

    pub fn y(&self, i: usize) -> Result<Var, AlgebraError> {
        self.checked(Var::Y(i as u16))
    }

    pub fn checked(&self, v: Var) -> Result<Var, AlgebraError> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(AlgebraError::VarTableMismatch(v.to_string()))
        }
    }

    /// Errors when `a_index` is beyond the retained factorial parameters.
    pub fn require_a(&self, a_index: usize) -> Result<(), AlgebraError> {
        if a_index > self.a_max {
            Err(AlgebraError::ParameterOutOfRange {
                index: a_index,
                a_max: self.a_max,
            })
        } else {
            Ok(())
        }
    }
}
