//! Tableaux: diagram geometry, rule checking, weights and JSON.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{MultiPoly, VarTable};

use super::entry::{entry_weight, CellEntry, TableauKind};
use super::partition::Partition;
use super::ShapeError;

/// A named rule of one of the tableau definitions.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Alphabet,
    T1,
    T2,
    T3,
    T4,
    T5,
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
    Q6,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::Alphabet => "alphabet",
            Rule::T1 => "T1",
            Rule::T2 => "T2",
            Rule::T3 => "T3",
            Rule::T4 => "T4",
            Rule::T5 => "T5",
            Rule::Q1 => "Q1",
            Rule::Q2 => "Q2",
            Rule::Q3 => "Q3",
            Rule::Q4 => "Q4",
            Rule::Q5 => "Q5",
            Rule::Q6 => "Q6",
        };
        f.write_str(s)
    }
}

/// First violated rule, with its 1-based `(row, column)` box.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub cell: (usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {} fails at box ({}, {})", self.rule, self.cell.0, self.cell.1)
    }
}

impl TableauKind {
    /// Position of `e` in this kind's alphabet for rank `n`.
    pub fn rank(self, n: usize, e: CellEntry) -> Option<usize> {
        let in_range = |k: u8| k >= 1 && (k as usize) <= n;
        let r = match (self, e) {
            (TableauKind::GlChar, CellEntry::Unbarred(k)) if in_range(k) => k as usize - 1,
            (TableauKind::SpChar | TableauKind::SoChar, CellEntry::Unbarred(k)) if in_range(k) => 2 * (k as usize - 1),
            (TableauKind::SpChar | TableauKind::SoChar, CellEntry::Barred(k)) if in_range(k) => {
                2 * (k as usize - 1) + 1
            }
            (TableauKind::SoChar, CellEntry::Zero) => 2 * n,
            (TableauKind::GlQ, CellEntry::Primed(k)) if in_range(k) => 2 * (k as usize - 1),
            (TableauKind::GlQ, CellEntry::Unbarred(k)) if in_range(k) => 2 * (k as usize - 1) + 1,
            (TableauKind::SpQ | TableauKind::SoQ, e) => match e {
                CellEntry::Primed(k) if in_range(k) => 4 * (k as usize - 1),
                CellEntry::Unbarred(k) if in_range(k) => 4 * (k as usize - 1) + 1,
                CellEntry::BarredPrimed(k) if in_range(k) => 4 * (k as usize - 1) + 2,
                CellEntry::Barred(k) if in_range(k) => 4 * (k as usize - 1) + 3,
                CellEntry::ZeroPrimed if self == TableauKind::SoQ => 4 * n,
                _ => return None,
            },
            _ => return None,
        };
        Some(r)
    }
}

/// Box positions of a (shifted) diagram in row-major order, with the index
/// of each box's left and upper neighbours.
#[derive(Clone, Debug)]
pub struct Layout {
    pub kind: TableauKind,
    pub n: usize,
    pub shape: Vec<usize>,
    pub cells: Vec<(usize, usize)>,
    pub left: Vec<Option<usize>>,
    pub up: Vec<Option<usize>>,
    /// Previous diagonal box, tracked only where (Q5) applies.
    pub diag_prev: Vec<Option<usize>>,
}

impl Layout {
    pub fn new(kind: TableauKind, shape: &[usize], n: usize) -> Result<Self, ShapeError> {
        let part = Partition::new(shape, n)?;
        if kind.is_q() && !part.is_strict() {
            return Err(ShapeError::NotStrict(shape.to_vec()));
        }
        let shape = part.parts().to_vec();
        let shift = |i: usize| if kind.is_q() { i } else { 1 };
        let mut cells = Vec::new();
        let mut row_start = Vec::new();
        for (r, &len) in shape.iter().enumerate() {
            let i = r + 1;
            row_start.push(cells.len());
            for p in 0..len {
                cells.push((i, shift(i) + p));
            }
        }
        let index = |i: usize, j: usize| -> Option<usize> {
            if i == 0 || i > shape.len() {
                return None;
            }
            let first = shift(i);
            if j < first || j >= first + shape[i - 1] {
                return None;
            }
            Some(row_start[i - 1] + (j - first))
        };
        let left = cells.iter().map(|&(i, j)| index(i, j - 1)).collect();
        let up = cells.iter().map(|&(i, j)| index(i - 1, j)).collect();
        let diag_prev = cells
            .iter()
            .map(|&(i, j)| {
                if matches!(kind, TableauKind::SpQ | TableauKind::SoQ) && i == j && i > 1 {
                    index(i - 1, i - 1)
                } else {
                    None
                }
            })
            .collect();
        Ok(Layout {
            kind,
            n,
            shape,
            cells,
            left,
            up,
            diag_prev,
        })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Checks every rule that box `p` holding `e` can violate given its
    /// neighbours; rules are tried in definition order.
    pub fn check_cell(
        &self,
        p: usize,
        e: CellEntry,
        left: Option<CellEntry>,
        up: Option<CellEntry>,
        diag_prev: Option<CellEntry>,
    ) -> Result<(), Rule> {
        let kind = self.kind;
        let n = self.n;
        let (i, j) = self.cells[p];
        let r = kind.rank(n, e).ok_or(Rule::Alphabet)?;
        let rank = |x: CellEntry| kind.rank(n, x).unwrap_or(usize::MAX);
        if kind.is_q() {
            if left.is_some_and(|l| rank(l) > r) {
                return Err(Rule::Q1);
            }
            if up.is_some_and(|u| rank(u) > r) {
                return Err(Rule::Q2);
            }
            if !e.is_primed() && up == Some(e) {
                return Err(Rule::Q3);
            }
            if e.is_primed() && left == Some(e) {
                return Err(Rule::Q4);
            }
            if let Some(d) = diag_prev {
                if d.index() == e.index() {
                    return Err(Rule::Q5);
                }
            }
            if kind == TableauKind::SoQ && i == j && e == CellEntry::ZeroPrimed {
                return Err(Rule::Q6);
            }
        } else {
            if left.is_some_and(|l| rank(l) > r) {
                return Err(Rule::T1);
            }
            if up.is_some_and(|u| rank(u) > r) {
                return Err(Rule::T2);
            }
            if !e.is_zero() && up == Some(e) {
                return Err(Rule::T3);
            }
            if kind != TableauKind::GlChar && e.index().is_some_and(|k| (k as usize) < i) {
                return Err(Rule::T4);
            }
            if kind == TableauKind::SoChar && e.is_zero() && left.is_some_and(|l| l.is_zero()) {
                return Err(Rule::T5);
            }
        }
        Ok(())
    }

    /// Weight of every alphabet letter in every box, indexed `[box][rank]`.
    pub fn weight_table(&self) -> Vec<Vec<MultiPoly>> {
        let alphabet = self.kind.alphabet(self.n);
        self.cells
            .iter()
            .map(|&(i, j)| {
                alphabet
                    .iter()
                    .map(|&e| entry_weight(self.kind, self.n, e, i, j))
                    .collect()
            })
            .collect()
    }
}

/// A filled (shifted) Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    kind: TableauKind,
    n: usize,
    shape: Vec<usize>,
    rows: Vec<Vec<CellEntry>>,
}

impl Tableau {
    /// Checks only that the rows fit the shape; see [`Tableau::validate`].
    pub fn new(kind: TableauKind, n: usize, rows: Vec<Vec<CellEntry>>) -> Result<Self, ShapeError> {
        let shape: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let layout = Layout::new(kind, &shape, n)?;
        if layout.shape != shape {
            return Err(ShapeError::NotAPartition(shape));
        }
        Ok(Tableau { kind, n, shape, rows })
    }

    pub(crate) fn from_flat(layout: &Layout, entries: &[CellEntry]) -> Self {
        let mut rows = Vec::with_capacity(layout.shape.len());
        let mut k = 0;
        for &len in &layout.shape {
            rows.push(entries[k..k + len].to_vec());
            k += len;
        }
        Tableau {
            kind: layout.kind,
            n: layout.n,
            shape: layout.shape.clone(),
            rows,
        }
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<CellEntry>] {
        &self.rows
    }

    pub fn layout(&self) -> Layout {
        Layout::new(self.kind, &self.shape, self.n).expect("shape checked at construction")
    }

    /// Entries paired with their 1-based `(row, column)` boxes.
    pub fn cells(&self) -> Vec<((usize, usize), CellEntry)> {
        let layout = self.layout();
        layout
            .cells
            .iter()
            .copied()
            .zip(self.rows.iter().flatten().copied())
            .collect()
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let layout = self.layout();
        let flat: Vec<CellEntry> = self.rows.iter().flatten().copied().collect();
        for p in 0..layout.len() {
            let get = |q: Option<usize>| q.map(|q| flat[q]);
            layout
                .check_cell(
                    p,
                    flat[p],
                    get(layout.left[p]),
                    get(layout.up[p]),
                    get(layout.diag_prev[p]),
                )
                .map_err(|rule| Violation {
                    rule,
                    cell: layout.cells[p],
                })?;
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Product of the cell weights, checked against `vt`.
    pub fn weight(&self, vt: &VarTable) -> Result<MultiPoly, ShapeError> {
        self.validate().map_err(ShapeError::Invalid)?;
        let w: MultiPoly = self
            .cells()
            .into_iter()
            .map(|((i, j), e)| entry_weight(self.kind, self.n, e, i, j))
            .product();
        w.check_table(vt)?;
        Ok(w)
    }

    /// Cell weights laid out like the tableau.
    pub fn weight_grid(&self) -> Vec<Vec<MultiPoly>> {
        let mut cells = self.cells().into_iter();
        self.shape
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        let ((i, j), e) = cells.next().expect("cell count matches shape");
                        entry_weight(self.kind, self.n, e, i, j)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.token()).collect())
            .collect();
        json!({ "kind": self.kind.name(), "shape": self.shape, "n": self.n, "cells": cells })
    }

    pub fn from_json(v: &Value) -> Result<Self, ShapeError> {
        let bad = |m: &str| ShapeError::BadJson(m.to_string());
        let kind: TableauKind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("kind"))?
            .parse()?;
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("n"))? as usize;
        let rows = v
            .get("cells")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("cells"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("row"))?
                    .iter()
                    .map(|t| t.as_str().ok_or_else(|| bad("entry"))?.parse())
                    .collect::<Result<Vec<CellEntry>, ShapeError>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Tableau::new(kind, n, rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            if self.kind.is_q() {
                write!(f, "{}", "  ".repeat(r))?;
            }
            let toks: Vec<String> = row.iter().map(|e| e.token()).collect();
            write!(f, "{}", toks.join(" "))?;
        }
        Ok(())
    }
}

/// Shorthand used in tests and examples: `"1 1bar 2 4bar / 3 4 0"`.
pub fn parse_rows(s: &str) -> Result<Vec<Vec<CellEntry>>, ShapeError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|row| row.split_whitespace().map(str::parse).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(kind: TableauKind, n: usize, s: &str) -> Tableau {
        Tableau::new(kind, n, parse_rows(s).unwrap()).unwrap()
    }

    #[test]
    fn running_examples_are_valid() {
        assert!(tab(TableauKind::GlChar, 4, "1 1 2 4 / 2 3 3 / 4 4 4").is_valid());
        assert!(tab(TableauKind::SpChar, 4, "1 1bar 2 4bar / 3bar 4 4 / 4 4bar 4bar").is_valid());
        assert!(tab(TableauKind::SoChar, 4, "1 1bar 2 4bar / 3 4 0 / 4 4bar 0").is_valid());
        assert!(tab(
            TableauKind::GlQ,
            4,
            "1prime 1 2prime 2 3prime 4 / 2 3prime 3 3 / 4prime 4 4"
        )
        .is_valid());
        assert!(tab(
            TableauKind::SpQ,
            4,
            "1 1bar 2prime 2barprime 3 3 / 2bar 2bar 3 4prime / 4prime 4 4bar"
        )
        .is_valid());
        assert!(tab(
            TableauKind::SoQ,
            4,
            "1 1bar 2prime 2barprime 3 0prime / 2barprime 2bar 3 4prime / 4prime 4 0prime"
        )
        .is_valid());
    }

    #[test]
    fn violations_are_named() {
        let t = tab(TableauKind::GlChar, 2, "1 / 1");
        assert_eq!(
            t.validate(),
            Err(Violation {
                rule: Rule::T3,
                cell: (2, 1)
            })
        );
        let t = tab(TableauKind::SpChar, 2, "1 / 1bar");
        assert_eq!(t.validate().unwrap_err().rule, Rule::T4);
        let t = tab(TableauKind::SoChar, 2, "0 0");
        assert_eq!(
            t.validate(),
            Err(Violation {
                rule: Rule::T5,
                cell: (1, 2)
            })
        );
        let t = tab(TableauKind::GlQ, 2, "1prime 1prime");
        assert_eq!(t.validate().unwrap_err().rule, Rule::Q4);
        let t = tab(TableauKind::SpQ, 2, "1 1bar / 1bar");
        assert_eq!(
            t.validate(),
            Err(Violation {
                rule: Rule::Q3,
                cell: (2, 2)
            })
        );
        let t = tab(TableauKind::SpQ, 2, "1 1 / 1bar");
        assert_eq!(
            t.validate(),
            Err(Violation {
                rule: Rule::Q5,
                cell: (2, 2)
            })
        );
        let t = tab(TableauKind::SoQ, 1, "0prime");
        assert_eq!(t.validate().unwrap_err().rule, Rule::Q6);
        let t = tab(TableauKind::GlChar, 2, "3");
        assert_eq!(t.validate().unwrap_err().rule, Rule::Alphabet);
    }

    #[test]
    fn zero_may_repeat_down_a_column() {
        assert!(tab(TableauKind::SoChar, 2, "0 / 0").is_valid());
        assert!(tab(TableauKind::SoChar, 3, "2 0 / 2bar 0").is_valid());
    }

    #[test]
    fn shape_errors() {
        assert!(Tableau::new(TableauKind::GlChar, 2, parse_rows("1 / 2 2").unwrap()).is_err());
        assert!(Tableau::new(TableauKind::GlQ, 2, parse_rows("1 2 / 2 2").unwrap()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = tab(TableauKind::SpChar, 4, "1 1bar 2 4bar / 3bar 4 4 / 4 4bar 4bar");
        let v = t.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"kind":"spChar","shape":[4,3,3],"n":4,"cells":[["1","1bar","2","4bar"],["3bar","4","4"],["4","4bar","4bar"]]}"#
        );
        assert_eq!(Tableau::from_json(&v).unwrap(), t);
    }
}
