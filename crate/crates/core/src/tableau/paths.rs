//! Lattice-path images of tableaux.
//!
//! Coordinates are matrix-style `(row, column)` with rows increasing
//! downward. Q-side paths may start at half-integer rows, so points are
//! stored doubled.

use rustc_hash::FxHashSet;
use serde_json::{json, Value};

use crate::algebra::json::poly_to_json;
use crate::algebra::{MultiPoly, VarTable};

use super::entry::{CellEntry, TableauKind};
use super::filling::Tableau;

/// A lattice point stored as `(2·row, 2·column)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    r2: i64,
    c2: i64,
}

impl Point {
    pub fn new(r: i64, c: i64) -> Self {
        Point { r2: 2 * r, c2: 2 * c }
    }

    pub fn from_doubled(r2: i64, c2: i64) -> Self {
        Point { r2, c2 }
    }

    pub fn doubled(self) -> (i64, i64) {
        (self.r2, self.c2)
    }

    pub fn is_integral(self) -> bool {
        self.r2 % 2 == 0 && self.c2 % 2 == 0
    }

    fn below(self) -> Point {
        Point {
            r2: self.r2 + 2,
            c2: self.c2,
        }
    }

    /// Coordinates as exact strings like coefficients: `"3"`, `"7/2"`.
    pub fn to_json(self) -> Value {
        let half = |v: i64| {
            if v % 2 == 0 {
                (v / 2).to_string()
            } else {
                format!("{v}/2")
            }
        };
        json!([half(self.r2), half(self.c2)])
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeType {
    Horizontal,
    Vertical,
    Diagonal,
    /// Initial edge onto column 1; the two bends distinguish an unprimed
    /// from a primed diagonal entry.
    Curved {
        primed: bool,
    },
}

impl EdgeType {
    pub fn tag(self) -> &'static str {
        match self {
            EdgeType::Horizontal => "H",
            EdgeType::Vertical => "V",
            EdgeType::Diagonal => "D",
            EdgeType::Curved { .. } => "C",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: Point,
    pub to: Point,
    pub kind: EdgeType,
    pub weight: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pub start: Point,
    pub end: Point,
    pub edges: Vec<Edge>,
}

impl LatticePath {
    fn new(start: Point) -> Self {
        LatticePath {
            start,
            end: start,
            edges: Vec::new(),
        }
    }

    fn push(&mut self, to: Point, kind: EdgeType, weight: MultiPoly) {
        self.edges.push(Edge {
            from: self.end,
            to,
            kind,
            weight,
        });
        self.end = to;
    }

    fn down_to(&mut self, row: i64) {
        while self.end.r2 < 2 * row {
            let to = self.end.below();
            self.push(to, EdgeType::Vertical, MultiPoly::one());
        }
    }

    /// Integer lattice points visited, endpoints included.
    pub fn vertices(&self) -> Vec<Point> {
        std::iter::once(self.start)
            .chain(self.edges.iter().map(|e| e.to))
            .filter(|p| p.is_integral())
            .collect()
    }

    pub fn count(&self, kind: EdgeType) -> usize {
        self.edges.iter().filter(|e| e.kind == kind).count()
    }

    pub fn weight(&self) -> MultiPoly {
        self.edges.iter().map(|e| e.weight.clone()).product()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTuple {
    pub paths: Vec<LatticePath>,
}

impl PathTuple {
    pub fn weight(&self) -> MultiPoly {
        self.paths.iter().map(LatticePath::weight).product()
    }

    /// No lattice vertex is shared by two paths.
    pub fn is_non_intersecting(&self) -> bool {
        let mut seen: FxHashSet<Point> = FxHashSet::default();
        for p in &self.paths {
            let own: FxHashSet<Point> = p.vertices().into_iter().collect();
            if own.iter().any(|v| seen.contains(v)) {
                return false;
            }
            seen.extend(own);
        }
        true
    }

    /// The shape of the tuple without weights, for injectivity checks.
    pub fn geometry(&self) -> Vec<Vec<(Point, Point, EdgeType)>> {
        self.paths
            .iter()
            .map(|p| p.edges.iter().map(|e| (e.from, e.to, e.kind)).collect())
            .collect()
    }

    pub fn to_json(&self, vt: &VarTable) -> Value {
        let paths: Vec<Value> = self
            .paths
            .iter()
            .map(|p| {
                let edges: Vec<Value> = p
                    .edges
                    .iter()
                    .map(|e| {
                        let mut j = json!({
                            "from": e.from.to_json(),
                            "to": e.to.to_json(),
                            "type": e.kind.tag(),
                            "w": poly_to_json(&e.weight, vt),
                        });
                        if let EdgeType::Curved { primed } = e.kind {
                            j["primed"] = json!(primed);
                        }
                        j
                    })
                    .collect();
                json!({ "start": p.start.to_json(), "end": p.end.to_json(), "edges": edges })
            })
            .collect();
        json!({ "paths": paths })
    }
}

/// `z_r` for lattice row `r`: `x_r` on gl lattices, otherwise `x_k` on row
/// `2k-1` and `x̄_k` on row `2k`; primed entries use `y` in place of `x`.
fn row_variable(kind: TableauKind, r: i64, primed: bool) -> MultiPoly {
    let pick = |k: usize, barred: bool| match (primed, barred) {
        (false, false) => MultiPoly::x(k),
        (false, true) => MultiPoly::xbar(k),
        (true, false) => MultiPoly::y(k),
        (true, true) => MultiPoly::ybar(k),
    };
    if kind.has_bars() {
        pick(((r + 1) / 2) as usize, r % 2 == 0)
    } else {
        pick(r as usize, false)
    }
}

/// The non-intersecting tuple encoding a valid tableau.
///
/// Character kinds give one path per row `1..=n` (zero rows give straight
/// vertical paths); Q kinds give one path per nonzero row.
pub fn tableau_to_paths(t: &Tableau) -> PathTuple {
    if t.kind().is_q() {
        q_paths(t)
    } else {
        char_paths(t)
    }
}

fn char_paths(t: &Tableau) -> PathTuple {
    let kind = t.kind();
    let n = t.n() as i64;
    let bottom = kind.lattice_rows(t.n()) as i64;
    let mut paths = Vec::new();
    for i in 1..=n {
        let row: &[CellEntry] = t.rows().get(i as usize - 1).map(|r| r.as_slice()).unwrap_or(&[]);
        let start_row = if kind.has_bars() { 2 * i - 1 } else { i };
        let mut path = LatticePath::new(Point::new(start_row, n - i + 1));
        for (p, &e) in row.iter().enumerate() {
            let c = n - i + 1 + (p as i64 + 1);
            if e.is_zero() {
                path.down_to(2 * n);
                path.push(
                    Point::new(2 * n + 1, c),
                    EdgeType::Diagonal,
                    &MultiPoly::one() - &MultiPoly::a(c),
                );
                continue;
            }
            let r = kind.lattice_row(t.n(), e) as i64;
            path.down_to(r);
            let shift = match kind {
                TableauKind::GlChar => r + c - n - 1,
                TableauKind::SpChar => r + c - 2 * n - 1,
                _ => r + c - 2 * n,
            };
            let w = &row_variable(kind, r, false) + &MultiPoly::a(shift);
            path.push(Point::new(r, c), EdgeType::Horizontal, w);
        }
        path.down_to(bottom);
        paths.push(path);
    }
    PathTuple { paths }
}

fn q_paths(t: &Tableau) -> PathTuple {
    let kind = t.kind();
    let bottom = kind.lattice_rows(t.n()) as i64;
    let mut paths = Vec::new();
    for row in t.rows() {
        let diag = row[0];
        let k = diag.index().expect("no zero on the diagonal") as i64;
        let start = if kind.has_bars() {
            Point::from_doubled(4 * k - 1, 0)
        } else {
            Point::new(k, 0)
        };
        let mut path = LatticePath::new(start);
        let r0 = kind.lattice_row(t.n(), diag) as i64;
        path.push(
            Point::new(r0, 1),
            EdgeType::Curved {
                primed: diag.is_primed(),
            },
            row_variable(kind, r0, diag.is_primed()),
        );
        for (p, &e) in row.iter().enumerate().skip(1) {
            let c = p as i64 + 1;
            let r = kind.lattice_row(t.n(), e) as i64;
            let a = MultiPoly::a(c - 1);
            if e.is_primed() {
                path.down_to(r - 1);
                let w = if e.is_zero() {
                    MultiPoly::one()
                } else {
                    row_variable(kind, r, true)
                };
                path.push(Point::new(r, c), EdgeType::Diagonal, &w - &a);
            } else {
                path.down_to(r);
                path.push(
                    Point::new(r, c),
                    EdgeType::Horizontal,
                    &row_variable(kind, r, false) + &a,
                );
            }
        }
        path.down_to(bottom);
        paths.push(path);
    }
    PathTuple { paths }
}
