//! Tableau families, their alphabets, and per-cell weights.

use std::fmt;
use std::str::FromStr;

use crate::algebra::MultiPoly;

use super::ShapeError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableauKind {
    GlChar,
    SpChar,
    SoChar,
    GlQ,
    SpQ,
    SoQ,
}

impl TableauKind {
    pub const ALL: [TableauKind; 6] = [
        TableauKind::GlChar,
        TableauKind::SpChar,
        TableauKind::SoChar,
        TableauKind::GlQ,
        TableauKind::SpQ,
        TableauKind::SoQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableauKind::GlChar => "glChar",
            TableauKind::SpChar => "spChar",
            TableauKind::SoChar => "soChar",
            TableauKind::GlQ => "glQ",
            TableauKind::SpQ => "spQ",
            TableauKind::SoQ => "soQ",
        }
    }

    /// Q kinds live on shifted diagrams with primed alphabets.
    pub fn is_q(self) -> bool {
        matches!(self, TableauKind::GlQ | TableauKind::SpQ | TableauKind::SoQ)
    }

    pub fn has_bars(self) -> bool {
        !matches!(self, TableauKind::GlChar | TableauKind::GlQ)
    }

    /// Entries in increasing order.
    pub fn alphabet(self, n: usize) -> Vec<CellEntry> {
        let n = n as u8;
        let mut out = Vec::new();
        for k in 1..=n {
            match self {
                TableauKind::GlChar => out.push(CellEntry::Unbarred(k)),
                TableauKind::SpChar | TableauKind::SoChar => {
                    out.extend([CellEntry::Unbarred(k), CellEntry::Barred(k)]);
                }
                TableauKind::GlQ => out.extend([CellEntry::Primed(k), CellEntry::Unbarred(k)]),
                TableauKind::SpQ | TableauKind::SoQ => out.extend([
                    CellEntry::Primed(k),
                    CellEntry::Unbarred(k),
                    CellEntry::BarredPrimed(k),
                    CellEntry::Barred(k),
                ]),
            }
        }
        match self {
            TableauKind::SoChar => out.push(CellEntry::Zero),
            TableauKind::SoQ => out.push(CellEntry::ZeroPrimed),
            _ => {}
        }
        out
    }

    /// Lattice row of an entry on the path side: `k` for gl kinds; `2k-1`
    /// (unbarred) or `2k` (barred) otherwise; zeros sit on row `2n+1`.
    pub fn lattice_row(self, n: usize, e: CellEntry) -> usize {
        match e.index() {
            None => 2 * n + 1,
            Some(k) => {
                let k = k as usize;
                if self.has_bars() {
                    if e.is_barred() {
                        2 * k
                    } else {
                        2 * k - 1
                    }
                } else {
                    k
                }
            }
        }
    }

    /// Number of lattice rows on the path side.
    pub fn lattice_rows(self, n: usize) -> usize {
        match self {
            TableauKind::GlChar | TableauKind::GlQ => n,
            TableauKind::SpChar | TableauKind::SpQ => 2 * n,
            TableauKind::SoChar | TableauKind::SoQ => 2 * n + 1,
        }
    }
}

impl fmt::Display for TableauKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableauKind {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        TableauKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ShapeError::UnknownKind(s.to_string()))
    }
}

/// One box of a tableau: `k`, `k̄`, `k′`, `k̄′`, `0` or `0′`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CellEntry {
    Unbarred(u8),
    Barred(u8),
    Primed(u8),
    BarredPrimed(u8),
    Zero,
    ZeroPrimed,
}

impl CellEntry {
    pub fn index(self) -> Option<u8> {
        match self {
            CellEntry::Unbarred(k) | CellEntry::Barred(k) | CellEntry::Primed(k) | CellEntry::BarredPrimed(k) => {
                Some(k)
            }
            CellEntry::Zero | CellEntry::ZeroPrimed => None,
        }
    }

    pub fn is_primed(self) -> bool {
        matches!(
            self,
            CellEntry::Primed(_) | CellEntry::BarredPrimed(_) | CellEntry::ZeroPrimed
        )
    }

    pub fn is_barred(self) -> bool {
        matches!(self, CellEntry::Barred(_) | CellEntry::BarredPrimed(_))
    }

    pub fn is_zero(self) -> bool {
        matches!(self, CellEntry::Zero | CellEntry::ZeroPrimed)
    }

    pub fn token(self) -> String {
        match self {
            CellEntry::Unbarred(k) => format!("{k}"),
            CellEntry::Barred(k) => format!("{k}bar"),
            CellEntry::Primed(k) => format!("{k}prime"),
            CellEntry::BarredPrimed(k) => format!("{k}barprime"),
            CellEntry::Zero => "0".into(),
            CellEntry::ZeroPrimed => "0prime".into(),
        }
    }
}

impl fmt::Display for CellEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for CellEntry {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let bad = || ShapeError::BadEntry(s.to_string());
        match s {
            "0" => return Ok(CellEntry::Zero),
            "0prime" => return Ok(CellEntry::ZeroPrimed),
            _ => {}
        }
        let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
        let k: u8 = digits.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match &s[digits.len()..] {
            "" => Ok(CellEntry::Unbarred(k)),
            "bar" => Ok(CellEntry::Barred(k)),
            "prime" => Ok(CellEntry::Primed(k)),
            "barprime" => Ok(CellEntry::BarredPrimed(k)),
            _ => Err(bad()),
        }
    }
}

/// Weight of entry `e` in box `(i, j)` (1-based, column counted in the
/// unshifted or shifted diagram as appropriate).
pub fn entry_weight(kind: TableauKind, n: usize, e: CellEntry, i: usize, j: usize) -> MultiPoly {
    let n = n as i64;
    let (i, j) = (i as i64, j as i64);
    let k = e.index().map(|k| k as i64).unwrap_or(0);
    let a = |m: i64| MultiPoly::a(m);
    match kind {
        TableauKind::GlChar => &MultiPoly::x(k as usize) + &a(k + j - i),
        TableauKind::SpChar => match e {
            CellEntry::Barred(_) => &MultiPoly::xbar(k as usize) + &a(2 * k - n + j - i),
            _ => &MultiPoly::x(k as usize) + &a(2 * k - 1 - n + j - i),
        },
        TableauKind::SoChar => match e {
            CellEntry::Zero => &MultiPoly::one() - &a(n + 1 + j - i),
            CellEntry::Barred(_) => &MultiPoly::xbar(k as usize) + &a(2 * k + 1 - n + j - i),
            _ => &MultiPoly::x(k as usize) + &a(2 * k - n + j - i),
        },
        TableauKind::GlQ | TableauKind::SpQ | TableauKind::SoQ => {
            let s = a(j - i);
            let k = k as usize;
            match e {
                CellEntry::Unbarred(_) => &MultiPoly::x(k) + &s,
                CellEntry::Barred(_) => &MultiPoly::xbar(k) + &s,
                CellEntry::Primed(_) => &MultiPoly::y(k) - &s,
                CellEntry::BarredPrimed(_) => &MultiPoly::ybar(k) - &s,
                CellEntry::ZeroPrimed => &MultiPoly::one() - &s,
                CellEntry::Zero => unreachable!("0 is not in a Q alphabet"),
            }
        }
    }
}
