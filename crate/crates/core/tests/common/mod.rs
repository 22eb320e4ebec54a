//! Oracles shared by the integration tests. Nothing here calls the library's
//! own rule checker or dimension logic.
#![allow(dead_code)]

use factchar::tableau::CellEntry;
use factchar::{MultiPoly, TableauKind};

/// Dimension of the GL(n) irreducible with highest weight `λ`, by hook-content.
pub fn gl_dimension(lambda: &[usize], n: usize) -> u128 {
    let conj = |j: usize| lambda.iter().filter(|&&p| p > j).count();
    let (mut num, mut den) = (1u128, 1u128);
    for (i, &row) in lambda.iter().enumerate() {
        for j in 0..row {
            num *= (n + j - i) as u128;
            den *= (row - j - 1 + conj(j) - i - 1 + 1) as u128;
        }
    }
    assert_eq!(num % den, 0);
    num / den
}

/// Weyl's product over positive roots, for `l = λ + ρ` and `ρ` both given
/// doubled so that SO(2n+1) stays integral.
fn weyl_bc(l: &[i128], rho: &[i128]) -> u128 {
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..l.len() {
        num *= l[i];
        den *= rho[i];
        for j in i + 1..l.len() {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= rho[i] * rho[i] - rho[j] * rho[j];
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as u128
}

pub fn sp_dimension(lambda: &[usize], n: usize) -> u128 {
    let rho: Vec<i128> = (0..n).map(|i| (n - i) as i128).collect();
    let l: Vec<i128> = (0..n)
        .map(|i| lambda.get(i).copied().unwrap_or(0) as i128 + rho[i])
        .collect();
    weyl_bc(&l, &rho)
}

pub fn so_odd_dimension(lambda: &[usize], n: usize) -> u128 {
    let rho: Vec<i128> = (0..n).map(|i| (2 * (n - i) - 1) as i128).collect();
    let l: Vec<i128> = (0..n)
        .map(|i| 2 * lambda.get(i).copied().unwrap_or(0) as i128 + rho[i])
        .collect();
    weyl_bc(&l, &rho)
}

/// Position in the kind's total order, computed from scratch: primes sit
/// just below their unprimed letter, bars above, zero on top.
fn order_key(kind: TableauKind, n: usize, e: CellEntry) -> usize {
    let (k, barred, primed) = match e {
        CellEntry::Unbarred(k) => (k as usize, false, false),
        CellEntry::Barred(k) => (k as usize, true, false),
        CellEntry::Primed(k) => (k as usize, false, true),
        CellEntry::BarredPrimed(k) => (k as usize, true, true),
        CellEntry::Zero => (n + 1, false, false),
        CellEntry::ZeroPrimed => (n + 1, false, true),
    };
    let base = if matches!(kind, TableauKind::GlChar | TableauKind::GlQ) {
        k
    } else {
        2 * k - usize::from(!barred)
    };
    2 * base - usize::from(primed)
}

fn is_zero(e: CellEntry) -> bool {
    matches!(e, CellEntry::Zero | CellEntry::ZeroPrimed)
}

fn primed(e: CellEntry) -> bool {
    matches!(
        e,
        CellEntry::Primed(_) | CellEntry::BarredPrimed(_) | CellEntry::ZeroPrimed
    )
}

fn index(e: CellEntry) -> Option<usize> {
    match e {
        CellEntry::Unbarred(k) | CellEntry::Barred(k) | CellEntry::Primed(k) | CellEntry::BarredPrimed(k) => {
            Some(k as usize)
        }
        _ => None,
    }
}

/// Direct reading of the tableau definitions on a filled (possibly shifted)
/// diagram. `rows[i][p]` sits in column `p + 1` (ordinary) or `i + p + 1`
/// (shifted).
pub fn oracle_valid(kind: TableauKind, n: usize, rows: &[Vec<CellEntry>]) -> bool {
    let shifted = kind.is_q();
    let key = |e| order_key(kind, n, e);
    let col = |i: usize, p: usize| if shifted { i + p } else { p };
    let at = |i: usize, c: usize| -> Option<CellEntry> {
        let row = rows.get(i)?;
        let p = if shifted { c.checked_sub(i)? } else { c };
        row.get(p).copied()
    };
    for (i, row) in rows.iter().enumerate() {
        for (p, &e) in row.iter().enumerate() {
            if !kind.alphabet(n).contains(&e) {
                return false;
            }
            if p > 0 {
                let left = row[p - 1];
                if key(left) > key(e) {
                    return false;
                }
                // (Q4): a primed letter may not repeat along a row.
                if shifted && left == e && primed(e) {
                    return false;
                }
            }
            if i > 0 {
                if let Some(up) = at(i - 1, col(i, p)) {
                    if key(up) > key(e) {
                        return false;
                    }
                    let repeat_forbidden = if shifted { !primed(e) } else { !is_zero(e) };
                    if up == e && repeat_forbidden {
                        return false;
                    }
                }
            }
        }
        if !shifted {
            // (T4): letters k and k̄ stay in rows 1..=k.
            if kind != TableauKind::GlChar && row.iter().any(|&e| index(e).is_some_and(|k| k < i + 1)) {
                return false;
            }
            if kind == TableauKind::SoChar && row.iter().filter(|&&e| is_zero(e)).count() > 1 {
                return false;
            }
        }
    }
    if shifted && kind != TableauKind::GlQ {
        let diag: Vec<CellEntry> = rows.iter().filter_map(|r| r.first().copied()).collect();
        if diag.iter().any(|&e| is_zero(e)) {
            return false;
        }
        for k in 1..=n {
            if diag.iter().filter(|&&e| index(e) == Some(k)).count() > 1 {
                return false;
            }
        }
    }
    true
}

/// Every filling of the shape by the kind's alphabet, checked by the oracle.
pub fn brute_force_count(kind: TableauKind, shape: &[usize], n: usize) -> usize {
    let alphabet = kind.alphabet(n);
    let cells: usize = shape.iter().sum();
    let mut digits = vec![0usize; cells];
    let mut count = 0;
    loop {
        let mut it = digits.iter().map(|&d| alphabet[d]);
        let rows: Vec<Vec<CellEntry>> = shape.iter().map(|&len| it.by_ref().take(len).collect()).collect();
        if oracle_valid(kind, n, &rows) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == cells {
                return count;
            }
            digits[pos] += 1;
            if digits[pos] < alphabet.len() {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

pub fn x(k: usize) -> MultiPoly {
    MultiPoly::x(k)
}
pub fn xb(k: usize) -> MultiPoly {
    MultiPoly::xbar(k)
}
pub fn y(k: usize) -> MultiPoly {
    MultiPoly::y(k)
}
pub fn yb(k: usize) -> MultiPoly {
    MultiPoly::ybar(k)
}
pub fn one() -> MultiPoly {
    MultiPoly::one()
}
/// `v + a_k`
pub fn pa(v: MultiPoly, k: i64) -> MultiPoly {
    &v + &MultiPoly::a(k)
}
/// `v − a_k`
pub fn ma(v: MultiPoly, k: i64) -> MultiPoly {
    &v - &MultiPoly::a(k)
}

/// A running-example tableau with its weight grid, factor by factor.
pub struct RunningExample {
    pub label: &'static str,
    pub kind: TableauKind,
    pub rows: &'static str,
    pub grid: Vec<Vec<MultiPoly>>,
}

/// The six running examples at `n = 4`, weight grids transcribed factor by factor.
pub fn running_examples() -> Vec<RunningExample> {
    vec![
        RunningExample {
            label: "glChar 433",
            kind: TableauKind::GlChar,
            rows: "1 1 2 4 / 2 3 3 / 4 4 4",
            grid: vec![
                vec![pa(x(1), 1), pa(x(1), 2), pa(x(2), 4), pa(x(4), 7)],
                vec![pa(x(2), 1), pa(x(3), 3), pa(x(3), 4)],
                vec![pa(x(4), 2), pa(x(4), 3), pa(x(4), 4)],
            ],
        },
        RunningExample {
            label: "spChar 433",
            kind: TableauKind::SpChar,
            rows: "1 1bar 2 4bar / 3bar 4 4 / 4 4bar 4bar",
            grid: vec![
                vec![x(1), xb(1), pa(x(2), 1), pa(xb(4), 7)],
                vec![pa(xb(3), 1), pa(x(4), 3), pa(x(4), 4)],
                vec![pa(x(4), 1), pa(xb(4), 3), pa(xb(4), 4)],
            ],
        },
        RunningExample {
            label: "soChar 433",
            kind: TableauKind::SoChar,
            rows: "1 1bar 2 4bar / 3 4 0 / 4 4bar 0",
            grid: vec![
                vec![x(1), xb(1), pa(x(2), 2), pa(xb(4), 8)],
                vec![pa(x(3), 1), pa(x(4), 4), ma(one(), 6)],
                vec![pa(x(4), 2), pa(xb(4), 4), ma(one(), 5)],
            ],
        },
        RunningExample {
            label: "glQ 643",
            kind: TableauKind::GlQ,
            rows: "1prime 1 2prime 2 3prime 4 / 2 3prime 3 3 / 4prime 4 4",
            grid: vec![
                vec![y(1), pa(x(1), 1), ma(y(2), 2), pa(x(2), 3), ma(y(3), 4), pa(x(4), 5)],
                vec![x(2), ma(y(3), 1), pa(x(3), 2), pa(x(3), 3)],
                vec![y(4), pa(x(4), 1), pa(x(4), 2)],
            ],
        },
        RunningExample {
            label: "spQ 643",
            kind: TableauKind::SpQ,
            rows: "1 1bar 2prime 2barprime 3 3 / 2bar 2bar 3 4prime / 4prime 4 4bar",
            grid: vec![
                vec![x(1), pa(xb(1), 1), ma(y(2), 2), ma(yb(2), 3), pa(x(3), 4), pa(x(3), 5)],
                vec![xb(2), pa(xb(2), 1), pa(x(3), 2), ma(y(4), 3)],
                vec![y(4), pa(x(4), 1), pa(xb(4), 2)],
            ],
        },
        RunningExample {
            label: "soQ 643",
            kind: TableauKind::SoQ,
            rows: "1 1bar 2prime 2barprime 3 0prime / 2barprime 2bar 3 4prime / 4prime 4 0prime",
            grid: vec![
                vec![x(1), pa(xb(1), 1), ma(y(2), 2), ma(yb(2), 3), pa(x(3), 4), ma(one(), 5)],
                vec![yb(2), pa(xb(2), 1), pa(x(3), 2), ma(y(4), 3)],
                vec![y(4), pa(x(4), 1), ma(one(), 2)],
            ],
        },
    ]
}
