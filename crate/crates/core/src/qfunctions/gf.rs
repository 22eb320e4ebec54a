//! Generating-function families behind the determinantal Q-function formulas.

use crate::algebra::{gf_coeff, MultiPoly, VarTable};
use crate::Result;

use super::QKind;

fn require_a(len: i64, vt: &VarTable) -> Result<()> {
    if len > 0 {
        vt.require_a(len as usize)?;
    }
    Ok(())
}

/// `[t^m] Π_i 1/(1 − t u_i) · Π_j (1 + t v_j) · Π_{k ≤ m+r−s−1} (1 + t a_k)`
/// with `r = |u|`, `s = |v|`.
pub fn qtilde(m: i64, u: &[MultiPoly], v: &[MultiPoly], vt: &VarTable) -> Result<MultiPoly> {
    if m < 0 {
        return Ok(MultiPoly::zero());
    }
    let a_len = m + u.len() as i64 - v.len() as i64 - 1;
    require_a(a_len, vt)?;
    let mut linear = v.to_vec();
    linear.extend((1..=a_len).map(MultiPoly::a));
    Ok(gf_coeff(m, u, &linear))
}

/// `x_p..x_n`, followed by `x̄_p..x̄_n` when `barred`.
pub fn x_block(p: usize, n: usize, barred: bool) -> Vec<MultiPoly> {
    let mut out: Vec<MultiPoly> = (p..=n).map(MultiPoly::x).collect();
    if barred {
        out.extend((p..=n).map(MultiPoly::xbar));
    }
    out
}

/// `y_p..y_n`, followed by `ȳ_p..ȳ_n` when `barred`.
pub fn y_block(p: usize, n: usize, barred: bool) -> Vec<MultiPoly> {
    let mut out: Vec<MultiPoly> = (p..=n).map(MultiPoly::y).collect();
    if barred {
        out.extend((p..=n).map(MultiPoly::ybar));
    }
    out
}

/// `[t^m]` of `Π_{j>q}(1+t y_j)[(1+t ȳ_j)] · Π_{k ≤ m+q−p}(1+t a_k)
/// · [(1+t)] / Π_{i ≥ p}(1−t x_i)[(1−t x̄_i)]`.
///
/// The barred `y` factors are taken as `(1 + t ȳ_j)`, matching the
/// reductions to `q_md` and `h_m`.
pub fn f_mpqn(kind: QKind, m: i64, p: usize, q: usize, vt: &VarTable) -> Result<MultiPoly> {
    let n = vt.n();
    if !(1 <= p && p <= q && q <= n) {
        return Err(crate::Error::Invalid(format!(
            "f needs 1 <= p <= q <= n, got p={p} q={q} n={n}"
        )));
    }
    if m < 0 {
        return Ok(MultiPoly::zero());
    }
    let a_len = m + q as i64 - p as i64;
    require_a(a_len, vt)?;
    let bars = kind != QKind::Gl;
    let mut linear = y_block(q + 1, n, bars);
    linear.extend((1..=a_len).map(MultiPoly::a));
    if kind == QKind::So {
        linear.push(MultiPoly::one());
    }
    Ok(gf_coeff(m, &x_block(p, n, bars), &linear))
}

/// `q_m` on the flag `d`: `y` from `d+1`, `x` from `d`, `a_1..a_m`.
pub fn q_md(kind: QKind, m: i64, d: usize, vt: &VarTable) -> Result<MultiPoly> {
    f_mpqn(kind, m, d, d, vt)
}

/// `x_d + y_d`, plus `x̄_d + ȳ_d` for sp and so.
pub fn diagonal_factor(kind: QKind, d: usize) -> MultiPoly {
    let mut f = &MultiPoly::x(d) + &MultiPoly::y(d);
    if kind != QKind::Gl {
        f += &(&MultiPoly::xbar(d) + &MultiPoly::ybar(d));
    }
    f
}
