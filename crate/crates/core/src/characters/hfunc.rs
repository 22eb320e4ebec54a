//! The factorial complete-symmetric analogues `h_m` and their one-part
//! expansions.

use rustc_hash::FxHashMap;

use crate::algebra::{gf_coeff, MultiPoly, VarTable};
use crate::{AlgebraError, Result};

use super::GroupKind;

/// `h_m` over the alphabet `x_p..x_q` (with bars for sp/so, and the extra
/// `(1+t)` factor for so), with `a_1..a_{m+(q-p+1)-1}` in the generating
/// function. An empty range `p > q` is allowed.
pub fn h_range(kind: GroupKind, m: i64, p: usize, q: usize, vt: &VarTable) -> Result<MultiPoly> {
    if m < 0 {
        return Ok(MultiPoly::zero());
    }
    if m == 0 {
        return Ok(MultiPoly::one());
    }
    let vars = if q >= p { q - p + 1 } else { 0 };
    if q > vt.n() || p == 0 {
        return Err(AlgebraError::VarTableMismatch(format!("x{p}..x{q}")).into());
    }
    let a_len = m + vars as i64 - 1;
    if a_len > 0 {
        vt.require_a(a_len as usize)?;
    }
    let mut geometric = Vec::new();
    for i in p..=q {
        geometric.push(MultiPoly::x(i));
        if kind != GroupKind::Gl {
            geometric.push(MultiPoly::xbar(i));
        }
    }
    let mut linear: Vec<MultiPoly> = (1..=a_len).map(MultiPoly::a).collect();
    if kind == GroupKind::So {
        linear.push(MultiPoly::one());
    }
    Ok(gf_coeff(m, &geometric, &linear))
}

/// `h_m(x^{(d)} | a)`: the flagged alphabet `x_d..x_n`.
pub fn h_factorial(kind: GroupKind, m: i64, d: usize, vt: &VarTable) -> Result<MultiPoly> {
    h_range(kind, m, d, vt.n(), vt)
}

/// Memoized `h_m` values keyed by `(m, p, q)`; confined to one thread.
pub struct HFamily<'a> {
    kind: GroupKind,
    vt: &'a VarTable,
    cache: FxHashMap<(i64, usize, usize), MultiPoly>,
}

impl<'a> HFamily<'a> {
    pub fn new(kind: GroupKind, vt: &'a VarTable) -> Self {
        HFamily {
            kind,
            vt,
            cache: FxHashMap::default(),
        }
    }

    pub fn range(&mut self, m: i64, p: usize, q: usize) -> Result<MultiPoly> {
        let key = (m.max(-1), p, q);
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let v = h_range(self.kind, m, p, q, self.vt)?;
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    pub fn flagged(&mut self, m: i64, d: usize) -> Result<MultiPoly> {
        self.range(m, d, self.vt.n())
    }
}

/// Calls `f` with every weakly increasing sequence of length `len` over `1..=top`.
fn weakly_increasing(len: usize, top: usize, f: &mut impl FnMut(&[usize])) {
    fn go(seq: &mut Vec<usize>, len: usize, top: usize, f: &mut impl FnMut(&[usize])) {
        if seq.len() == len {
            f(seq);
            return;
        }
        let from = seq.last().copied().unwrap_or(1);
        for i in from..=top {
            seq.push(i);
            go(seq, len, top, f);
            seq.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, top, f);
}

/// `z_i` in the interleaved alphabet `(x_1, x̄_1, x_2, x̄_2, …)`.
fn z(i: usize) -> MultiPoly {
    if i % 2 == 1 {
        MultiPoly::x(i.div_ceil(2))
    } else {
        MultiPoly::xbar(i / 2)
    }
}

/// Sum over weakly increasing index sequences of products of shifted linear
/// factors `var(i_j) + a_{i_j + j + offset}`.
fn index_sum(len: usize, top: usize, var: impl Fn(usize) -> MultiPoly, offset: i64) -> MultiPoly {
    let mut total = MultiPoly::zero();
    weakly_increasing(len, top, &mut |seq| {
        let term: MultiPoly = seq
            .iter()
            .enumerate()
            .map(|(j, &i)| &var(i) + &MultiPoly::a(i as i64 + j as i64 + 1 + offset))
            .product();
        total += &term;
    });
    total
}

/// `h_m` written out as an explicit sum of products of linear factors.
pub fn one_part_expansion(kind: GroupKind, m: usize, vt: &VarTable) -> Result<MultiPoly> {
    let n = vt.n();
    let out = match kind {
        GroupKind::Gl => index_sum(m, n, MultiPoly::x, -1),
        GroupKind::Sp => index_sum(m, 2 * n, z, -(n as i64) - 1),
        GroupKind::So => {
            let first = index_sum(m, 2 * n, z, -(n as i64));
            if m == 0 {
                first
            } else {
                let second = index_sum(m - 1, 2 * n, z, -(n as i64));
                &first + &(&second * &(&MultiPoly::one() - &MultiPoly::a((m + n) as i64)))
            }
        }
    };
    out.check_table(vt)?;
    Ok(out)
}
