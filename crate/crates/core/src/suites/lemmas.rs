//! Two-sided forms of the auxiliary identities. Each function returns
//! `(lhs, rhs)` so callers can report term counts as well as equality.

use crate::algebra::{MultiPoly, VarTable};
use crate::characters::{h_range, GroupKind};
use crate::qfunctions::{f_mpqn, q_md, qtilde, x_block, y_block, QKind};
use crate::Result;

type Sides = (MultiPoly, MultiPoly);

/// `h_m(x_i..x_{j-1}) − h_m(x_{i+1}..x_j)` against
/// `(x_i − x_j)[(1 − x̄_i x̄_j)] h_{m−1}(x_i..x_j)`, for `i < j`.
pub fn h_difference(kind: GroupKind, m: i64, i: usize, j: usize, vt: &VarTable) -> Result<Sides> {
    let lhs = &h_range(kind, m, i, j - 1, vt)? - &h_range(kind, m, i + 1, j, vt)?;
    let mut factor = &MultiPoly::x(i) - &MultiPoly::x(j);
    if kind != GroupKind::Gl {
        factor = &factor * &(&MultiPoly::one() - &(&MultiPoly::xbar(i) * &MultiPoly::xbar(j)));
    }
    let rhs = &factor * &h_range(kind, m - 1, i, j, vt)?;
    Ok((lhs, rhs))
}

/// `f_{m,p,q−1,n} − f_{m,p+1,q,n}` against
/// `(x_p + y_q [+ x̄_p + ȳ_q]) f_{m−1,p,q,n}`, for `p < q`.
pub fn f_difference(kind: QKind, m: i64, p: usize, q: usize, vt: &VarTable) -> Result<Sides> {
    let lhs = &f_mpqn(kind, m, p, q - 1, vt)? - &f_mpqn(kind, m, p + 1, q, vt)?;
    let mut factor = &MultiPoly::x(p) + &MultiPoly::y(q);
    if kind != QKind::Gl {
        factor += &(&MultiPoly::xbar(p) + &MultiPoly::ybar(q));
    }
    Ok((lhs, &factor * &f_mpqn(kind, m - 1, p, q, vt)?))
}

/// `f_{m,d,d,n}` against `q_md`.
pub fn f_at_diagonal(kind: QKind, m: i64, d: usize, vt: &VarTable) -> Result<Sides> {
    Ok((f_mpqn(kind, m, d, d, vt)?, q_md(kind, m, d, vt)?))
}

/// `f_{m,d,n,n}` against `h_m(x^{(d)})` of the matching character kind.
pub fn f_at_top(kind: QKind, m: i64, d: usize, vt: &VarTable) -> Result<Sides> {
    Ok((
        f_mpqn(kind, m, d, vt.n(), vt)?,
        h_range(kind.group(), m, d, vt.n(), vt)?,
    ))
}

/// Removing the last `u`: `q̃_m(u;v) = q̃_m(u′;v) + (u_r + a_{m+r−s−1}) q̃_{m−1}(u;v)`.
pub fn qtilde_drop_u(m: i64, u: &[MultiPoly], v: &[MultiPoly], vt: &VarTable) -> Result<Sides> {
    let (r, s) = (u.len() as i64, v.len() as i64);
    let last = &u[u.len() - 1] + &MultiPoly::a(m + r - s - 1);
    let rhs = &qtilde(m, &u[..u.len() - 1], v, vt)? + &(&last * &qtilde(m - 1, u, v, vt)?);
    Ok((qtilde(m, u, v, vt)?, rhs))
}

/// Removing the last `v`: `q̃_m(u;v) = q̃_m(u;v′) + (v_s − a_{m+r−s}) q̃_{m−1}(u;v′)`.
pub fn qtilde_drop_v(m: i64, u: &[MultiPoly], v: &[MultiPoly], vt: &VarTable) -> Result<Sides> {
    let (r, s) = (u.len() as i64, v.len() as i64);
    let shorter = &v[..v.len() - 1];
    let last = &v[v.len() - 1] - &MultiPoly::a(m + r - s);
    let rhs = &qtilde(m, u, shorter, vt)? + &(&last * &qtilde(m - 1, u, shorter, vt)?);
    Ok((qtilde(m, u, v, vt)?, rhs))
}

/// The two mixed-flag `q̃` terms on row `i` combine into a single `q_m(i)`.
/// For so the constant `1` rides along as an extra `v` variable.
pub fn bridge(kind: QKind, m: i64, i: usize, vt: &VarTable) -> Result<Sides> {
    let n = vt.n();
    let bars = |p: usize| (p..=n).map(MultiPoly::xbar).collect::<Vec<_>>();
    let ybars = |p: usize| (p..=n).map(MultiPoly::ybar).collect::<Vec<_>>();
    let one: Vec<MultiPoly> = if kind == QKind::So {
        vec![MultiPoly::one()]
    } else {
        vec![]
    };

    let u1 = [x_block(i, n, false), bars(i)].concat();
    let v1 = [y_block(i + 1, n, false), ybars(i), one.clone()].concat();
    let u2 = [x_block(i + 1, n, false), bars(i)].concat();
    let v2 = [y_block(i + 1, n, true), one].concat();

    let lhs = &(&(&MultiPoly::x(i) + &MultiPoly::y(i)) * &qtilde(m, &u1, &v1, vt)?)
        + &(&(&MultiPoly::xbar(i) + &MultiPoly::ybar(i)) * &qtilde(m, &u2, &v2, vt)?);
    let rhs = &crate::qfunctions::diagonal_factor(kind, i) * &q_md(kind, m, i, vt)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_balance() {
        let vt = VarTable::new(3, 12).unwrap();
        for kind in GroupKind::ALL {
            let (l, r) = h_difference(kind, 2, 1, 3, &vt).unwrap();
            assert_eq!(l, r, "{kind}");
        }
        let (l, r) = f_difference(QKind::Sp, 2, 1, 2, &vt).unwrap();
        assert_eq!(l, r);
        let (l, r) = bridge(QKind::Sp, 2, 2, &vt).unwrap();
        assert_eq!(l, r);
        let u = [MultiPoly::x(1), MultiPoly::x(2)];
        let v = [MultiPoly::y(1)];
        let (l, r) = qtilde_drop_u(2, &u, &v, &vt).unwrap();
        assert_eq!(l, r);
        let (l, r) = qtilde_drop_v(2, &u, &v, &vt).unwrap();
        assert_eq!(l, r);
    }
}
