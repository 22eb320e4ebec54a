//! Laurent monomials in sparse form.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::Var;

type Exps = SmallVec<[(Var, i32); 6]>;

/// A product of variable powers, stored as `(var, exponent)` pairs sorted by
/// variable with no zero exponents.
///
/// `Ord` is graded-lexicographic: total degree first, then the exponent of the
/// earliest variable in block order. It is a total order compatible with
/// multiplication on Laurent monomials, so leading terms multiply.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: SmallVec::new() }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        let mut exps = Exps::new();
        if e != 0 {
            exps.push((v, e));
        }
        Monomial { exps }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut exps: Exps = pairs.into_iter().collect();
        exps.sort_by_key(|p| p.0);
        let mut out = Exps::new();
        for (v, e) in exps {
            match out.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial { exps: out }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.exps
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|p| p.1 as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    /// `self / other`; always defined for Laurent monomials.
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Exps::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(v, e)| (v, sign * e)));
        Monomial { exps: out }
    }

    /// True when no variable outside the x/y blocks has a negative exponent.
    pub fn is_admissible(&self) -> bool {
        self.exps.iter().all(|&(v, e)| e >= 0 || v.allows_negative())
    }

    /// Splits off every occurrence of the variables selected by `pick`.
    pub fn split(&self, pick: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (mut hit, mut rest) = (Exps::new(), Exps::new());
        for &p in &self.exps {
            if pick(p.0) {
                hit.push(p);
            } else {
                rest.push(p);
            }
        }
        (Monomial { exps: hit }, Monomial { exps: rest })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(&self.exps, &other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic comparison of dense exponent vectors, read off sparse lists.
fn lex_cmp(a: &[(Var, i32)], b: &[(Var, i32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(&(_, e)), None) => return e.cmp(&0),
            (None, Some(&(_, f))) => return 0.cmp(&f),
            (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                Ordering::Less => return e.cmp(&0),
                Ordering::Greater => return 0.cmp(&f),
                Ordering::Equal => {
                    if e != f {
                        return e.cmp(&f);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl fmt::Display for Monomial {
    /// `x1^2 * a3`, or `1` for the empty monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(Var, i32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn multiply_and_cancel() {
        let a = m(&[(Var::X(1), 2), (Var::A(1), 1)]);
        let b = m(&[(Var::X(1), -2), (Var::Y(1), 1)]);
        let p = a.mul(&b);
        assert_eq!(p, m(&[(Var::Y(1), 1), (Var::A(1), 1)]));
        assert_eq!(p.div(&b), a);
        assert!(a.mul(&a.inverse()).is_one());
    }

    #[test]
    fn graded_lex() {
        let x1 = Monomial::var(Var::X(1));
        let x2 = Monomial::var(Var::X(2));
        let x1sq = Monomial::var_pow(Var::X(1), 2);
        let x1x2 = x1.mul(&x2);
        assert!(x1 > x2);
        assert!(x1sq > x1x2);
        assert!(x2 > Monomial::one());
        assert!(Monomial::var_pow(Var::X(1), -1) < Monomial::one());
        // degree dominates lex
        assert!(Monomial::var_pow(Var::A(5), 2) > x1);
    }

    #[test]
    fn order_is_multiplicative() {
        let ms = [
            m(&[(Var::X(1), 1), (Var::X(2), -1)]),
            m(&[(Var::X(2), 2)]),
            m(&[(Var::Y(1), 1), (Var::A(2), 1)]),
            m(&[(Var::X(1), -1)]),
            Monomial::one(),
        ];
        for a in &ms {
            for b in &ms {
                for c in &ms {
                    assert_eq!(a.cmp(b), a.mul(c).cmp(&b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn admissibility() {
        assert!(m(&[(Var::X(1), -3)]).is_admissible());
        assert!(!m(&[(Var::A(1), -1)]).is_admissible());
    }
}
