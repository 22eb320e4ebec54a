//! Sparse multivariate Laurent polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rustc_hash::{FxHashMap, FxHashSet};

use super::monomial::Monomial;
use super::rational::Rational;
use super::var::{Var, VarTable};
use super::AlgebraError;

/// A polynomial `Σ c_m · m` over Laurent monomials.
///
/// Zero coefficients are never stored. Terms live in a hash map; canonical
/// (graded-lex, leading term first) order is produced on demand by
/// [`MultiPoly::sorted_terms`].
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: FxHashMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Rational::ONE)
    }

    /// `v^e`, with negative `e` meaning the barred variable raised to `-e`.
    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::term(Monomial::var_pow(v, e), Rational::ONE)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    /// `x_k`, `x̄_k = x_k^{-1}`, and likewise for `y`.
    pub fn x(k: usize) -> Self {
        Self::var(Var::X(k as u16))
    }

    pub fn xbar(k: usize) -> Self {
        Self::var_pow(Var::X(k as u16), -1)
    }

    pub fn y(k: usize) -> Self {
        Self::var(Var::Y(k as u16))
    }

    pub fn ybar(k: usize) -> Self {
        Self::var_pow(Var::Y(k as u16), -1)
    }

    /// The factorial parameter `a_m`, with the convention `a_m = 0` for `m ≤ 0`.
    pub fn a(m: i64) -> Self {
        if m <= 0 {
            MultiPoly::zero()
        } else {
            Self::var(Var::A(m as u16))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(Rational::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    /// Unordered view of the terms.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical order, leading (largest) monomial first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, d)| (k.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Every variable that occurs with a nonzero exponent.
    pub fn variables(&self) -> FxHashSet<Var> {
        self.terms.keys().flat_map(|m| m.iter().map(|p| p.0)).collect()
    }

    /// Per-variable `(min, max)` exponent over all terms, counting absent
    /// variables as exponent 0.
    pub fn exponent_bounds(&self) -> FxHashMap<Var, (i32, i32)> {
        let vars = self.variables();
        let mut out = FxHashMap::default();
        for v in vars {
            let (mut lo, mut hi) = (i32::MAX, i32::MIN);
            for m in self.terms.keys() {
                let e = m.exponent(v);
                lo = lo.min(e);
                hi = hi.max(e);
            }
            out.insert(v, (lo, hi));
        }
        out
    }

    /// Errors with the first variable not in `vt`.
    pub fn check_table(&self, vt: &VarTable) -> Result<(), AlgebraError> {
        for m in self.terms.keys() {
            for (v, e) in m.iter() {
                if !vt.contains(v) {
                    return Err(AlgebraError::VarTableMismatch(v.to_string()));
                }
                if e < 0 && !v.allows_negative() {
                    return Err(AlgebraError::NegativeExponent(v.to_string()));
                }
            }
        }
        Ok(())
    }

    /// Simultaneous substitution `v ↦ bindings[v]`.
    ///
    /// A negative power of a bound variable needs the binding to be a single
    /// term whose inverse is still admissible (nonzero coefficient, no
    /// negative powers leaking into the `a` or `t` blocks).
    pub fn specialize(&self, bindings: &BTreeMap<Var, MultiPoly>) -> Result<MultiPoly, AlgebraError> {
        let mut inverses: BTreeMap<Var, MultiPoly> = BTreeMap::new();
        let mut power_cache: FxHashMap<(Var, i32), MultiPoly> = FxHashMap::default();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let (bound, rest) = m.split(|v| bindings.contains_key(&v));
            let mut acc = MultiPoly::term(rest, c.clone());
            for (v, e) in bound.iter() {
                let factor = match power_cache.get(&(v, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let base = if e >= 0 {
                            bindings[&v].clone()
                        } else {
                            match inverses.get(&v) {
                                Some(inv) => inv.clone(),
                                None => {
                                    let inv = bindings[&v]
                                        .try_inverse()
                                        .ok_or(AlgebraError::NonInvertibleBinding(v.to_string()))?;
                                    inverses.insert(v, inv.clone());
                                    inv
                                }
                            }
                        };
                        let f = base.pow(e.unsigned_abs());
                        power_cache.insert((v, e), f.clone());
                        f
                    }
                };
                acc = &acc * &factor;
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Multiplicative inverse of a single admissible invertible term.
    pub fn try_inverse(&self) -> Option<MultiPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let inv = m.inverse();
        if !inv.is_admissible() {
            return None;
        }
        Some(MultiPoly::term(inv, c.recip()))
    }

    /// Sets every `a_k` to zero.
    pub fn at_a_zero(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.iter().all(|(v, _)| !matches!(v, Var::A(_))))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Evaluates with every `x`, `y` (and their inverses) set to 1, `a = 0`,
    /// `t = 0`; used for classical-dimension checks.
    pub fn at_unit_point(&self) -> Rational {
        let mut s = Rational::ZERO;
        for (m, c) in &self.terms {
            if m.iter().all(|(v, _)| v.allows_negative()) {
                s += c;
            }
        }
        s
    }

    /// Human-readable form, `2 * x1^2 * a3 - x2 + 1`, canonical term order.
    pub fn to_text(&self) -> String {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let coeff = if a.is_integer() {
                a.numer().to_string()
            } else {
                a.to_string()
            };
            if m.is_one() {
                s.push_str(&coeff);
            } else if a.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&format!("{coeff} * {m}"));
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        self.terms.reserve(rhs.terms.len());
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        out += small;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        out.terms.reserve(self.len().max(rhs.len()));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &MultiPoly::x(1) - &MultiPoly::x(1);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn dummy_parameters_vanish() {
        assert!(MultiPoly::a(0).is_zero());
        assert!(MultiPoly::a(-3).is_zero());
        assert_eq!(MultiPoly::a(2), MultiPoly::var(Var::A(2)));
    }

    #[test]
    fn barred_times_unbarred_is_one() {
        assert!((&MultiPoly::x(2) * &MultiPoly::xbar(2)).is_one());
    }

    #[test]
    fn text_rendering() {
        let p = &(&MultiPoly::x(1).pow(2).scale(&Rational::from_integer(2)) - &MultiPoly::x(2)) + &MultiPoly::one();
        assert_eq!(p.to_text(), "2 * x1^2 - x2 + 1");
        assert_eq!(MultiPoly::zero().to_text(), "0");
        let q = MultiPoly::xbar(1).scale(&Rational::new(-1, 2));
        assert_eq!(q.to_text(), "-1/2 * x1^-1");
    }

    #[test]
    fn unit_point_evaluation() {
        // (x1 + a1)(x̄1 + 2) at x = 1, a = 0 is 3
        let p = &(&MultiPoly::x(1) + &MultiPoly::a(1)) * &(&MultiPoly::xbar(1) + &MultiPoly::int(2));
        assert_eq!(p.at_unit_point(), Rational::from_integer(3));
    }
}
