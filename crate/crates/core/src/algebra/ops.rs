//! Checked arithmetic entry points, exact division and factorial powers.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::monomial::Monomial;
use super::poly::MultiPoly;
use super::rational::Rational;
use super::var::{Var, VarTable};
use super::AlgebraError;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring operation on two polynomials that must both live over `vt`.
pub fn poly_arith(op: ArithOp, p: &MultiPoly, q: &MultiPoly, vt: &VarTable) -> Result<MultiPoly, AlgebraError> {
    p.check_table(vt)?;
    q.check_table(vt)?;
    Ok(match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    })
}

/// Returns `q` with `q · den = num`, or `NonExactDivision`.
///
/// Leading-term division under graded-lex order. Since that order is
/// multiplicative on Laurent monomials, every quotient term is bounded per
/// variable by the exponent ranges of `num` and `den`; a candidate outside
/// that box proves a nonzero remainder, which also guarantees termination.
pub fn exact_div(num: &MultiPoly, den: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    if den.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let (lead_m, lead_c) = den
        .leading_term()
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("nonzero");
    if den.len() == 1 {
        let inv = lead_m.inverse();
        let q = num.mul_monomial(&inv, &lead_c.recip());
        return if q.terms().all(|(m, _)| m.is_admissible()) {
            Ok(q)
        } else {
            Err(AlgebraError::NonExactDivision)
        };
    }

    let nb = num.exponent_bounds();
    let db = den.exponent_bounds();
    let mut bounds: FxHashMap<Var, (i32, i32)> = FxHashMap::default();
    for v in nb.keys().chain(db.keys()) {
        let (nlo, nhi) = nb.get(v).copied().unwrap_or((0, 0));
        let (dlo, dhi) = db.get(v).copied().unwrap_or((0, 0));
        let (lo, hi) = (nlo - dlo, nhi - dhi);
        if lo > hi {
            return Err(AlgebraError::NonExactDivision);
        }
        bounds.insert(*v, (lo, hi));
    }
    let in_box = |m: &Monomial| {
        m.iter().all(|(v, _)| bounds.contains_key(&v))
            && bounds.iter().all(|(v, (lo, hi))| {
                let e = m.exponent(*v);
                *lo <= e && e <= *hi
            })
    };

    let mut rem: BTreeMap<Monomial, Rational> = num.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let den_terms: Vec<(Monomial, Rational)> = den.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut quotient = MultiPoly::zero();
    while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let qm = m.div(&lead_m);
        if !in_box(&qm) {
            return Err(AlgebraError::NonExactDivision);
        }
        let qc = &c / &lead_c;
        for (dm, dc) in &den_terms {
            let key = qm.mul(dm);
            let delta = &qc * dc;
            let entry = rem.entry(key).or_insert(Rational::ZERO);
            *entry -= &delta;
            if entry.is_zero() {
                let k = qm.mul(dm);
                rem.remove(&k);
            }
        }
        quotient.add_term(qm, &qc);
    }
    Ok(quotient)
}

/// `(v | a)^m = (v + a_1)(v + a_2)…(v + a_m)`, or the barred analogue with
/// `v^{-1}` in place of `v`. `m = 0` gives 1.
pub fn factorial_power(v: Var, barred: bool, m: usize, vt: &VarTable) -> Result<MultiPoly, AlgebraError> {
    if !v.allows_negative() {
        return Err(AlgebraError::NotAFactorialVariable(v.to_string()));
    }
    vt.checked(v)?;
    vt.require_a(m)?;
    let base = MultiPoly::var_pow(v, if barred { -1 } else { 1 });
    let mut acc = MultiPoly::one();
    for k in 1..=m {
        acc = &acc * &(&base + &MultiPoly::a(k as i64));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: usize) -> MultiPoly {
        MultiPoly::x(k)
    }

    #[test]
    fn add_inverse_is_zero() {
        let vt = VarTable::new(2, 2).unwrap();
        let r = poly_arith(ArithOp::Add, &x(1), &-&x(1), &vt).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let vt = VarTable::new(2, 2).unwrap();
        let r = poly_arith(ArithOp::Mul, &(&x(1) - &x(2)), &(&x(1) + &x(2)), &vt).unwrap();
        assert_eq!(r, &x(1).pow(2) - &x(2).pow(2));
    }

    #[test]
    fn product_of_shifted_linears() {
        let vt = VarTable::new(2, 2).unwrap();
        let p = &x(1) + &MultiPoly::a(1);
        let q = &x(1) + &MultiPoly::a(2);
        let r = poly_arith(ArithOp::Mul, &p, &q, &vt).unwrap();
        let expect = &(&x(1).pow(2) + &(&x(1) * &(&MultiPoly::a(1) + &MultiPoly::a(2))))
            + &(&MultiPoly::a(1) * &MultiPoly::a(2));
        assert_eq!(r, expect);
    }

    #[test]
    fn table_mismatch_is_reported() {
        let vt = VarTable::new(1, 1).unwrap();
        let err = poly_arith(ArithOp::Add, &x(1), &x(2), &vt).unwrap_err();
        assert_eq!(err, AlgebraError::VarTableMismatch("x2".into()));
    }

    #[test]
    fn divides_difference_of_squares() {
        let num = &x(1).pow(2) - &x(2).pow(2);
        let den = &x(1) - &x(2);
        assert_eq!(exact_div(&num, &den).unwrap(), &x(1) + &x(2));
    }

    #[test]
    fn division_by_one() {
        let p = &(&x(1) * &MultiPoly::a(3)) + &MultiPoly::xbar(2);
        assert_eq!(exact_div(&p, &MultiPoly::one()).unwrap(), p);
    }

    #[test]
    fn nonexact_division_is_detected() {
        let num = &x(1).pow(2) + &MultiPoly::one();
        let den = &x(1) - &x(2);
        assert_eq!(exact_div(&num, &den), Err(AlgebraError::NonExactDivision));
        let den = &x(1) + &MultiPoly::one();
        assert_eq!(exact_div(&num, &den), Err(AlgebraError::NonExactDivision));
        assert_eq!(exact_div(&num, &MultiPoly::zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn laurent_division() {
        // (x - x̄) / (1 - x̄^2) = x
        let num = &x(1) - &MultiPoly::xbar(1);
        let den = &MultiPoly::one() - &MultiPoly::xbar(1).pow(2);
        assert_eq!(exact_div(&num, &den).unwrap(), x(1));
    }

    #[test]
    fn factorial_powers() {
        let vt = VarTable::new(1, 3).unwrap();
        let v = Var::X(1);
        assert!(factorial_power(v, false, 0, &vt).unwrap().is_one());
        assert_eq!(
            factorial_power(v, true, 1, &vt).unwrap(),
            &MultiPoly::xbar(1) + &MultiPoly::a(1)
        );
        let two = factorial_power(v, false, 2, &vt).unwrap();
        assert_eq!(two, &(&x(1) + &MultiPoly::a(1)) * &(&x(1) + &MultiPoly::a(2)));
        assert!(matches!(
            factorial_power(v, false, 4, &vt),
            Err(AlgebraError::ParameterOutOfRange { .. })
        ));
        assert!(factorial_power(Var::A(1), false, 1, &vt).is_err());
    }
}
