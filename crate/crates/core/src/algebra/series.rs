//! Power series in `t` truncated at a fixed order, with polynomial coefficients.

use super::poly::MultiPoly;

/// `Σ_{k ≤ order} coeffs[k] · t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![MultiPoly::zero(); order + 1];
        coeffs[0] = MultiPoly::one();
        TruncatedSeries { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<MultiPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^m`; zero for `m` beyond the order or negative.
    pub fn coeff(&self, m: i64) -> MultiPoly {
        if m < 0 {
            return MultiPoly::zero();
        }
        self.coeffs.get(m as usize).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = vec![MultiPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplies in place by `1 + t·v`.
    pub fn mul_linear(&mut self, v: &MultiPoly) {
        for k in (1..self.coeffs.len()).rev() {
            let prev = &self.coeffs[k - 1] * v;
            self.coeffs[k] += &prev;
        }
    }

    /// Multiplies in place by `1 / (1 − t·u)`.
    pub fn div_linear(&mut self, u: &MultiPoly) {
        for k in 1..self.coeffs.len() {
            let prev = &self.coeffs[k - 1] * u;
            self.coeffs[k] += &prev;
        }
    }
}

/// One generating-function factor up to `order`: the geometric series
/// `1/(1 − t·v)` for `sign < 0`, the linear factor `1 + t·v` otherwise.
pub fn series_inverse_linear(v: &MultiPoly, sign: i32, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    if sign < 0 {
        s.div_linear(v);
    } else {
        s.mul_linear(v);
    }
    s
}

/// `[t^m] Π_u 1/(1 − t·u) · Π_v (1 + t·v)`; zero for negative `m`.
pub fn gf_coeff(m: i64, geometric: &[MultiPoly], linear: &[MultiPoly]) -> MultiPoly {
    if m < 0 {
        return MultiPoly::zero();
    }
    let mut s = TruncatedSeries::one(m as usize);
    for v in linear {
        s.mul_linear(v);
    }
    for u in geometric {
        s.div_linear(u);
    }
    s.coeff(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_times_linear_is_one() {
        let v = &MultiPoly::x(1) + &MultiPoly::a(2);
        let mut s = series_inverse_linear(&v, -1, 5);
        s.mul_linear(&(-&v));
        assert_eq!(s, TruncatedSeries::one(5));
        let lin = series_inverse_linear(&MultiPoly::y(1), 1, 5);
        assert_eq!(lin.coeffs().iter().filter(|c| !c.is_zero()).count(), 2);
    }

    #[test]
    fn geometric_coefficients() {
        let x = MultiPoly::x(1);
        let s = series_inverse_linear(&x, -1, 4);
        for k in 0..=4 {
            assert_eq!(s.coeff(k), x.pow(k as u32));
        }
        assert!(s.coeff(5).is_zero());
        assert!(s.coeff(-1).is_zero());
    }

    #[test]
    fn complete_symmetric_in_two_variables() {
        // h_2(x1, x2) = x1^2 + x1 x2 + x2^2
        let (x1, x2) = (MultiPoly::x(1), MultiPoly::x(2));
        let h2 = gf_coeff(2, &[x1.clone(), x2.clone()], &[]);
        assert_eq!(h2, &(&x1.pow(2) + &(&x1 * &x2)) + &x2.pow(2));
        assert!(gf_coeff(0, std::slice::from_ref(&x1), std::slice::from_ref(&x2)).is_one());
        assert!(gf_coeff(-1, &[x1], &[]).is_zero());
    }

    #[test]
    fn truncation_order_does_not_change_coefficients() {
        let v = MultiPoly::x(2);
        let a = series_inverse_linear(&v, -1, 3);
        let b = series_inverse_linear(&v, -1, 7);
        let p = a.mul(&b);
        let q = b.mul(&b);
        for k in 0..=3 {
            assert_eq!(p.coeff(k), q.coeff(k));
        }
    }
}
