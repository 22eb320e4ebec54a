//! The four ways of computing a factorial character.

use crate::algebra::{determinant, exact_div, factorial_power, MultiPoly, Var, VarTable};
use crate::registry::Named;
use crate::tableau::{weighted_tableau_sum, Partition};
use crate::Result;

use super::hfunc::HFamily;
use super::{CharacterRoute, GroupKind};

/// Row entry of the alternant for part `m` in variable `x_i`; the so case is
/// pre-multiplied by `x_i^{1/2}` to clear half powers.
fn alternant_entry(kind: GroupKind, i: usize, m: usize, vt: &VarTable) -> Result<MultiPoly> {
    let v = Var::X(i as u16);
    let up = factorial_power(v, false, m, vt)?;
    Ok(match kind {
        GroupKind::Gl => up,
        GroupKind::Sp => &(&MultiPoly::x(i) * &up) - &(&MultiPoly::xbar(i) * &factorial_power(v, true, m, vt)?),
        GroupKind::So => &(&MultiPoly::x(i) * &up) - &factorial_power(v, true, m, vt)?,
    })
}

fn ratio(num: Vec<Vec<MultiPoly>>, den: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    Ok(exact_div(&determinant(&num)?, &determinant(&den)?)?)
}

/// Quotient of alternants of factorial powers.
pub struct Definitional;

impl Named for Definitional {
    fn name(&self) -> &'static str {
        "def"
    }
    fn summary(&self) -> &'static str {
        "ratio of alternants of factorial powers"
    }
}

impl CharacterRoute for Definitional {
    fn compute(&self, kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
        let n = vt.n();
        let parts = lambda.padded();
        let matrix = |shift: bool| -> Result<Vec<Vec<MultiPoly>>> {
            (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| {
                            let m = if shift { parts[j - 1] } else { 0 } + n - j;
                            alternant_entry(kind, i, m, vt)
                        })
                        .collect()
                })
                .collect()
        };
        ratio(matrix(true)?, matrix(false)?)
    }
}

/// Quotient of determinants of one-variable `h` values.
pub struct HDeterminant;

impl Named for HDeterminant {
    fn name(&self) -> &'static str {
        "hdet"
    }
    fn summary(&self) -> &'static str {
        "ratio of determinants of one-variable h functions"
    }
}

impl CharacterRoute for HDeterminant {
    fn compute(&self, kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
        let n = vt.n();
        let parts = lambda.padded();
        let mut fam = HFamily::new(kind, vt);
        let mut matrix = |shift: bool| -> Result<Vec<Vec<MultiPoly>>> {
            (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| {
                            let m = if shift { parts[j - 1] } else { 0 } + n - j;
                            fam.range(m as i64, i, i)
                        })
                        .collect()
                })
                .collect()
        };
        let num = matrix(true)?;
        let den = matrix(false)?;
        ratio(num, den)
    }
}

/// Flagged Jacobi-Trudi determinant; needs no division.
pub struct FlaggedJacobiTrudi;

impl Named for FlaggedJacobiTrudi {
    fn name(&self) -> &'static str {
        "jt"
    }
    fn summary(&self) -> &'static str {
        "flagged Jacobi-Trudi determinant (default)"
    }
}

impl CharacterRoute for FlaggedJacobiTrudi {
    fn compute(&self, kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
        let n = vt.n();
        let parts = lambda.padded();
        let mut fam = HFamily::new(kind, vt);
        let m: Vec<Vec<MultiPoly>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| fam.flagged(parts[j - 1] as i64 - j as i64 + i as i64, i))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(determinant(&m)?)
    }
}

/// Weighted sum over the kind's tableaux.
pub struct Tableaux;

impl Named for Tableaux {
    fn name(&self) -> &'static str {
        "tab"
    }
    fn summary(&self) -> &'static str {
        "sum of tableau weights"
    }
}

impl CharacterRoute for Tableaux {
    fn compute(&self, kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
        Ok(weighted_tableau_sum(kind.tableau_kind(), lambda.parts(), vt.n())?)
    }
}
