//! Exact determinants of polynomial matrices.

use super::ops::exact_div;
use super::poly::MultiPoly;
use super::AlgebraError;

/// Matrices up to this size are expanded by cofactors; larger ones go
/// through fraction-free Bareiss elimination.
pub const COFACTOR_MAX_SIZE: usize = 6;

fn check_square(m: &[Vec<MultiPoly>]) -> Result<usize, AlgebraError> {
    let k = m.len();
    for row in m {
        if row.len() != k {
            return Err(AlgebraError::NonSquare {
                rows: k,
                cols: row.len(),
            });
        }
    }
    Ok(k)
}

/// Determinant of a square matrix; the empty matrix has determinant 1.
pub fn determinant(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, AlgebraError> {
    let k = check_square(m)?;
    if k <= COFACTOR_MAX_SIZE {
        determinant_cofactor(m)
    } else {
        determinant_bareiss(m)
    }
}

/// Laplace expansion, always along the row with the most zero entries.
pub fn determinant_cofactor(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, AlgebraError> {
    let k = check_square(m)?;
    let rows: Vec<usize> = (0..k).collect();
    let cols: Vec<usize> = (0..k).collect();
    Ok(cofactor(m, &rows, &cols))
}

fn cofactor(m: &[Vec<MultiPoly>], rows: &[usize], cols: &[usize]) -> MultiPoly {
    match rows.len() {
        0 => return MultiPoly::one(),
        1 => return m[rows[0]][cols[0]].clone(),
        _ => {}
    }
    let (rp, &r) = rows
        .iter()
        .enumerate()
        .max_by_key(|(_, &r)| cols.iter().filter(|&&c| m[r][c].is_zero()).count())
        .expect("nonempty");
    let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
    let mut acc = MultiPoly::zero();
    for (cp, &c) in cols.iter().enumerate() {
        let entry = &m[r][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor(m, &sub_rows, &sub_cols);
        if minor.is_zero() {
            continue;
        }
        let term = entry * &minor;
        if (rp + cp) % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Fraction-free elimination; every division is exact.
pub fn determinant_bareiss(m: &[Vec<MultiPoly>]) -> Result<MultiPoly, AlgebraError> {
    let k = check_square(m)?;
    if k == 0 {
        return Ok(MultiPoly::one());
    }
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for p in 0..k - 1 {
        if a[p][p].is_zero() {
            match (p + 1..k).find(|&i| !a[i][p].is_zero()) {
                Some(i) => {
                    a.swap(p, i);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = &(&a[i][j] * &a[p][p]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = exact_div(&num, &prev)?;
            }
            a[i][p] = MultiPoly::zero();
        }
        prev = a[p][p].clone();
    }
    let d = a[k - 1][k - 1].clone();
    Ok(if negate { -d } else { d })
}
