//! Factorial Q-functions `Q_λ(x;y|a)`, `Q^sp_λ` and `Q^so_λ`, their
//! determinantal forms, and the Tokuyama-type factorizations.

pub mod gf;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::{determinant, MultiPoly, VarTable};
use crate::characters::{char_flagged_jt, GroupKind};
use crate::registry::{Named, Registry};
use crate::tableau::{weighted_tableau_sum, Partition, StrictPartition, TableauKind};
use crate::{Error, Result};

pub use gf::{diagonal_factor, f_mpqn, q_md, qtilde, x_block, y_block};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QKind {
    Gl,
    Sp,
    So,
}

impl QKind {
    pub const ALL: [QKind; 3] = [QKind::Gl, QKind::Sp, QKind::So];

    pub fn name(self) -> &'static str {
        match self {
            QKind::Gl => "glQ",
            QKind::Sp => "spQ",
            QKind::So => "soQ",
        }
    }

    pub fn tableau_kind(self) -> TableauKind {
        match self {
            QKind::Gl => TableauKind::GlQ,
            QKind::Sp => TableauKind::SpQ,
            QKind::So => TableauKind::SoQ,
        }
    }

    /// The character kind on the right of the Tokuyama factorization.
    pub fn group(self) -> GroupKind {
        match self {
            QKind::Gl => GroupKind::Gl,
            QKind::Sp => GroupKind::Sp,
            QKind::So => GroupKind::So,
        }
    }
}

impl fmt::Display for QKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let base = lower.strip_suffix('q').unwrap_or(&lower);
        QKind::ALL
            .into_iter()
            .find(|k| k.name()[..2] == *base)
            .ok_or_else(|| Error::UnknownName {
                what: "Q kind",
                name: s.to_string(),
                available: "glQ, spQ, soQ".into(),
            })
    }
}

/// Strictly increasing rows `d_1 < … < d_ℓ` in `1..=n` carrying the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSupport(Vec<usize>);

impl DiagonalSupport {
    pub fn new(d: Vec<usize>, n: usize) -> Result<Self> {
        let ok = d.windows(2).all(|w| w[0] < w[1]) && d.iter().all(|&i| (1..=n).contains(&i));
        if !ok {
            return Err(Error::Invalid(format!(
                "{d:?} is not a strictly increasing subset of 1..={n}"
            )));
        }
        Ok(DiagonalSupport(d))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// All `C(n, len)` supports in lexicographic order.
    pub fn all(len: usize, n: usize) -> Vec<DiagonalSupport> {
        fn go(start: usize, len: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<DiagonalSupport>) {
            if cur.len() == len {
                out.push(DiagonalSupport(cur.clone()));
                return;
            }
            for i in start..=n {
                cur.push(i);
                go(i + 1, len, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(1, len, n, &mut Vec::with_capacity(len), &mut out);
        out
    }
}

/// One way of computing a factorial Q-function.
pub trait QRoute: Named + Send + Sync {
    fn compute(&self, kind: QKind, lambda: &StrictPartition, vt: &VarTable) -> Result<MultiPoly>;
}

pub struct TableauSum;

impl Named for TableauSum {
    fn name(&self) -> &'static str {
        "tab"
    }
    fn summary(&self) -> &'static str {
        "sum over primed shifted tableaux (default)"
    }
}

impl QRoute for TableauSum {
    fn compute(&self, kind: QKind, lambda: &StrictPartition, vt: &VarTable) -> Result<MultiPoly> {
        Ok(weighted_tableau_sum(kind.tableau_kind(), lambda.parts(), vt.n())?)
    }
}

pub struct Determinantal;

impl Named for Determinantal {
    fn name(&self) -> &'static str {
        "det"
    }
    fn summary(&self) -> &'static str {
        "sum over diagonal supports of determinants of q functions"
    }
}

impl QRoute for Determinantal {
    fn compute(&self, kind: QKind, lambda: &StrictPartition, vt: &VarTable) -> Result<MultiPoly> {
        let n = vt.n();
        let parts = lambda.parts();
        // q_md depends only on (m, d); share it across supports.
        let mut table = vec![vec![MultiPoly::zero(); parts.len()]; n + 1];
        for (d, row) in table.iter_mut().enumerate().skip(1) {
            let diag = diagonal_factor(kind, d);
            for (j, &p) in parts.iter().enumerate() {
                row[j] = &diag * &q_md(kind, p as i64 - 1, d, vt)?;
            }
        }
        let mut total = MultiPoly::zero();
        for support in DiagonalSupport::all(parts.len(), n) {
            let m: Vec<Vec<MultiPoly>> = support.rows().iter().map(|&d| table[d].clone()).collect();
            total += &determinant(&m)?;
        }
        Ok(total)
    }
}

pub const DEFAULT_Q_ROUTE: &str = "tab";

pub fn q_routes() -> Registry<dyn QRoute> {
    let mut r: Registry<dyn QRoute> = Registry::new("Q-function route");
    r.register(Box::new(TableauSum)).register(Box::new(Determinantal));
    r
}

fn check_inputs(lambda: &StrictPartition, vt: &VarTable) -> Result<()> {
    if lambda.n_bound() != vt.n() {
        return Err(Error::Invalid(format!(
            "partition bound {} differs from n = {}",
            lambda.n_bound(),
            vt.n()
        )));
    }
    if lambda.largest() > 1 {
        vt.require_a(lambda.largest() - 1)?;
    }
    Ok(())
}

pub fn q_function(kind: QKind, lambda: &StrictPartition, vt: &VarTable, route: &str) -> Result<MultiPoly> {
    check_inputs(lambda, vt)?;
    let p = q_routes().get(route)?.compute(kind, lambda, vt)?;
    p.check_table(vt)?;
    Ok(p)
}

pub fn q_tableaux(kind: QKind, lambda: &StrictPartition, vt: &VarTable) -> Result<MultiPoly> {
    q_function(kind, lambda, vt, "tab")
}

pub fn q_determinantal(kind: QKind, lambda: &StrictPartition, vt: &VarTable) -> Result<MultiPoly> {
    q_function(kind, lambda, vt, "det")
}

/// `Π_{1≤i≤j≤n} (x_i + y_j [+ x̄_i + ȳ_j])`.
pub fn staircase_product(kind: QKind, n: usize) -> MultiPoly {
    let mut out = MultiPoly::one();
    for i in 1..=n {
        for j in i..=n {
            let mut f = &MultiPoly::x(i) + &MultiPoly::y(j);
            if kind != QKind::Gl {
                f += &(&MultiPoly::xbar(i) + &MultiPoly::ybar(j));
            }
            out = &out * &f;
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct TokuyamaReport {
    pub kind: QKind,
    pub mu: Partition,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub equal: bool,
}

impl TokuyamaReport {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": "tokuyama",
            "kind": self.kind.name(),
            "mu": self.mu.parts(),
            "n": self.mu.n_bound(),
            "equal": self.equal,
            "lhs_terms": self.lhs.len(),
            "rhs_terms": self.rhs.len(),
        })
    }
}

/// Table wide enough for both sides of the factorization at `μ`.
pub fn tokuyama_table(mu: &Partition) -> Result<VarTable> {
    Ok(VarTable::for_partition(mu.n_bound(), mu.largest() + mu.n_bound())?)
}

/// Compares `Q_{μ+δ}` by tableaux with the staircase product times the
/// matching factorial character of `μ`.
pub fn verify_tokuyama(kind: QKind, mu: &Partition, vt: &VarTable) -> Result<TokuyamaReport> {
    let lambda = mu.plus_staircase();
    let lhs = q_tableaux(kind, &lambda, vt)?;
    let rhs = &staircase_product(kind, vt.n()) * &char_flagged_jt(kind.group(), mu, vt)?;
    let equal = lhs == rhs;
    Ok(TokuyamaReport {
        kind,
        mu: mu.clone(),
        lhs,
        rhs,
        equal,
    })
}
