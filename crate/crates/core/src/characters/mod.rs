//! Factorial characters `s_λ(x|a)`, `sp_λ(x,x̄|a)` and `so_λ(x,x̄,1|a)`.

pub mod hfunc;
pub mod routes;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{MultiPoly, VarTable};
use crate::registry::{Named, Registry};
use crate::tableau::{Partition, TableauKind};
use crate::{Error, Result};

pub use hfunc::{h_factorial, h_range, one_part_expansion, HFamily};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Gl,
    Sp,
    So,
}

impl GroupKind {
    pub const ALL: [GroupKind; 3] = [GroupKind::Gl, GroupKind::Sp, GroupKind::So];

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Gl => "gl",
            GroupKind::Sp => "sp",
            GroupKind::So => "so",
        }
    }

    pub fn tableau_kind(self) -> TableauKind {
        match self {
            GroupKind::Gl => TableauKind::GlChar,
            GroupKind::Sp => TableauKind::SpChar,
            GroupKind::So => TableauKind::SoChar,
        }
    }

    /// Size of the tableau alphabet: `n`, `2n` or `2n+1`.
    pub fn alphabet_size(self, n: usize) -> usize {
        self.tableau_kind().alphabet(n).len()
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let base = lower.strip_suffix("char").unwrap_or(&lower);
        GroupKind::ALL
            .into_iter()
            .find(|k| k.name() == base)
            .ok_or_else(|| Error::UnknownName {
                what: "group kind",
                name: s.to_string(),
                available: "gl, sp, so".into(),
            })
    }
}

/// One way of computing a factorial character.
pub trait CharacterRoute: Named + Send + Sync {
    fn compute(&self, kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly>;
}

/// The route used when none is named.
pub const DEFAULT_ROUTE: &str = "jt";

pub fn character_routes() -> Registry<dyn CharacterRoute> {
    let mut r: Registry<dyn CharacterRoute> = Registry::new("character route");
    r.register(Box::new(routes::Definitional))
        .register(Box::new(routes::HDeterminant))
        .register(Box::new(routes::FlaggedJacobiTrudi))
        .register(Box::new(routes::Tableaux));
    r
}

fn check_inputs(lambda: &Partition, vt: &VarTable) -> Result<()> {
    if lambda.n_bound() != vt.n() {
        return Err(Error::Invalid(format!(
            "partition bound {} differs from n = {}",
            lambda.n_bound(),
            vt.n()
        )));
    }
    vt.require_a(lambda.largest() + 2 * vt.n())?;
    Ok(())
}

/// Computes the character by the named route, checking the result against `vt`.
pub fn character(kind: GroupKind, lambda: &Partition, vt: &VarTable, route: &str) -> Result<MultiPoly> {
    check_inputs(lambda, vt)?;
    let p = character_routes().get(route)?.compute(kind, lambda, vt)?;
    p.check_table(vt)?;
    Ok(p)
}

pub fn char_definitional(kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
    character(kind, lambda, vt, "def")
}

pub fn char_hdet(kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
    character(kind, lambda, vt, "hdet")
}

pub fn char_flagged_jt(kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
    character(kind, lambda, vt, "jt")
}

pub fn char_combinatorial(kind: GroupKind, lambda: &Partition, vt: &VarTable) -> Result<MultiPoly> {
    character(kind, lambda, vt, "tab")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[usize], n: usize) -> Partition {
        Partition::new(parts, n).unwrap()
    }

    #[test]
    fn spec_values() {
        let vt2 = VarTable::for_partition(2, 3).unwrap();
        let s1 = char_definitional(GroupKind::Gl, &lam(&[1], 2), &vt2)
            .unwrap()
            .at_a_zero();
        assert_eq!(s1, &MultiPoly::x(1) + &MultiPoly::x(2));
        let vt1 = VarTable::for_partition(1, 3).unwrap();
        let sp1 = char_definitional(GroupKind::Sp, &lam(&[1], 1), &vt1)
            .unwrap()
            .at_a_zero();
        assert_eq!(sp1, &MultiPoly::x(1) + &MultiPoly::xbar(1));
        let two = char_hdet(GroupKind::Gl, &lam(&[2], 1), &vt1).unwrap();
        assert_eq!(
            two,
            &(&MultiPoly::x(1) + &MultiPoly::a(1)) * &(&MultiPoly::x(1) + &MultiPoly::a(2))
        );
        let e2 = char_flagged_jt(GroupKind::Gl, &lam(&[1, 1], 2), &vt2)
            .unwrap()
            .at_a_zero();
        assert_eq!(e2, &MultiPoly::x(1) * &MultiPoly::x(2));
        let so = char_combinatorial(GroupKind::So, &lam(&[1], 1), &vt1).unwrap();
        let expect = &(&(&MultiPoly::x(1) + &MultiPoly::a(1)) + &(&MultiPoly::xbar(1) + &MultiPoly::a(2)))
            + &(&MultiPoly::one() - &MultiPoly::a(2));
        assert_eq!(so, expect);
    }

    #[test]
    fn empty_partition_is_one_on_every_route() {
        let vt = VarTable::for_partition(3, 0).unwrap();
        for kind in GroupKind::ALL {
            for route in character_routes().names() {
                assert!(
                    character(kind, &Partition::empty(3), &vt, route).unwrap().is_one(),
                    "{kind} {route}"
                );
            }
        }
    }

    #[test]
    fn unknown_route_and_bad_bound() {
        let vt = VarTable::for_partition(2, 1).unwrap();
        assert!(matches!(
            character(GroupKind::Gl, &lam(&[1], 2), &vt, "nope"),
            Err(Error::UnknownName { .. })
        ));
        assert!(character(GroupKind::Gl, &lam(&[1], 3), &vt, "jt").is_err());
        assert_eq!("spChar".parse::<GroupKind>().unwrap(), GroupKind::Sp);
    }
}
