//! Backtracking enumeration of tableaux and memoized weighted sums over them.

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::algebra::MultiPoly;

use super::entry::{CellEntry, TableauKind};
use super::filling::{Layout, Tableau};
use super::ShapeError;

/// Streams every valid tableau of a shape in lexicographic cell-scan order:
/// boxes are filled row by row, each trying letters in alphabet order.
pub struct TableauIter {
    layout: Layout,
    alphabet: Vec<CellEntry>,
    assign: Vec<usize>,
    pos: usize,
    start: usize,
    done: bool,
}

impl TableauIter {
    fn next_candidate(&self, p: usize, start: usize) -> Option<usize> {
        let get = |q: Option<usize>| q.map(|q| self.alphabet[self.assign[q]]);
        let (l, u, d) = (
            get(self.layout.left[p]),
            get(self.layout.up[p]),
            get(self.layout.diag_prev[p]),
        );
        (start..self.alphabet.len()).find(|&r| self.layout.check_cell(p, self.alphabet[r], l, u, d).is_ok())
    }
}

impl Iterator for TableauIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let len = self.layout.len();
        loop {
            if self.pos == len {
                let entries: Vec<CellEntry> = self.assign.iter().map(|&r| self.alphabet[r]).collect();
                if len == 0 {
                    self.done = true;
                } else {
                    self.pos = len - 1;
                    self.start = self.assign[len - 1] + 1;
                }
                return Some(Tableau::from_flat(&self.layout, &entries));
            }
            match self.next_candidate(self.pos, self.start) {
                Some(r) => {
                    self.assign[self.pos] = r;
                    self.pos += 1;
                    self.start = 0;
                }
                None => {
                    if self.pos == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                    self.start = self.assign[self.pos] + 1;
                }
            }
        }
    }
}

pub fn enumerate_tableaux(kind: TableauKind, shape: &[usize], n: usize) -> Result<TableauIter, ShapeError> {
    let layout = Layout::new(kind, shape, n)?;
    let alphabet = kind.alphabet(n);
    let len = layout.len();
    Ok(TableauIter {
        layout,
        alphabet,
        assign: vec![0; len],
        pos: 0,
        start: 0,
        done: false,
    })
}

/// Values that can be summed over tableaux: a commutative semiring.
pub trait TableauWeight: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
}

impl TableauWeight for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl TableauWeight for u64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// `Σ_T Π_{boxes} weights[box][rank of T(box)]` over all valid tableaux.
///
/// The sum is organised as a transfer computation along the cell scan: the
/// partial sum over completions of a prefix depends only on the entries of
/// the prefix boxes that still neighbour an unfilled box, so it is memoized
/// on those.
pub fn tableau_sum<W: TableauWeight>(layout: &Layout, weights: &[Vec<W>]) -> W {
    let len = layout.len();
    let alphabet = layout.kind.alphabet(layout.n);
    let frontier: Vec<Vec<usize>> = (0..=len)
        .map(|p| {
            let mut f: Vec<usize> = (p..len)
                .flat_map(|r| [layout.left[r], layout.up[r], layout.diag_prev[r]])
                .flatten()
                .filter(|&q| q < p)
                .collect();
            f.sort_unstable();
            f.dedup();
            f
        })
        .collect();
    let mut state = SumState {
        layout,
        weights,
        alphabet: &alphabet,
        frontier: &frontier,
        memo: vec![FxHashMap::default(); len],
        assign: vec![0u8; len],
    };
    state.go(0)
}

struct SumState<'a, W> {
    layout: &'a Layout,
    weights: &'a [Vec<W>],
    alphabet: &'a [CellEntry],
    frontier: &'a [Vec<usize>],
    memo: Vec<FxHashMap<SmallVec<[u8; 16]>, W>>,
    assign: Vec<u8>,
}

impl<W: TableauWeight> SumState<'_, W> {
    fn go(&mut self, p: usize) -> W {
        if p == self.layout.len() {
            return W::one();
        }
        let key: SmallVec<[u8; 16]> = self.frontier[p].iter().map(|&q| self.assign[q]).collect();
        if let Some(v) = self.memo[p].get(&key) {
            return v.clone();
        }
        let get = |q: Option<usize>, assign: &[u8]| q.map(|q| self.alphabet[assign[q] as usize]);
        let l = get(self.layout.left[p], &self.assign);
        let u = get(self.layout.up[p], &self.assign);
        let d = get(self.layout.diag_prev[p], &self.assign);
        let mut total = W::zero();
        for r in 0..self.alphabet.len() {
            if self.layout.check_cell(p, self.alphabet[r], l, u, d).is_err() {
                continue;
            }
            self.assign[p] = r as u8;
            let rest = self.go(p + 1);
            if !rest.is_zero() {
                total.add_assign(&self.weights[p][r].mul(&rest));
            }
        }
        self.memo[p].insert(key, total.clone());
        total
    }
}

/// Number of valid tableaux, without listing them.
pub fn count_tableaux(kind: TableauKind, shape: &[usize], n: usize) -> Result<u64, ShapeError> {
    let layout = Layout::new(kind, shape, n)?;
    let ones = vec![vec![1u64; kind.alphabet(n).len()]; layout.len()];
    Ok(tableau_sum(&layout, &ones))
}

/// `Σ_T wgt(T)` over all valid tableaux of the shape.
pub fn weighted_tableau_sum(kind: TableauKind, shape: &[usize], n: usize) -> Result<MultiPoly, ShapeError> {
    let layout = Layout::new(kind, shape, n)?;
    Ok(tableau_sum(&layout, &layout.weight_table()))
}
