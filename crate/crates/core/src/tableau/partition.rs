//! Partitions and strict partitions with a length bound.

use std::fmt;
use std::str::FromStr;

use super::ShapeError;

/// Weakly decreasing parts, trailing zeros dropped, at most `n_bound` parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n_bound: usize,
}

impl Partition {
    pub fn new(parts: &[usize], n_bound: usize) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotAPartition(parts.to_vec()));
        }
        let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if parts.len() > n_bound {
            return Err(ShapeError::TooLong {
                len: parts.len(),
                n: n_bound,
            });
        }
        Ok(Partition { parts, n_bound })
    }

    pub fn empty(n_bound: usize) -> Self {
        Partition {
            parts: Vec::new(),
            n_bound,
        }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n_bound`.
    pub fn padded(&self) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(self.n_bound, 0);
        v
    }

    pub fn n_bound(&self) -> usize {
        self.n_bound
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `self + (n, n-1, …, 1)` with `n = n_bound`, always strict of length n.
    pub fn plus_staircase(&self) -> StrictPartition {
        let n = self.n_bound;
        let parts: Vec<usize> = self.padded().iter().enumerate().map(|(i, p)| p + n - i).collect();
        StrictPartition(Partition { parts, n_bound: n })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Parses a comma-separated part list; the empty string is the empty partition.
pub fn parse_parts(s: &str) -> Result<Vec<usize>, ShapeError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| usize::from_str(p.trim()).map_err(|_| ShapeError::BadPartList(s.to_string())))
        .collect()
}

/// Distinct positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: &[usize], n_bound: usize) -> Result<Self, ShapeError> {
        Self::try_from(Partition::new(parts, n_bound)?)
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.part(i)
    }

    pub fn n_bound(&self) -> usize {
        self.0.n_bound()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.largest()
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = ShapeError;

    fn try_from(p: Partition) -> Result<Self, ShapeError> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(ShapeError::NotStrict(p.parts))
        }
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All partitions (strict ones if `strict`) with parts at most `max_part` and
/// at most `n_bound` parts, in lexicographic order.
pub fn enumerate_partitions(max_part: usize, n_bound: usize, strict: bool) -> Vec<Partition> {
    fn go(prefix: &mut Vec<usize>, max_part: usize, n_bound: usize, strict: bool, out: &mut Vec<Partition>) {
        out.push(Partition {
            parts: prefix.clone(),
            n_bound,
        });
        if prefix.len() == n_bound {
            return;
        }
        let cap = match prefix.last() {
            Some(&p) if strict => p - 1,
            Some(&p) => p,
            None => max_part,
        };
        for p in 1..=cap {
            prefix.push(p);
            go(prefix, max_part, n_bound, strict, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_part, n_bound, strict, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(ps: &[Partition]) -> Vec<Vec<usize>> {
        ps.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn small_listings() {
        assert_eq!(
            parts(&enumerate_partitions(1, 2, false)),
            vec![vec![], vec![1], vec![1, 1]]
        );
        assert_eq!(
            parts(&enumerate_partitions(2, 2, true)),
            vec![vec![], vec![1], vec![2], vec![2, 1]]
        );
    }

    #[test]
    fn count_against_triple_loop() {
        let mut count = 0;
        for a in 0..=3 {
            for b in 0..=a {
                for c in 0..=b {
                    let _ = (a, b, c);
                    count += 1;
                }
            }
        }
        assert_eq!(enumerate_partitions(3, 3, false).len(), count);
        assert_eq!(count, 20);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(&[1, 2], 3).is_err());
        assert!(Partition::new(&[1, 1, 1], 2).is_err());
        assert_eq!(Partition::new(&[2, 1, 0], 2).unwrap().parts(), &[2, 1]);
        assert!(StrictPartition::new(&[2, 2], 3).is_err());
        assert_eq!(parse_parts("4,3,3").unwrap(), vec![4, 3, 3]);
        assert_eq!(parse_parts("").unwrap(), Vec::<usize>::new());
        assert!(parse_parts("1,x").is_err());
    }

    #[test]
    fn staircase() {
        let mu = Partition::new(&[1], 3).unwrap();
        assert_eq!(mu.plus_staircase().parts(), &[4, 2, 1]);
    }
}
