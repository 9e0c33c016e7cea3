//! Integer partitions and the dominance order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

/// Outcome of comparing two partitions of the same weight in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Drops trailing zeros before validating.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().take_while(|&&p| p > c).count()).collect())
    }

    /// Sum of the first `k` parts.
    pub fn prefix_sum(&self, k: usize) -> usize {
        self.0.iter().take(k).sum()
    }

    /// `Σ_i λ_i (i-1)`, the smallest cocharge of a standard tableau of this shape.
    pub fn min_cocharge_degree(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Whether adding a cell to row `row` (0-based) keeps this a partition.
    pub fn can_add_to_row(&self, row: usize) -> bool {
        row <= self.len() && (row == 0 || self.part(row - 1) > self.part(row))
    }

    /// Adds a cell to row `row`; returns `None` if the result is not a partition.
    pub fn add_to_row(&self, row: usize) -> Option<Partition> {
        if !self.can_add_to_row(row) {
            return None;
        }
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition(parts))
    }

    /// Compares by partial sums. Partitions of different weight are not comparable.
    pub fn dominance(&self, other: &Partition) -> Result<Dominance> {
        if self.weight() != other.weight() {
            return Err(Error::WeightMismatch { left: self.weight(), right: other.weight() });
        }
        let (mut geq, mut leq) = (true, true);
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            geq &= a >= b;
            leq &= a <= b;
        }
        Ok(match (geq, leq) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// `self ⊵ other`; false across different weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(self.dominance(other), Ok(Dominance::Greater | Dominance::Equal))
    }

    /// Whether `self ▷ other` is a covering relation of the dominance lattice.
    pub fn covers(&self, other: &Partition) -> bool {
        if self.dominance(other) != Ok(Dominance::Greater) {
            return false;
        }
        !partitions(self.weight())
            .iter()
            .any(|mid| mid.dominance(other) == Ok(Dominance::Greater) && self.dominance(mid) == Ok(Dominance::Greater))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses comma-separated parts, e.g. `3,2,1,1`. The empty string and `∅` give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>().map_err(|e| Error::Parse { token: tok.to_string(), reason: e.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[3, 1, 1]).dominance(&p(&[2, 1, 1, 1])), Ok(Dominance::Greater));
        assert_eq!(p(&[2, 2]).dominance(&p(&[2, 2])), Ok(Dominance::Equal));
        assert_eq!(p(&[3, 3]).dominance(&p(&[4, 1, 1])), Ok(Dominance::Incomparable));
        assert_eq!(p(&[2, 1, 1, 1]).dominance(&p(&[3, 1, 1])), Ok(Dominance::Less));
    }

    #[test]
    fn dominance_rejects_unequal_weights() {
        assert_eq!(p(&[2]).dominance(&p(&[2, 1])), Err(Error::WeightMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 2, 1, 1, 1, 1]).conjugate(), p(&[6, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_padded(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn parse() {
        assert_eq!("3,2,1,1,1,1".parse::<Partition>().unwrap(), p(&[3, 2, 1, 1, 1, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        match "3,x".parse::<Partition>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=8 {
            let all = partitions(n);
            for a in &all {
                assert!(a.dominates(a));
                for b in &all {
                    if a.dominates(b) && b.dominates(a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.dominates(b) && b.dominates(c) {
                            assert!(a.dominates(c));
                        }
                    }
                    assert_eq!(a.dominates(b), b.conjugate().dominates(&a.conjugate()));
                }
                assert_eq!(&a.conjugate().conjugate(), a);
            }
        }
    }

    #[test]
    fn covering() {
        assert!(!p(&[3, 1, 1]).covers(&p(&[2, 1, 1, 1])));
        assert!(p(&[3, 1, 1]).covers(&p(&[2, 2, 1])));
        assert!(!p(&[3, 3, 1, 1]).covers(&p(&[3, 2, 1, 1, 1])));
    }
}
