//! Graded Frobenius-series tables: for each SYT `T` with `ctype(T) ⊵ λ`,
//! one unit at shape `sh(T)` and degree `cocharge(T)`. Schur functions stay
//! formal, keyed by shape.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::catabolism::{ctype_greedy, superstandard_syt, Mode};
use crate::cocharge::tableau_cocharge;
use crate::partition::Partition;
use crate::tableau::{all_syt, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusTable {
    pub lambda: Partition,
    /// Coefficients of `t^0, t^1, …` per shape, trailing zeros trimmed.
    pub entries: BTreeMap<Partition, Vec<u64>>,
}

impl FrobeniusTable {
    pub fn coefficient(&self, shape: &Partition, degree: usize) -> u64 {
        self.entries.get(shape).and_then(|c| c.get(degree)).copied().unwrap_or(0)
    }

    /// The shape's coefficients evaluated at `t = 1`.
    pub fn shape_total(&self, shape: &Partition) -> u64 {
        self.entries.get(shape).map_or(0, |c| c.iter().sum())
    }

    /// Lowest degree with a nonzero coefficient for `shape`.
    pub fn lowest_degree(&self, shape: &Partition) -> Option<usize> {
        self.entries.get(shape).and_then(|c| c.iter().position(|&x| x != 0))
    }
}

pub fn frobenius_table(lambda: &Partition) -> FrobeniusTable {
    let n = lambda.weight();
    let mut entries: BTreeMap<Partition, Vec<u64>> = BTreeMap::new();
    for t in all_syt(n) {
        if !ctype_greedy(&t, Mode::Row).dominates(lambda) {
            continue;
        }
        let coeffs = entries.entry(t.shape()).or_insert_with(|| vec![0; n * n.saturating_sub(1) / 2 + 1]);
        coeffs[tableau_cocharge(&t)] += 1;
    }
    for coeffs in entries.values_mut() {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
    }
    FrobeniusTable { lambda: lambda.clone(), entries }
}

/// The unique SYT of shape λ with the least cocharge, `Σ λ_i (i-1)`.
pub fn garnir_tableau(shape: &Partition) -> Tableau {
    superstandard_syt(shape)
}

/// One line per shape, largest shape first: `shape: c_0 c_1 …`.
impl fmt::Display for FrobeniusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (shape, coeffs) in self.entries.iter().rev() {
            let c: Vec<String> = coeffs.iter().map(u64::to_string).collect();
            writeln!(f, "{shape}: {}", c.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;
    use crate::tableau::syt_of_shape;

    #[test]
    fn one_row_lambda() {
        for n in 1..=6 {
            let table = frobenius_table(&Partition::row(n));
            assert_eq!(table.entries.len(), 1);
            assert_eq!(table.entries[&Partition::row(n)], vec![1]);
        }
    }

    #[test]
    fn column_lambda_counts_every_tableau() {
        for n in 1..=6 {
            let table = frobenius_table(&Partition::column(n));
            for shape in partitions(n) {
                assert_eq!(table.shape_total(&shape), syt_of_shape(&shape).len() as u64);
            }
        }
    }

    #[test]
    fn shape_lambda_starts_at_the_garnir_degree() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                let table = frobenius_table(&lambda);
                let deg = lambda.min_cocharge_degree();
                assert_eq!(table.lowest_degree(&lambda), Some(deg), "{lambda}");
                assert_eq!(table.coefficient(&lambda, deg), 1);
                let g = garnir_tableau(&lambda);
                assert_eq!(g.shape(), lambda);
                assert_eq!(tableau_cocharge(&g), deg);
            }
        }
    }

    #[test]
    fn garnir_examples() {
        assert_eq!(garnir_tableau(&Partition::row(4)).rows(), &[vec![1, 2, 3, 4]]);
        let col = garnir_tableau(&Partition::column(4));
        assert_eq!(tableau_cocharge(&col), 6);
    }

    #[test]
    fn monotone_in_lambda() {
        for n in 1..=5 {
            let tables: Vec<_> = partitions(n).iter().map(frobenius_table).collect();
            for a in &tables {
                for b in &tables {
                    if a.lambda.dominates(&b.lambda) {
                        for (shape, coeffs) in &a.entries {
                            for (d, &c) in coeffs.iter().enumerate() {
                                assert!(c <= b.coefficient(shape, d));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display() {
        let t = frobenius_table(&Partition::column(3));
        assert_eq!(t.to_string(), "3: 1\n2,1: 0 1 1\n1,1,1: 0 0 0 1\n");
    }
}
