//! Tableaux in English notation, Schensted insertion and reading words.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

/// A filling of a partition shape: rows weakly increase, columns strictly increase.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape_ok = rows.iter().all(|r| !r.is_empty()) && rows.windows(2).all(|p| p[0].len() >= p[1].len());
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(below, above)| above < below));
        if shape_ok && rows_ok && cols_ok {
            Ok(Tableau { rows })
        } else {
            Err(Error::InvalidTableau(rows))
        }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Tableau::new(rows.clone()).is_ok(), "{rows:?}");
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows form a partition shape")
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Whether the entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Row reading word: rows from bottom to top, each read left to right.
    pub fn rowword(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Schensted row insertion of a single letter.
    pub fn row_insert_one(&mut self, mut x: u32) {
        for row in self.rows.iter_mut() {
            let pos = row.partition_point(|&e| e <= x);
            if pos == row.len() {
                row.push(x);
                return;
            }
            x = std::mem::replace(&mut row[pos], x);
        }
        self.rows.push(vec![x]);
    }

    /// Column insertion of a single letter: in each column the smallest entry
    /// `≥ x` is bumped into the next column.
    pub fn column_insert_one(&self, x: u32) -> Tableau {
        let mut rows = self.rows.clone();
        let mut x = x;
        let mut col = 0;
        loop {
            let height = rows.iter().take_while(|r| r.len() > col).count();
            match (0..height).find(|&r| rows[r][col] >= x) {
                Some(r) => {
                    x = std::mem::replace(&mut rows[r][col], x);
                    col += 1;
                }
                None => {
                    if height == rows.len() {
                        rows.push(vec![x]);
                    } else {
                        rows[height].push(x);
                    }
                    return Tableau::from_rows_unchecked(rows);
                }
            }
        }
    }

    /// Replaces entries by `1..=size` preserving their relative order.
    /// Equal entries are ordered by reading position (`rowword` order).
    pub fn standardize(&self) -> Tableau {
        let mut cells: Vec<(u32, usize, usize)> = Vec::with_capacity(self.size());
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                cells.push((v, c, r));
            }
        }
        cells.sort_unstable();
        let mut rows = self.rows.clone();
        for (rank, &(_, c, r)) in cells.iter().enumerate() {
            rows[r][c] = rank as u32 + 1;
        }
        Tableau::from_rows_unchecked(rows)
    }
}

/// The insertion tableau `P(word)`.
pub fn row_insert(word: &[u32]) -> Tableau {
    let mut t = Tableau::empty();
    for &x in word {
        t.row_insert_one(x);
    }
    t
}

/// All standard Young tableaux of a given shape, in lexicographic order of rows.
pub fn syt_of_shape(shape: &Partition) -> Vec<Tableau> {
    fn rec(shape: &Partition, next: u32, n: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(Tableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for r in 0..shape.len() {
            let len = rows.get(r).map_or(0, Vec::len);
            let above = if r == 0 { usize::MAX } else { rows.get(r - 1).map_or(0, Vec::len) };
            if len < shape.part(r) && len < above {
                if r == rows.len() {
                    rows.push(Vec::new());
                }
                rows[r].push(next);
                rec(shape, next + 1, n, rows, out);
                rows[r].pop();
                if rows[r].is_empty() {
                    rows.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, 1, shape.weight() as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All standard Young tableaux with `n` cells, in lexicographic order of rows.
pub fn all_syt(n: usize) -> Vec<Tableau> {
    let mut out: Vec<Tableau> = partitions(n).iter().flat_map(syt_of_shape).collect();
    out.sort();
    out
}

impl Tableau {
    /// Rows joined by `/`, entries concatenated when all are single digits.
    pub fn compact(&self) -> String {
        if self.rows.is_empty() {
            return "∅".into();
        }
        let narrow = self.rows.iter().flatten().all(|&v| v < 10);
        let sep = if narrow { "" } else { " " };
        self.rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(sep))
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// Aligned grid, one line per row.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return writeln!(f, "∅");
        }
        let width = self.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::all_standard_words;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![0, 0], vec![1]]).is_ok());
    }

    #[test]
    fn row_insert_examples() {
        assert_eq!(row_insert(&[1, 2, 3]), t(&[&[1, 2, 3]]));
        assert_eq!(row_insert(&[3, 1, 2]), t(&[&[1, 2], &[3]]));
        // Schensted by hand on 0 2 3 1 0 3 1 2 0.
        assert_eq!(row_insert(&[0, 2, 3, 1, 0, 3, 1, 2, 0]), t(&[&[0, 0, 0, 2], &[1, 1, 3], &[2, 3]]));
    }

    #[test]
    fn rowword_examples() {
        assert_eq!(t(&[&[1, 2], &[3]]).rowword(), vec![3, 1, 2]);
        assert_eq!(t(&[&[1, 2, 3]]).rowword(), vec![1, 2, 3]);
        assert_eq!(t(&[&[0, 0, 0], &[1, 1], &[2]]).rowword(), vec![2, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn column_insert_examples() {
        assert_eq!(t(&[&[0, 0], &[1]]).column_insert_one(0), t(&[&[0, 0, 0], &[1]]));
        assert_eq!(Tableau::empty().column_insert_one(0), t(&[&[0]]));
        assert_eq!(t(&[&[0]]).column_insert_one(1), t(&[&[0], &[1]]));
    }

    #[test]
    fn column_insertion_prepends_to_the_word() {
        for n in 1..=5 {
            for w in all_standard_words(n) {
                let l = w.letters();
                assert_eq!(row_insert(&l[1..]).column_insert_one(l[0]), row_insert(l));
            }
        }
        // and on words with repeated letters
        for z in [[0u32, 1, 0, 2, 1], [1, 1, 0, 0, 1], [2, 0, 1, 1, 0]] {
            assert_eq!(row_insert(&z[1..]).column_insert_one(z[0]), row_insert(&z));
        }
    }

    #[test]
    fn syt_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_syt(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 10, 26, 76]);
        assert!(all_syt(5).iter().all(Tableau::is_standard));
        assert_eq!(all_syt(0), vec![Tableau::empty()]);
    }

    #[test]
    fn insert_after_rowword_is_identity() {
        for n in 0..=6 {
            for syt in all_syt(n) {
                assert_eq!(row_insert(&syt.rowword()), syt);
            }
        }
    }

    #[test]
    fn knuth_moves_preserve_insertion_tableau() {
        for n in 0..=6 {
            for w in all_standard_words(n) {
                let p = row_insert(w.letters());
                for v in w.knuth_neighbors() {
                    assert_eq!(row_insert(v.letters()), p, "{w} -> {v}");
                }
            }
        }
    }

    #[test]
    fn standardize_preserves_order() {
        assert_eq!(t(&[&[3, 5], &[7]]).standardize(), t(&[&[1, 2], &[3]]));
    }

    #[test]
    fn display() {
        assert_eq!(t(&[&[1, 2, 10], &[3]]).to_string(), " 1  2 10\n 3\n");
        assert_eq!(t(&[&[0, 0, 0], &[1, 1]]).compact(), "000/11");
    }
}
