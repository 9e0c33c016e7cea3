//! Superstandard tableaux, slicing, catabolism and the definitional
//! catabolizability tests.
//!
//! Nothing here uses the insertion algorithm; this module is the reference the
//! insertion algorithm is checked against.

use std::str::FromStr;

use serde::Serialize;

use crate::cocharge::standard_word_from_labeling;
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};
use crate::tableau::{row_insert, Tableau};
use crate::word::LabeledWord;

/// Whether catabolism re-inserts the remainder horizontally (`Cat_m`) or vertically (`CCat_m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Row,
    Column,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(Mode::Row),
            "column" | "col" => Ok(Mode::Column),
            _ => Err(Error::Parse { token: s.to_string(), reason: "expected row or column".into() }),
        }
    }
}

/// `Z_λ`: row `i` filled with `i - 1`.
pub fn superstandard(shape: &Partition) -> Tableau {
    Tableau::from_rows_unchecked(shape.parts().iter().enumerate().map(|(i, &len)| vec![i as u32; len]).collect())
}

/// `Z*_λ`: the standard tableau whose cocharge labeling is `Z_λ`.
pub fn superstandard_syt(shape: &Partition) -> Tableau {
    let labels = LabeledWord::new(superstandard(shape).rowword());
    let w = standard_word_from_labeling(&labels).expect("rowword(Z_λ) is a cocharge labeling");
    row_insert(w.letters())
}

/// A skew tableau, kept only as rows with a left offset. Used transiently by
/// the slicing operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    rows: Vec<(usize, Vec<u32>)>,
}

impl SkewTableau {
    /// Rows given as `(offset, entries)`, top row first.
    pub fn new(rows: Vec<(usize, Vec<u32>)>) -> Self {
        SkewTableau { rows }
    }

    /// `T - T_(m)`: the first `m` cells of the first row removed.
    pub fn without_first_row_prefix(t: &Tableau, m: usize) -> Result<Self> {
        let row_len = t.rows().first().map_or(0, Vec::len);
        if m > row_len {
            return Err(Error::PrefixTooLong { m, row_len });
        }
        let rows = t
            .rows()
            .iter()
            .enumerate()
            .map(|(i, r)| if i == 0 { (m, r[m..].to_vec()) } else { (0, r.clone()) })
            .collect();
        Ok(SkewTableau { rows })
    }

    /// Reading word of the cells selected by `keep(row, column)`; rows bottom to top.
    fn reading_word(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<u32> {
        let mut out = Vec::new();
        for (r, (offset, entries)) in self.rows.iter().enumerate().rev() {
            for (j, &v) in entries.iter().enumerate() {
                if keep(r, offset + j) {
                    out.push(v);
                }
            }
        }
        out
    }
}

impl From<&Tableau> for SkewTableau {
    fn from(t: &Tableau) -> Self {
        SkewTableau { rows: t.rows().iter().map(|r| (0, r.clone())).collect() }
    }
}

/// `H_r(T) = P(T_n T_s)`, slicing between rows `r` and `r + 1` (1-based).
pub fn h_slice(t: &SkewTableau, r: usize) -> Tableau {
    let mut word = t.reading_word(|row, _| row < r);
    word.extend(t.reading_word(|row, _| row >= r));
    row_insert(&word)
}

/// `V_c(T) = P(T_e T_w)`, slicing between columns `c` and `c + 1` (1-based).
pub fn v_slice(t: &SkewTableau, c: usize) -> Tableau {
    let mut word = t.reading_word(|_, col| col >= c);
    word.extend(t.reading_word(|_, col| col < c));
    row_insert(&word)
}

/// `Cat_m(T) = H_1(T - T_(m))`.
pub fn cat(t: &Tableau, m: usize) -> Result<Tableau> {
    Ok(h_slice(&SkewTableau::without_first_row_prefix(t, m)?, 1))
}

/// `CCat_m(T) = V_m(T - T_(m))`.
pub fn ccat(t: &Tableau, m: usize) -> Result<Tableau> {
    Ok(v_slice(&SkewTableau::without_first_row_prefix(t, m)?, m))
}

fn catabolize(t: &Tableau, m: usize, mode: Mode) -> Result<Tableau> {
    match mode {
        Mode::Row => cat(t, m),
        Mode::Column => ccat(t, m),
    }
}

/// Whether the first `m` cells of row 1 hold the `m` smallest entries, i.e. `T_(m) = Z*_(m)`
/// once standardized.
fn has_smallest_prefix(t: &Tableau, m: usize) -> bool {
    let Some(first) = t.rows().first() else {
        return m == 0;
    };
    if m > first.len() {
        return false;
    }
    let mut all: Vec<u32> = t.rows().iter().flatten().copied().collect();
    all.sort_unstable();
    first[..m] == all[..m]
}

/// Largest `m` with `T_(m) = Z*_(m)` for a standard tableau.
fn largest_superstandard_prefix(t: &Tableau) -> usize {
    t.rows().first().map_or(0, |r| r.iter().enumerate().take_while(|&(i, &v)| v as usize == i + 1).count())
}

/// Definitional λ-(column-)catabolizability. Each catabolism output is
/// relabeled order-isomorphically to `1..=k` before recursing.
pub fn is_catabolizable(t: &Tableau, shape: &Partition, mode: Mode) -> Result<bool> {
    if t.size() != shape.weight() {
        return Err(Error::WeightMismatch { left: t.size(), right: shape.weight() });
    }
    let mut current = t.standardize();
    for &m in shape.parts() {
        if !has_smallest_prefix(&current, m) {
            return Ok(false);
        }
        current = catabolize(&current, m, mode)?.standardize();
    }
    Ok(current.is_empty())
}

/// Catabolizability by the greedy rule: repeatedly catabolize by the largest
/// `m` with `T_(m) = Z*_(m)`.
pub fn ctype_greedy(t: &Tableau, mode: Mode) -> Partition {
    ctype_sequence(t, mode).0
}

/// The greedy sequence together with the intermediate (standardized) tableaux.
pub fn ctype_sequence(t: &Tableau, mode: Mode) -> (Partition, Vec<Tableau>) {
    let mut current = t.standardize();
    let mut parts = Vec::new();
    let mut stages = vec![current.clone()];
    while !current.is_empty() {
        let m = largest_superstandard_prefix(&current);
        parts.push(m);
        current = catabolize(&current, m, mode).expect("m fits the first row").standardize();
        stages.push(current.clone());
    }
    let ctype = Partition::new(parts).expect("greedy catabolism yields a partition");
    (ctype, stages)
}

/// Every λ for which `t` is λ-catabolizable, in decreasing lexicographic order.
pub fn catabolizable_set(t: &Tableau) -> Vec<Partition> {
    partitions(t.size()).into_iter().filter(|p| is_catabolizable(t, p, Mode::Row).expect("weights agree")).collect()
}
