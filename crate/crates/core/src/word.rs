//! Standard words, labeled words, and the moves acting on them.
//!
//! Positions are 1-based throughout, as are the letters of standard words.
//! Labels of a labeled word start at 0.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of `1..=n` written as a sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct StandardWord(Vec<u32>);

/// A word over the nonnegative integers, typically a cocharge labeling.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct LabeledWord(Vec<u32>);

impl StandardWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &l in &letters {
            let l = l as usize;
            if l == 0 || l > n || seen[l] {
                return Err(Error::NotStandard(letters));
            }
            seen[l] = true;
        }
        Ok(StandardWord(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(StandardWord::new(letters.clone()).is_ok());
        StandardWord(letters)
    }

    /// `1 2 … n`.
    pub fn identity(n: usize) -> Self {
        StandardWord((1..=n as u32).collect())
    }

    /// `n … 2 1`.
    pub fn reverse(n: usize) -> Self {
        StandardWord((1..=n as u32).rev().collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `positions()[v]` is the 0-based position of the letter `v + 1`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &l) in self.0.iter().enumerate() {
            pos[l as usize - 1] = i;
        }
        pos
    }

    /// The right action of the simple reflection `s_i`.
    pub fn apply_s(&self, i: usize) -> Result<Self> {
        apply_s(&self.0, i).map(StandardWord)
    }

    pub fn knuth_neighbors(&self) -> Vec<StandardWord> {
        knuth_neighbors(&self.0).into_iter().map(StandardWord).collect()
    }
}

impl LabeledWord {
    pub fn new(labels: Vec<u32>) -> Self {
        LabeledWord(labels)
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn into_labels(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply_s(&self, i: usize) -> Result<Self> {
        apply_s(&self.0, i).map(LabeledWord)
    }

    pub fn knuth_neighbors(&self) -> Vec<LabeledWord> {
        knuth_neighbors(&self.0).into_iter().map(LabeledWord).collect()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &[u32]) -> LabeledWord {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        LabeledWord(v)
    }
}

impl From<Vec<u32>> for LabeledWord {
    fn from(v: Vec<u32>) -> Self {
        LabeledWord(v)
    }
}

/// Swaps the letters in positions `i` and `i + 1` (1-based).
pub fn apply_s(word: &[u32], i: usize) -> Result<Vec<u32>> {
    if i == 0 || i >= word.len() {
        return Err(Error::PositionOutOfRange { position: i, len: word.len() });
    }
    let mut out = word.to_vec();
    out.swap(i - 1, i);
    Ok(out)
}

/// Whether swapping positions `i, i + 1` (0-based start `p` of the window
/// `p, p + 1, p + 2`) is an elementary Knuth transformation.
///
/// The two relations are `x z y ↔ z x y` for `x ≤ y < z` and
/// `y x z ↔ y z x` for `x < y ≤ z`.
pub fn is_knuth_swap(word: &[u32], window: usize, i: usize) -> bool {
    if window + 2 >= word.len() {
        return false;
    }
    let (a, b, c) = (word[window], word[window + 1], word[window + 2]);
    if i == window {
        // x z y ↔ z x y: the pair swapped is the first two, y sits third.
        let (lo, hi) = (a.min(b), a.max(b));
        lo <= c && c < hi
    } else if i == window + 1 {
        // y x z ↔ y z x: the pair swapped is the last two, y sits first.
        let (lo, hi) = (b.min(c), b.max(c));
        lo < a && a <= hi
    } else {
        false
    }
}

/// All words one elementary Knuth transformation away from `word`, sorted.
pub fn knuth_neighbors(word: &[u32]) -> Vec<Vec<u32>> {
    let mut out = BTreeSet::new();
    for window in 0..word.len().saturating_sub(2) {
        for i in [window, window + 1] {
            if is_knuth_swap(word, window, i) {
                let mut w = word.to_vec();
                w.swap(i, i + 1);
                out.insert(w);
            }
        }
    }
    out.into_iter().collect()
}

/// All `n!` standard words of length `n`, in lexicographic order.
pub fn all_standard_words(n: usize) -> impl Iterator<Item = StandardWord> {
    (1..=n as u32).permutations(n).map(StandardWord)
}

fn parse_letters(s: &str) -> Result<Vec<u32>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|tok| tok.parse::<u32>().map_err(|e| Error::Parse { token: tok.to_string(), reason: e.to_string() }))
        .collect()
}

/// Parses whitespace-separated letters. A single run of digits such as
/// `168429573` is read one digit per letter.
impl FromStr for StandardWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let letters = if toks.len() == 1 && toks[0].len() > 1 && toks[0].chars().all(|c| c.is_ascii_digit()) {
            toks[0].chars().map(|c| c.to_digit(10).unwrap()).collect()
        } else {
            parse_letters(s)?
        };
        StandardWord::new(letters)
    }
}

/// Same conventions as [`StandardWord`]'s parser, without the permutation check.
impl FromStr for LabeledWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() == 1 && toks[0].len() > 1 && toks[0].chars().all(|c| c.is_ascii_digit()) {
            return Ok(LabeledWord(toks[0].chars().map(|c| c.to_digit(10).unwrap()).collect()));
        }
        parse_letters(s).map(LabeledWord)
    }
}

pub(crate) fn fmt_letters(f: &mut fmt::Formatter<'_>, letters: &[u32]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "∅");
    }
    write!(f, "{}", letters.iter().join(" "))
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(f, &self.0)
    }
}

impl fmt::Display for LabeledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(f, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> StandardWord {
        s.parse().unwrap()
    }

    #[test]
    fn standard_word_validation() {
        assert!(StandardWord::new(vec![2, 1, 3]).is_ok());
        assert!(StandardWord::new(vec![2, 2, 3]).is_err());
        assert!(StandardWord::new(vec![0, 1]).is_err());
        assert!(StandardWord::new(vec![]).is_ok());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(w("1 6 8 4 2 9 5 7 3"), w("168429573"));
        assert_eq!("0 2 3 1 0".parse::<LabeledWord>().unwrap().labels(), &[0, 2, 3, 1, 0]);
        match "1 x 3".parse::<StandardWord>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn apply_s_examples() {
        assert_eq!(w("1 3 2").apply_s(1).unwrap(), w("3 1 2"));
        let z: LabeledWord = "0 2 3 1 0 3 1 2 0".parse().unwrap();
        assert_eq!(z.apply_s(4).unwrap().labels(), &[0, 2, 3, 0, 1, 3, 1, 2, 0]);
        assert!(w("1 2").apply_s(2).is_err());
        assert!(w("1 2").apply_s(0).is_err());
    }

    #[test]
    fn apply_s_is_an_involution() {
        for n in 2..=5 {
            for u in all_standard_words(n) {
                for i in 1..n {
                    assert_eq!(u.apply_s(i).unwrap().apply_s(i).unwrap(), u);
                }
            }
        }
    }

    #[test]
    fn knuth_neighbor_examples() {
        assert_eq!(knuth_neighbors(&[2, 1, 3]), vec![vec![2, 3, 1]]);
        assert!(knuth_neighbors(&[1, 2, 3]).is_empty());
        assert_eq!(knuth_neighbors(&[1, 3, 2]), vec![vec![3, 1, 2]]);
        // repeated letters: 0 1 0 ↔ 1 0 0 (x z y with x = y)
        assert_eq!(knuth_neighbors(&[0, 1, 0]), vec![vec![1, 0, 0]]);
    }

    #[test]
    fn knuth_neighbors_are_symmetric() {
        for n in 3..=5 {
            for u in all_standard_words(n) {
                for v in u.knuth_neighbors() {
                    assert!(v.knuth_neighbors().contains(&u));
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(all_standard_words(0).count(), 1);
        assert_eq!(all_standard_words(3).count(), 6);
        assert_eq!(all_standard_words(4).count(), 24);
        let words: Vec<_> = all_standard_words(4).collect();
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }
}
