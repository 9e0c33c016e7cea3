//! Cocharge labelings, (co)rotations and cocharge-preserving swaps.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{row_insert, Tableau};
use crate::word::{LabeledWord, StandardWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Rotation,
    Corotation,
}

/// Direction of a (co)rotation and whether the moved letter carries a nonzero label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RotationKind {
    pub direction: Direction,
    pub zero: bool,
}

impl RotationKind {
    fn from_label(direction: Direction, label: u32) -> Self {
        RotationKind { direction, zero: label == 0 }
    }
}

/// Labels the 1 with 0; the `i + 1` gets the label of `i`, plus one if it sits to the left of `i`.
pub fn cocharge_label(w: &StandardWord) -> LabeledWord {
    let pos = w.positions();
    let mut labels = vec![0u32; w.len()];
    let mut current = 0;
    for v in 1..pos.len() {
        if pos[v] < pos[v - 1] {
            current += 1;
        }
        labels[pos[v]] = current;
    }
    LabeledWord::new(labels)
}

pub fn cocharge(w: &StandardWord) -> usize {
    cocharge_label(w).labels().iter().map(|&l| l as usize).sum()
}

/// Cocharge of a labeled word, which must be a valid cocharge labeling.
pub fn labeling_cocharge(z: &LabeledWord) -> Result<usize> {
    if !is_valid_cocharge_labeling(z.labels()) {
        return Err(Error::InvalidLabeling(z.labels().to_vec()));
    }
    Ok(z.labels().iter().map(|&l| l as usize).sum())
}

/// A word is a cocharge labeling iff its labels are `0..=l` with every value
/// present and, for each `i` in `1..=l`, some `i` sits left of some `i - 1`.
pub fn is_valid_cocharge_labeling(z: &[u32]) -> bool {
    let Some(&max) = z.iter().max() else {
        return true;
    };
    let max = max as usize;
    let mut leftmost = vec![usize::MAX; max + 1];
    let mut rightmost = vec![None; max + 1];
    for (p, &l) in z.iter().enumerate() {
        let l = l as usize;
        leftmost[l] = leftmost[l].min(p);
        rightmost[l] = Some(p);
    }
    if rightmost.iter().any(Option::is_none) {
        return false;
    }
    (1..=max).all(|i| Some(leftmost[i]) < rightmost[i - 1])
}

/// Inverts [`cocharge_label`]: letters with label `k` receive the next block of
/// values, assigned left to right.
pub fn standard_word_from_labeling(z: &LabeledWord) -> Result<StandardWord> {
    let labels = z.labels();
    if !is_valid_cocharge_labeling(labels) {
        return Err(Error::InvalidLabeling(labels.to_vec()));
    }
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by_key(|&p| (labels[p], p));
    let mut letters = vec![0u32; labels.len()];
    for (value, p) in order.into_iter().enumerate() {
        letters[p] = value as u32 + 1;
    }
    Ok(StandardWord::from_vec_unchecked(letters))
}

/// `w a ↦ a w`. The kind is read off the label of `a` in the cocharge labeling of `w a`.
pub fn corotate(w: &StandardWord) -> Result<(StandardWord, RotationKind)> {
    let kind = classify_corotation(w)?;
    let mut letters = w.letters().to_vec();
    letters.rotate_right(1);
    Ok((StandardWord::from_vec_unchecked(letters), kind))
}

pub fn classify_corotation(w: &StandardWord) -> Result<RotationKind> {
    match w.letters().last() {
        None => Err(Error::EmptyWord),
        Some(1) => Err(Error::RotatesOne),
        Some(_) => {
            let label = *cocharge_label(w).labels().last().unwrap();
            Ok(RotationKind::from_label(Direction::Corotation, label))
        }
    }
}

/// `a w ↦ w a`, the inverse of [`corotate`]. The kind is read off the label of `a` in `w a`.
pub fn rotate(w: &StandardWord) -> Result<(StandardWord, RotationKind)> {
    match w.letters().first() {
        None => Err(Error::EmptyWord),
        Some(1) => Err(Error::RotatesOne),
        Some(_) => {
            let mut letters = w.letters().to_vec();
            letters.rotate_left(1);
            let rotated = StandardWord::from_vec_unchecked(letters);
            let label = *cocharge_label(&rotated).labels().last().unwrap();
            Ok((rotated, RotationKind::from_label(Direction::Rotation, label)))
        }
    }
}

/// Corotation on the labeling side: `y a ↦ (a+1) y`, zero iff `a = 0`.
pub fn corotate_labeled(z: &LabeledWord) -> Result<(LabeledWord, RotationKind)> {
    let (&a, y) = z.labels().split_last().ok_or(Error::EmptyWord)?;
    let mut out = Vec::with_capacity(z.len());
    out.push(a + 1);
    out.extend_from_slice(y);
    Ok((LabeledWord::new(out), RotationKind::from_label(Direction::Corotation, a)))
}

/// Whether `w ↝ w s_i` preserves cocharge, i.e. `|w_i - w_{i+1}| ≠ 1`.
pub fn is_cocharge_preserving(w: &StandardWord, i: usize) -> Result<bool> {
    let l = w.letters();
    if i == 0 || i >= l.len() {
        return Err(Error::PositionOutOfRange { position: i, len: l.len() });
    }
    Ok(l[i - 1].abs_diff(l[i]) != 1)
}

/// `cl(T) = P(cl(rowword(T)))` for a standard tableau.
pub fn labeled_tableau(t: &Tableau) -> Tableau {
    let w = StandardWord::from_vec_unchecked(t.rowword());
    row_insert(cocharge_label(&w).labels())
}

/// Cocharge of a standard tableau, the sum of the entries of [`labeled_tableau`].
pub fn tableau_cocharge(t: &Tableau) -> usize {
    cocharge(&StandardWord::from_vec_unchecked(t.rowword()))
}
