//! Catabolism insertion.
//!
//! A state is a pair `(x, ν)` of a labeled word and a partition. One step
//! presents the last label `a` of `x = y a` to `ν`: it is inserted when
//! `ν + ε_{a+1}` is a partition, giving `(y, ν + ε_{a+1})`, and corotated
//! otherwise, giving `((a+1) y, ν)`. Starting from `(cl(w), ∅)` and stepping
//! until the word is empty yields `F(w) = ctype(P(w))`.
//!
//! The λ-bounded variant additionally refuses insertions past `λ_{a+1}` and
//! rejects as soon as a label `a` with `λ_{a+1} = 0` is presented; it accepts
//! exactly when `P(w)` is λ-catabolizable.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::catabolism::superstandard;
use crate::cocharge::{cocharge_label, corotate_labeled, is_valid_cocharge_labeling, standard_word_from_labeling};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::Tableau;
use crate::word::{is_knuth_swap, LabeledWord, StandardWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WordPartitionPair {
    pub word: LabeledWord,
    pub nu: Partition,
}

impl WordPartitionPair {
    pub fn new(word: LabeledWord, nu: Partition) -> Self {
        WordPartitionPair { word, nu }
    }

    /// `(z, ∅)`.
    pub fn initial(word: LabeledWord) -> Self {
        WordPartitionPair { word, nu: Partition::empty() }
    }

    /// `x · rowword(Z_ν)`.
    pub fn full_word(&self) -> LabeledWord {
        self.word.concat(&superstandard(&self.nu).rowword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Insertion,
    Corotation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub presented: u32,
    pub kind: StepKind,
    pub result: WordPartitionPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub initial: LabeledWord,
    pub steps: Vec<Step>,
    pub output: Partition,
}

impl Trace {
    /// The pairs `f^(i)(z, ∅)` for `i = 0..=steps.len()`.
    pub fn pairs(&self) -> Vec<WordPartitionPair> {
        std::iter::once(WordPartitionPair::initial(self.initial.clone()))
            .chain(self.steps.iter().map(|s| s.result.clone()))
            .collect()
    }

    pub fn insertions(&self) -> usize {
        self.steps.iter().filter(|s| s.kind == StepKind::Insertion).count()
    }

    pub fn corotations(&self) -> usize {
        self.steps.len() - self.insertions()
    }
}

fn insert_or_corotate(pair: &WordPartitionPair, allow_insert: impl Fn(usize) -> bool) -> Result<Step> {
    let (&a, y) = pair.word.labels().split_last().ok_or(Error::EmptyWord)?;
    let row = a as usize;
    if let Some(nu) = pair.nu.add_to_row(row).filter(|_| allow_insert(row)) {
        return Ok(Step {
            presented: a,
            kind: StepKind::Insertion,
            result: WordPartitionPair::new(LabeledWord::new(y.to_vec()), nu),
        });
    }
    let (word, _) = corotate_labeled(&pair.word)?;
    Ok(Step { presented: a, kind: StepKind::Corotation, result: WordPartitionPair::new(word, pair.nu.clone()) })
}

/// One step of the catabolism insertion algorithm.
pub fn step_f(pair: &WordPartitionPair) -> Result<Step> {
    insert_or_corotate(pair, |_| true)
}

/// Runs the algorithm from `(z, ∅)` on a cocharge labeling `z`.
pub fn run_f_labeled(z: &LabeledWord) -> Result<Trace> {
    if !is_valid_cocharge_labeling(z.labels()) {
        return Err(Error::InvalidLabeling(z.labels().to_vec()));
    }
    let mut pair = WordPartitionPair::initial(z.clone());
    let mut steps = Vec::new();
    while !pair.word.is_empty() {
        let step = step_f(&pair)?;
        pair = step.result.clone();
        steps.push(step);
    }
    Ok(Trace { initial: z.clone(), steps, output: pair.nu })
}

/// `F(w)` with its full trace.
pub fn run_f(w: &StandardWord) -> Trace {
    run_f_labeled(&cocharge_label(w)).expect("cocharge labelings are valid")
}

/// `F(w)` without recording a trace.
pub fn catabolizability(w: &StandardWord) -> Partition {
    let mut word = cocharge_label(w).into_labels();
    let mut nu = Partition::empty();
    while let Some(a) = word.pop() {
        match nu.add_to_row(a as usize) {
            Some(next) => nu = next,
            None => word.insert(0, a + 1),
        }
    }
    nu
}

/// Outcome of one step of the λ-bounded algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundedStep {
    Step(Step),
    /// A label `a` with `λ_{a+1} = 0` was presented.
    Reject {
        presented: u32,
    },
}

/// One step of the λ-bounded algorithm: insertion also needs `ν_{a+1} + 1 ≤ λ_{a+1}`.
pub fn step_f_lambda(pair: &WordPartitionPair, shape: &Partition) -> Result<BoundedStep> {
    let &a = pair.word.labels().last().ok_or(Error::EmptyWord)?;
    if shape.part(a as usize) == 0 {
        return Ok(BoundedStep::Reject { presented: a });
    }
    insert_or_corotate(pair, |row| pair.nu.part(row) < shape.part(row)).map(BoundedStep::Step)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedRun {
    pub accepted: bool,
    pub steps: Vec<Step>,
    pub rejected_label: Option<u32>,
}

/// The λ-bounded algorithm with its trace.
pub fn run_algorithm3_traced(w: &StandardWord, shape: &Partition) -> Result<BoundedRun> {
    if w.len() != shape.weight() {
        return Err(Error::WeightMismatch { left: w.len(), right: shape.weight() });
    }
    let mut pair = WordPartitionPair::initial(cocharge_label(w));
    let mut steps = Vec::new();
    while !pair.word.is_empty() {
        match step_f_lambda(&pair, shape)? {
            BoundedStep::Step(step) => {
                pair = step.result.clone();
                steps.push(step);
            }
            BoundedStep::Reject { presented } => {
                return Ok(BoundedRun { accepted: false, steps, rejected_label: Some(presented) });
            }
        }
    }
    Ok(BoundedRun { accepted: true, steps, rejected_label: None })
}

/// Whether `P(w)` is λ-catabolizable, decided by the λ-bounded algorithm.
pub fn run_algorithm3(w: &StandardWord, shape: &Partition) -> Result<bool> {
    run_algorithm3_traced(w, shape).map(|r| r.accepted)
}

fn check_position(z: &LabeledWord, i: usize) -> Result<()> {
    if i == 0 || i >= z.len() {
        return Err(Error::PositionOutOfRange { position: i, len: z.len() });
    }
    Ok(())
}

/// `z ↝ z s_i` with `|z_i - z_{i+1}| > 1`.
pub fn is_catabolism_transformation(z: &LabeledWord, i: usize) -> Result<bool> {
    check_position(z, i)?;
    let l = z.labels();
    Ok(l[i - 1].abs_diff(l[i]) > 1)
}

/// `z ↝ z s_i` is cocharge-preserving and `z_i > z_{i+1}`. `z` must be a cocharge labeling.
pub fn is_ascent(z: &LabeledWord, i: usize) -> Result<bool> {
    check_position(z, i)?;
    let w = standard_word_from_labeling(z)?;
    let (wl, zl) = (w.letters(), z.labels());
    Ok(wl[i - 1].abs_diff(wl[i]) != 1 && zl[i - 1] > zl[i])
}

/// An elementary move on a labeled word. Positions are 1-based and name the
/// left letter of the swapped pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ElementaryMove {
    Knuth {
        position: usize,
    },
    CatabolismTransformation {
        position: usize,
    },
    /// Non-zero corotation of the whole word.
    Corotation,
}

impl ElementaryMove {
    /// Applies the move, checking the condition its tag stands for.
    pub fn apply(&self, z: &LabeledWord) -> Result<LabeledWord> {
        match *self {
            ElementaryMove::Knuth { position } => {
                check_position(z, position)?;
                let i = position - 1;
                let legal = [i.wrapping_sub(1), i]
                    .into_iter()
                    .any(|window| window < z.len() && is_knuth_swap(z.labels(), window, i));
                if !legal {
                    return Err(Error::IllegalMove(format!("no Knuth relation at {position} in {z}")));
                }
                z.apply_s(position)
            }
            ElementaryMove::CatabolismTransformation { position } => {
                if !is_catabolism_transformation(z, position)? {
                    return Err(Error::IllegalMove(format!("labels at {position} differ by at most 1 in {z}")));
                }
                z.apply_s(position)
            }
            ElementaryMove::Corotation => {
                let (out, kind) = corotate_labeled(z)?;
                if kind.zero {
                    return Err(Error::IllegalMove(format!("zero corotation of {z}")));
                }
                Ok(out)
            }
        }
    }
}

/// One step broken into elementary moves on `x · rowword(Z_ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expansion {
    /// `Z_ν` with the presented label column-inserted.
    pub column_inserted: Tableau,
    pub moves: Vec<ElementaryMove>,
    pub result: WordPartitionPair,
}

/// Shortest sequence of Knuth swaps (0-based positions) turning `from` into `to`.
fn knuth_path(from: &[u32], to: &[u32]) -> Option<Vec<usize>> {
    let mut parent: HashMap<Vec<u32>, Option<(Vec<u32>, usize)>> = HashMap::new();
    parent.insert(from.to_vec(), None);
    let mut queue = VecDeque::from([from.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        if cur == to {
            let mut path = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, i))) = parent.get(&node).cloned() {
                path.push(i);
                node = prev;
            }
            path.reverse();
            return Some(path);
        }
        for window in 0..cur.len().saturating_sub(2) {
            for i in [window, window + 1] {
                if is_knuth_swap(&cur, window, i) {
                    let mut next = cur.clone();
                    next.swap(i, i + 1);
                    if !parent.contains_key(&next) {
                        parent.insert(next.clone(), Some((cur.clone(), i)));
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    None
}

/// Realizes one step as Knuth moves, catabolism transformations and a corotation.
///
/// The presented label `a` is column-inserted into `Z_ν`, giving `T`; Knuth
/// moves take `a · rowword(Z_ν)` to `rowword(T)`. On an insertion `T` is the
/// new superstandard tableau. On a corotation `T - Z_ν` is one cell holding
/// `a`, which is moved to the end by catabolism transformations (bubbling
/// left to right) before the whole word is corotated.
pub fn expand_step(pair: &WordPartitionPair) -> Result<Expansion> {
    let step = step_f(pair)?;
    let (&a, y) = pair.word.labels().split_last().ok_or(Error::EmptyWord)?;
    let z_nu = superstandard(&pair.nu);
    let column_inserted = z_nu.column_insert_one(a);
    let offset = y.len();

    let mut suffix = vec![a];
    suffix.extend(z_nu.rowword());
    let target = column_inserted.rowword();
    let swaps = knuth_path(&suffix, &target)
        .ok_or_else(|| Error::IllegalMove("column insertion not reachable by Knuth moves".into()))?;
    let mut moves: Vec<ElementaryMove> =
        swaps.into_iter().map(|i| ElementaryMove::Knuth { position: offset + i + 1 }).collect();

    if step.kind == StepKind::Corotation {
        // Locate the extra cell: the first row where T and Z_ν differ in length.
        let extra_row = (0..column_inserted.rows().len())
            .find(|&r| column_inserted.rows()[r].len() != z_nu.rows().get(r).map_or(0, Vec::len))
            .expect("column insertion adds a cell");
        let below: usize = column_inserted.rows()[extra_row + 1..].iter().map(Vec::len).sum();
        let mut pos = below + column_inserted.rows()[extra_row].len() - 1;
        while pos + 1 < target.len() {
            moves.push(ElementaryMove::CatabolismTransformation { position: offset + pos + 1 });
            pos += 1;
        }
        moves.push(ElementaryMove::Corotation);
    }
    Ok(Expansion { column_inserted, moves, result: step.result })
}

/// Applies moves in order to a labeled word.
pub fn replay(z: &LabeledWord, moves: &[ElementaryMove]) -> Result<LabeledWord> {
    moves.iter().try_fold(z.clone(), |acc, m| m.apply(&acc))
}
