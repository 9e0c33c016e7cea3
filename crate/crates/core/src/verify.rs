//! Exhaustive verification sweep over all standard words up to a given size.
//!
//! Each check walks every case for `n = 1..=max_n` and stops at its first
//! counterexample. The expensive chain-family checks are capped below
//! `max_n` (see [`CHAIN_SEARCH_MAX_N`], [`CHAIN_LENGTHS_MAX_N`]).

use serde::Serialize;

use crate::catabolism::{catabolizable_set, ctype_greedy, is_catabolizable, superstandard_syt, Mode};
use crate::chains::{family_with_lengths, max_family};
use crate::cocharge::{
    cocharge, cocharge_label, corotate, corotate_labeled, is_cocharge_preserving, is_valid_cocharge_labeling,
    labeling_cocharge, standard_word_from_labeling,
};
use crate::frobenius::frobenius_table;
use crate::insertion::{catabolizability, expand_step, is_ascent, is_catabolism_transformation, run_algorithm3, run_f};
use crate::partition::partitions;
use crate::poset::verify_graded;
use crate::tableau::{all_syt, row_insert};
use crate::word::{all_standard_words, StandardWord};

pub const CHAIN_SEARCH_MAX_N: usize = 7;
pub const CHAIN_LENGTHS_MAX_N: usize = 7;
pub const CATABOLIZABLE_SET_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }
}

struct Check {
    name: &'static str,
    cases: usize,
    counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, cases: 0, counterexample: None }
    }

    /// Records one case; returns false once a counterexample is known.
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        if self.counterexample.is_some() {
            return false;
        }
        self.cases += 1;
        if !ok {
            self.counterexample = Some(describe());
        }
        ok
    }

    fn finish(self) -> CheckResult {
        CheckResult { name: self.name, cases: self.cases, counterexample: self.counterexample }
    }
}

fn words_up_to(max_n: usize) -> impl Iterator<Item = StandardWord> {
    (1..=max_n).flat_map(all_standard_words)
}

pub fn knuth_moves_preserve_insertion(max_n: usize) -> CheckResult {
    let mut c = Check::new("knuth moves preserve P(w)");
    for w in words_up_to(max_n) {
        let p = row_insert(w.letters());
        for v in w.knuth_neighbors() {
            if !c.case(row_insert(v.letters()) == p, || format!("{w} -> {v}")) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn rowword_round_trip(max_n: usize) -> CheckResult {
    let mut c = Check::new("P(rowword(T)) = T");
    for t in (1..=max_n).flat_map(all_syt) {
        if !c.case(row_insert(&t.rowword()) == t, || t.compact()) {
            break;
        }
    }
    c.finish()
}

pub fn cocharge_preserving_equivalence(max_n: usize) -> CheckResult {
    let mut c = Check::new("cocharge-preserving swap conditions agree");
    for w in words_up_to(max_n) {
        let cl = cocharge_label(&w);
        for i in 1..w.len() {
            let v = w.apply_s(i).unwrap();
            let clv = cocharge_label(&v);
            let (mut a, mut b) = (cl.labels().to_vec(), clv.labels().to_vec());
            a.sort_unstable();
            b.sort_unstable();
            let conds = [cl.apply_s(i).unwrap() == clv, a == b, cocharge(&w) == cocharge(&v)];
            let iv = is_cocharge_preserving(&w, i).unwrap();
            if !c.case(conds.iter().all(|&x| x == iv), || format!("{w} at {i}")) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn labeling_round_trip(max_n: usize) -> CheckResult {
    let mut c = Check::new("labelings are valid and invert");
    for w in words_up_to(max_n) {
        let cl = cocharge_label(&w);
        let ok = is_valid_cocharge_labeling(cl.labels())
            && standard_word_from_labeling(&cl).as_ref() == Ok(&w)
            && labeling_cocharge(&cl) == Ok(cocharge(&w));
        if !c.case(ok, || w.to_string()) {
            break;
        }
    }
    c.finish()
}

pub fn corotation_labeling_relation(max_n: usize) -> CheckResult {
    let mut c = Check::new("corotation acts on labelings as y a -> (a+1) y");
    for w in words_up_to(max_n) {
        let Ok((v, kind)) = corotate(&w) else { continue };
        let (expected, lkind) = corotate_labeled(&cocharge_label(&w)).unwrap();
        let ok = cocharge_label(&v) == expected && kind == lkind && cocharge(&v) == cocharge(&w) + 1;
        if !c.case(ok, || format!("{w} -> {v}")) {
            break;
        }
    }
    c.finish()
}

pub fn run_invariants(max_n: usize) -> CheckResult {
    let mut c = Check::new("every step keeps a valid labeling; at most n + C(n,2) steps");
    for w in words_up_to(max_n) {
        let n = w.len();
        let trace = run_f(&w);
        let valid = trace.pairs().iter().all(|p| is_valid_cocharge_labeling(p.full_word().labels()));
        let bounded = trace.steps.len() <= n + n * (n - 1) / 2;
        let progress = trace.pairs().windows(2).all(|p| {
            let shorter = p[1].word.len() + 1 == p[0].word.len();
            let cc = |x: &crate::insertion::WordPartitionPair| labeling_cocharge(&x.full_word()).unwrap_or(usize::MAX);
            shorter || cc(&p[1]) == cc(&p[0]) + 1
        });
        if !c.case(valid && bounded && progress, || w.to_string()) {
            break;
        }
    }
    c.finish()
}

pub fn expansion_replays(max_n: usize) -> CheckResult {
    let mut c = Check::new("step expansions replay to the next pair");
    for w in words_up_to(max_n) {
        for pair in run_f(&w).pairs().into_iter().filter(|p| !p.word.is_empty()) {
            let ok = expand_step(&pair).is_ok_and(|e| {
                let mut cur = pair.full_word();
                for m in &e.moves {
                    match m.apply(&cur) {
                        Ok(next) if is_valid_cocharge_labeling(next.labels()) => cur = next,
                        _ => return false,
                    }
                }
                cur == e.result.full_word()
            });
            if !c.case(ok, || format!("{w} at {} / {}", pair.word, pair.nu)) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn nonzero_corotation_invariance(max_n: usize) -> CheckResult {
    let mut c = Check::new("F invariant under non-zero corotations");
    for w in words_up_to(max_n) {
        let Ok((v, kind)) = corotate(&w) else { continue };
        if kind.zero {
            continue;
        }
        if !c.case(catabolizability(&w) == catabolizability(&v), || format!("{w} -> {v}")) {
            break;
        }
    }
    c.finish()
}

pub fn catabolism_transformation_invariance(max_n: usize) -> CheckResult {
    let mut c = Check::new("F invariant under catabolism transformations");
    for w in words_up_to(max_n) {
        let cl = cocharge_label(&w);
        let f = catabolizability(&w);
        for i in 1..w.len() {
            if !is_catabolism_transformation(&cl, i).unwrap() {
                continue;
            }
            let v = w.apply_s(i).unwrap();
            if !c.case(catabolizability(&v) == f, || format!("{w} at {i}")) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn knuth_invariance(max_n: usize) -> CheckResult {
    let mut c = Check::new("F invariant under Knuth transformations");
    for w in words_up_to(max_n) {
        let f = catabolizability(&w);
        for v in w.knuth_neighbors() {
            if !c.case(catabolizability(&v) == f, || format!("{w} -> {v}")) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn f_equals_ctype(max_n: usize) -> CheckResult {
    let mut c = Check::new("F(w) = ctype(P(w)), row and column");
    for w in words_up_to(max_n) {
        let t = row_insert(w.letters());
        let f = catabolizability(&w);
        let ok = f == ctype_greedy(&t, Mode::Row) && f == ctype_greedy(&t, Mode::Column);
        if !c.case(ok, || w.to_string()) {
            break;
        }
    }
    c.finish()
}

pub fn ctype_is_unique_maximum(max_n: usize) -> CheckResult {
    let mut c = Check::new("ctype is the dominance maximum of the catabolizable set");
    for t in (1..=max_n.min(CATABOLIZABLE_SET_MAX_N)).flat_map(all_syt) {
        let ct = ctype_greedy(&t, Mode::Row);
        let set = catabolizable_set(&t);
        let ok = set.contains(&ct) && set.iter().all(|l| ct.dominates(l));
        if !c.case(ok, || t.compact()) {
            break;
        }
    }
    c.finish()
}

pub fn bounded_algorithm_matches_definition(max_n: usize) -> CheckResult {
    let mut c = Check::new("bounded insertion decides λ-catabolizability");
    for w in words_up_to(max_n) {
        let t = row_insert(w.letters());
        for shape in partitions(w.len()) {
            let ok = run_algorithm3(&w, &shape) == is_catabolizable(&t, &shape, Mode::Row);
            if !c.case(ok, || format!("{w} with {shape}")) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn row_column_agreement(max_n: usize) -> CheckResult {
    let mut c = Check::new("row and column catabolizability agree");
    for t in (1..=max_n).flat_map(all_syt) {
        for shape in partitions(t.size()) {
            let ok = is_catabolizable(&t, &shape, Mode::Row) == is_catabolizable(&t, &shape, Mode::Column);
            if !c.case(ok, || format!("{} with {shape}", t.compact())) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn superstandard_normalization(max_n: usize) -> CheckResult {
    let mut c = Check::new("F(rowword(Z*_λ)) = λ");
    for shape in (1..=max_n).flat_map(partitions) {
        let w = StandardWord::new(superstandard_syt(&shape).rowword()).unwrap();
        if !c.case(catabolizability(&w) == shape, || shape.to_string()) {
            break;
        }
    }
    c.finish()
}

pub fn chain_family_statistic(max_n: usize) -> CheckResult {
    let mut c = Check::new("Σ_{i≤k} F(w)_i = I_k");
    for w in words_up_to(max_n.min(CHAIN_SEARCH_MAX_N)) {
        let cl = cocharge_label(&w);
        let f = catabolizability(&w);
        for k in 1..=w.len() {
            if !c.case(max_family(&cl, k).0 == f.prefix_sum(k), || format!("{w} k={k}")) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn chain_lengths_witness(max_n: usize) -> CheckResult {
    let mut c = Check::new("chain family with lengths ctype' exists");
    for w in words_up_to(max_n.min(CHAIN_LENGTHS_MAX_N)) {
        let lengths = catabolizability(&w).conjugate();
        let ok = family_with_lengths(&cocharge_label(&w), &lengths).is_some_and(|f| f.lengths() == lengths.parts());
        if !c.case(ok, || w.to_string()) {
            break;
        }
    }
    c.finish()
}

pub fn cyclage_graded(max_n: usize) -> CheckResult {
    let mut c = Check::new("cyclage poset graded by cocharge");
    for n in 1..=max_n {
        let r = verify_graded(n);
        if !c.case(r.graded(), || format!("n={n}: {:?}", r.counterexamples.first())) {
            break;
        }
    }
    c.finish()
}

pub fn corotation_changes_ctype(max_n: usize) -> CheckResult {
    let mut c = Check::new("non-zero corotations keep ctype, zero ones lower it");
    for w in words_up_to(max_n) {
        let Ok((v, kind)) = corotate(&w) else { continue };
        let (a, b) = (catabolizability(&w), catabolizability(&v));
        let ok = if kind.zero { a.dominates(&b) && a != b } else { a == b };
        if !c.case(ok, || format!("{w} -> {v}")) {
            break;
        }
    }
    c.finish()
}

pub fn ascents_lower_ctype(max_n: usize) -> CheckResult {
    let mut c = Check::new("ascents weakly lower ctype");
    for w in words_up_to(max_n) {
        let cl = cocharge_label(&w);
        let f = catabolizability(&w);
        for i in 1..w.len() {
            if !is_ascent(&cl, i).unwrap() {
                continue;
            }
            let v = w.apply_s(i).unwrap();
            if !c.case(f.dominates(&catabolizability(&v)), || format!("{w} at {i}")) {
                return c.finish();
            }
        }
    }
    c.finish()
}

pub fn garnir_degree(max_n: usize) -> CheckResult {
    let mut c = Check::new("shape λ first appears once at degree Σ λ_i(i-1)");
    for shape in (1..=max_n).flat_map(partitions) {
        let table = frobenius_table(&shape);
        let deg = shape.min_cocharge_degree();
        let ok = table.lowest_degree(&shape) == Some(deg) && table.coefficient(&shape, deg) == 1;
        if !c.case(ok, || shape.to_string()) {
            break;
        }
    }
    c.finish()
}

/// Runs every check up to size `max_n`.
pub fn run_suite(max_n: usize) -> SuiteReport {
    let checks: Vec<fn(usize) -> CheckResult> = vec![
        knuth_moves_preserve_insertion,
        rowword_round_trip,
        cocharge_preserving_equivalence,
        labeling_round_trip,
        corotation_labeling_relation,
        run_invariants,
        expansion_replays,
        nonzero_corotation_invariance,
        catabolism_transformation_invariance,
        knuth_invariance,
        f_equals_ctype,
        ctype_is_unique_maximum,
        bounded_algorithm_matches_definition,
        row_column_agreement,
        superstandard_normalization,
        chain_family_statistic,
        chain_lengths_witness,
        cyclage_graded,
        corotation_changes_ctype,
        ascents_lower_ctype,
        garnir_degree,
    ];
    SuiteReport { max_n, checks: checks.into_iter().map(|check| check(max_n)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_at_four() {
        let report = run_suite(4);
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.counterexample);
            assert!(c.cases > 0, "{}", c.name);
        }
    }

    #[test]
    fn check_stops_at_first_failure() {
        let mut c = Check::new("x");
        assert!(c.case(true, String::new));
        assert!(!c.case(false, || "bad".into()));
        assert!(!c.case(false, || "worse".into()));
        let r = c.finish();
        assert_eq!((r.cases, r.counterexample.as_deref()), (2, Some("bad")));
    }
}
