//! Chains of the extended labeling and the chain-family statistic `I_k`.
//!
//! For a labeling `z` of length `n`, the extended labeling is defined on all
//! integers `i ≤ n` by `w̃(i) = z_{i+qn} + q`, with `q` chosen so that
//! `i + qn ∈ [1, n]`. A chain is a strictly increasing index sequence
//! `j_{k'} < … < j_0` with `w̃(j_i) = i` and pairwise distinct residues mod
//! `n`. A k-bounded chain family is a set of chains of length at most `k`
//! whose residue sets are disjoint; `I_k` is the largest total size.
//!
//! Chains of a k-bounded family only take values `≤ k - 1`, and every index
//! `≤ n - kn` has `w̃ ≥ k`, so searching the window `(n - kn, n]` is exact.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::LabeledWord;

/// `w̃(i)` for `i ≤ n`.
pub fn wtilde(z: &[u32], i: i64) -> Result<u32> {
    let n = z.len() as i64;
    if i > n || n == 0 {
        return Err(Error::IndexOutOfRange(i));
    }
    let shift = (n - i) / n;
    Ok(z[(i + shift * n - 1) as usize] + shift as u32)
}

/// Residue of `i` as a 0-based position in `z`.
pub fn residue(n: usize, i: i64) -> usize {
    (i - 1).rem_euclid(n as i64) as usize
}

/// The affine simple reflection `s_d` on indices `≤ n`: swaps `d + qn` and `d + 1 + qn`.
pub fn affine_s(n: usize, d: usize, i: i64) -> i64 {
    let r = residue(n, i) + 1;
    if r == d {
        i + 1
    } else if r == d + 1 {
        i - 1
    } else {
        i
    }
}

/// Indices `j_{k'} < … < j_0`, listed in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Chain(Vec<i64>);

impl Chain {
    pub fn new(indices: Vec<i64>) -> Self {
        Chain(indices)
    }

    pub fn indices(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn residues(&self, n: usize) -> Vec<usize> {
        self.0.iter().map(|&i| residue(n, i)).collect()
    }

    pub fn apply_s(&self, n: usize, d: usize) -> Chain {
        Chain(self.0.iter().map(|&i| affine_s(n, d, i)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainFamily {
    pub chains: Vec<Chain>,
    pub bound: usize,
}

impl ChainFamily {
    /// Cardinality of the support.
    pub fn size(&self) -> usize {
        self.chains.iter().map(Chain::len).sum()
    }

    pub fn lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.chains.iter().map(Chain::len).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }
}

pub fn is_chain(z: &LabeledWord, indices: &[i64]) -> bool {
    let z = z.labels();
    let n = z.len();
    if indices.is_empty() || n == 0 {
        return false;
    }
    if !indices.windows(2).all(|p| p[0] < p[1]) {
        return false;
    }
    let top = indices.len() - 1;
    let values_ok = indices.iter().enumerate().all(|(pos, &j)| wtilde(z, j).is_ok_and(|v| v as usize == top - pos));
    let mut seen = vec![false; n];
    values_ok && indices.iter().all(|&j| !std::mem::replace(&mut seen[residue(n, j)], true))
}

/// Checks every chain and that residue sets are pairwise disjoint and lengths within the bound.
pub fn is_chain_family(z: &LabeledWord, family: &ChainFamily) -> bool {
    let n = z.len();
    let mut seen = vec![false; n];
    family.chains.iter().all(|c| {
        c.len() <= family.bound
            && is_chain(z, c.indices())
            && c.indices().iter().all(|&j| !std::mem::replace(&mut seen[residue(n, j)], true))
    })
}

/// Exhaustive search over chain families within the window `(n - periods·n, n]`.
struct Search<'a> {
    z: &'a [u32],
    periods: u32,
    zeros: Vec<usize>,
    bound: usize,
    /// Residues that can carry a value `< bound` inside the window.
    eligible: u64,
    chains: Vec<Vec<i64>>,
    goal: Goal,
}

enum Goal {
    /// Largest size, ties broken by the lexicographically least sorted family.
    Max { size: usize, best: Option<Vec<Vec<i64>>> },
    /// First family whose lengths match; `remaining[l]` counts chains of length `l` still needed.
    Lengths { remaining: Vec<usize>, found: Option<Vec<Vec<i64>>> },
}

impl<'a> Search<'a> {
    fn new(z: &'a [u32], bound: usize, periods: u32, goal: Goal) -> Self {
        let n = z.len();
        assert!(n <= 64, "residues are tracked in a u64");
        let zeros = (0..n).filter(|&p| z[p] == 0).collect();
        let eligible = (0..n).filter(|&p| periods > 0 && (z[p] as usize) < bound).fold(0u64, |m, p| m | 1 << p);
        Search { z, periods, zeros, bound, eligible, chains: Vec::new(), goal }
    }

    fn done(&self) -> bool {
        matches!(self.goal, Goal::Lengths { found: Some(_), .. })
    }

    fn pruned(&self, used: u64, size: usize) -> bool {
        match &self.goal {
            Goal::Max { size: best, .. } => size + ((self.eligible & !used).count_ones() as usize) < *best,
            Goal::Lengths { .. } => self.done(),
        }
    }

    fn leaf(&mut self, size: usize) {
        let mut family = self.chains.clone();
        family.sort();
        match &mut self.goal {
            Goal::Max { size: best_size, best } => {
                let better = size > *best_size || best.as_ref().is_none_or(|b| size == *best_size && family < *b);
                if better {
                    *best_size = size;
                    *best = Some(family);
                }
            }
            Goal::Lengths { remaining, found } => {
                if remaining.iter().all(|&c| c == 0) {
                    *found = Some(family);
                }
            }
        }
    }

    fn next_start(&mut self, s: usize, used: u64, size: usize) {
        if self.pruned(used, size) {
            return;
        }
        if s == self.zeros.len() {
            self.leaf(size);
            return;
        }
        let p = self.zeros[s];
        if used & (1 << p) == 0 {
            let mut chain = vec![p as i64 + 1];
            self.extend(s, used | 1 << p, size + 1, &mut chain);
        }
        self.next_start(s + 1, used, size);
    }

    /// `chain` holds `j_0, j_1, …` (decreasing indices).
    fn extend(&mut self, s: usize, used: u64, size: usize, chain: &mut Vec<i64>) {
        if self.pruned(used, size) {
            return;
        }
        let len = chain.len();
        let closable = match &self.goal {
            Goal::Max { .. } => true,
            Goal::Lengths { remaining, .. } => remaining.get(len).is_some_and(|&c| c > 0),
        };
        if closable {
            if let Goal::Lengths { remaining, .. } = &mut self.goal {
                remaining[len] -= 1;
            }
            self.chains.push(chain.iter().rev().copied().collect());
            self.next_start(s + 1, used, size);
            self.chains.pop();
            if let Goal::Lengths { remaining, .. } = &mut self.goal {
                remaining[len] += 1;
            }
        }
        let max_len = match &self.goal {
            Goal::Max { .. } => self.bound,
            Goal::Lengths { remaining, .. } => remaining.iter().rposition(|&c| c > 0).unwrap_or(0),
        };
        if len >= max_len {
            return;
        }
        let value = len as u32;
        let n = self.z.len() as i64;
        let last = *chain.last().unwrap();
        for p in 0..self.z.len() {
            if used & (1 << p) != 0 || self.z[p] > value || value - self.z[p] >= self.periods {
                continue;
            }
            let index = p as i64 + 1 - (value - self.z[p]) as i64 * n;
            if index < last {
                chain.push(index);
                self.extend(s, used | 1 << p, size + 1, chain);
                chain.pop();
            }
        }
    }
}

fn to_family(chains: Vec<Vec<i64>>, bound: usize) -> ChainFamily {
    ChainFamily { chains: chains.into_iter().map(Chain).collect(), bound }
}

/// `I_k` with a maximizing k-bounded family; ties go to the lexicographically least family.
pub fn max_family(z: &LabeledWord, k: usize) -> (usize, ChainFamily) {
    max_family_in_window(z, k, k as u32)
}

/// As [`max_family`], searching the window `(n - periods·n, n]`.
pub fn max_family_in_window(z: &LabeledWord, k: usize, periods: u32) -> (usize, ChainFamily) {
    let mut search = Search::new(z.labels(), k, periods, Goal::Max { size: 0, best: None });
    if k > 0 && periods > 0 {
        search.next_start(0, 0, 0);
    }
    match search.goal {
        Goal::Max { size, best } => (size, to_family(best.unwrap_or_default(), k)),
        Goal::Lengths { .. } => unreachable!(),
    }
}

/// A family whose chain lengths are exactly the parts of `lengths`, bounded by the largest part.
pub fn family_with_lengths(z: &LabeledWord, lengths: &Partition) -> Option<ChainFamily> {
    let bound = lengths.part(0);
    if lengths.weight() > z.len() {
        return None;
    }
    let mut remaining = vec![0; bound + 1];
    for &l in lengths.parts() {
        remaining[l] += 1;
    }
    let mut search = Search::new(z.labels(), bound, bound.max(1) as u32, Goal::Lengths { remaining, found: None });
    search.next_start(0, 0, 0);
    match search.goal {
        Goal::Lengths { found, .. } => found.map(|f| to_family(f, bound)),
        Goal::Max { .. } => unreachable!(),
    }
}

/// Every chain with all indices in the window `(n - periods·n, n]`.
pub fn chains_in_window(z: &LabeledWord, periods: u32) -> Vec<Chain> {
    fn rec(z: &[u32], periods: u32, used: u64, chain: &mut Vec<i64>, out: &mut Vec<Chain>) {
        out.push(Chain(chain.iter().rev().copied().collect()));
        let value = chain.len() as u32;
        let n = z.len() as i64;
        let last = *chain.last().unwrap();
        for p in 0..z.len() {
            if used & (1 << p) != 0 || z[p] > value || value - z[p] >= periods {
                continue;
            }
            let index = p as i64 + 1 - (value - z[p]) as i64 * n;
            if index < last {
                chain.push(index);
                rec(z, periods, used | 1 << p, chain, out);
                chain.pop();
            }
        }
    }
    let z = z.labels();
    let mut out = Vec::new();
    for p in (0..z.len()).filter(|&p| z[p] == 0) {
        rec(z, periods, 1 << p, &mut vec![p as i64 + 1], &mut out);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catabolism::superstandard;
    use crate::cocharge::{cocharge_label, is_cocharge_preserving};
    use crate::insertion::catabolizability;
    use crate::partition::partitions;
    use crate::word::{all_standard_words, StandardWord};

    fn z(s: &str) -> LabeledWord {
        s.parse().unwrap()
    }

    /// Brute force over every subset of candidate indices in a window, checking
    /// whether it splits into a family. Only usable for tiny n.
    fn brute_force_i_k(z: &LabeledWord, k: usize) -> usize {
        let n = z.len();
        let mut best = 0;
        let all = chains_in_window(z, k as u32);
        let chains: Vec<&Chain> = all.iter().filter(|c| c.len() <= k).collect();
        // choose chains greedily by exhaustive subset recursion
        fn rec(chains: &[&Chain], i: usize, used: u64, size: usize, n: usize, best: &mut usize) {
            *best = (*best).max(size);
            for j in i..chains.len() {
                let mask = chains[j].residues(n).iter().fold(0u64, |m, &r| m | 1 << r);
                if mask & used == 0 {
                    rec(chains, j + 1, used | mask, size + chains[j].len(), n, best);
                }
            }
        }
        rec(&chains, 0, 0, 0, n, &mut best);
        best
    }

    #[test]
    fn wtilde_examples() {
        let zz = z("0 2 3 1 0 3 1 2 0");
        assert_eq!(wtilde(zz.labels(), 9), Ok(0));
        assert_eq!(wtilde(zz.labels(), 0), Ok(1));
        assert_eq!(wtilde(zz.labels(), 2), Ok(2));
        assert_eq!(wtilde(zz.labels(), -7), Ok(3));
        assert_eq!(wtilde(zz.labels(), -16), Ok(4));
        assert_eq!(wtilde(zz.labels(), 10), Err(Error::IndexOutOfRange(10)));
    }

    #[test]
    fn wtilde_periodicity() {
        for n in 1..=5 {
            for w in all_standard_words(n) {
                let cl = cocharge_label(&w);
                let n = n as i64;
                for i in (1 - 3 * n)..=n {
                    assert_eq!(wtilde(cl.labels(), i - n).unwrap(), wtilde(cl.labels(), i).unwrap() + 1);
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let id = z("0 0 0 0");
        assert!(is_chain(&id, &[2]));
        assert!(!is_chain(&id, &[-2, 2]));
        assert!(is_chain(&id, &[-3, 2]));
        assert!(!is_chain(&id, &[2, -3]));
        assert!(!is_chain(&id, &[]));
        assert!(!is_chain(&id, &[5]));
    }

    #[test]
    fn identity_word_gives_n() {
        for n in 1..=6 {
            let cl = cocharge_label(&StandardWord::identity(n));
            for k in 1..=n {
                let (size, family) = max_family(&cl, k);
                assert_eq!(size, n);
                assert!(is_chain_family(&cl, &family));
            }
            let (_, singles) = max_family(&cl, 1);
            assert_eq!(singles.chains, (1..=n as i64).map(|j| Chain::new(vec![j])).collect::<Vec<_>>());
            let fam = family_with_lengths(&cl, &Partition::column(n)).unwrap();
            assert_eq!(fam.lengths(), vec![1; n]);
        }
    }

    #[test]
    fn worked_example_first_part() {
        let cl = z("0 2 3 1 0 3 1 2 0");
        let (size, family) = max_family(&cl, 1);
        assert_eq!(size, 3);
        assert!(is_chain_family(&cl, &family));
    }

    #[test]
    fn superstandard_reading_words() {
        for n in 1..=6 {
            for shape in partitions(n) {
                let cl = LabeledWord::new(superstandard(&shape).rowword());
                for k in 1..=n {
                    assert_eq!(max_family(&cl, k).0, shape.prefix_sum(k), "{shape} k={k}");
                }
                if n <= 5 {
                    let fam = family_with_lengths(&cl, &shape.conjugate()).unwrap();
                    assert_eq!(fam.lengths(), shape.conjugate().parts());
                    assert!(is_chain_family(&cl, &fam));
                }
            }
        }
    }

    #[test]
    fn search_agrees_with_subset_brute_force() {
        for n in 1..=4 {
            for w in all_standard_words(n) {
                let cl = cocharge_label(&w);
                for k in 1..=n {
                    assert_eq!(max_family(&cl, k).0, brute_force_i_k(&cl, k), "{w} k={k}");
                }
            }
        }
    }

    #[test]
    fn greene_type_identity() {
        for n in 1..=5 {
            for w in all_standard_words(n) {
                let cl = cocharge_label(&w);
                let ct = catabolizability(&w);
                for k in 1..=n {
                    let (size, family) = max_family(&cl, k);
                    assert_eq!(size, ct.prefix_sum(k), "{w} k={k}");
                    assert!(is_chain_family(&cl, &family));
                    assert_eq!(family.size(), size);
                }
                let lengths = family_with_lengths(&cl, &ct.conjugate()).expect("witness exists");
                assert_eq!(lengths.lengths(), ct.conjugate().parts());
            }
        }
    }

    #[test]
    fn monotone_in_k_and_window_is_sound() {
        for n in 1..=5 {
            for w in all_standard_words(n) {
                let cl = cocharge_label(&w);
                let sizes: Vec<usize> = (1..=n).map(|k| max_family(&cl, k).0).collect();
                assert!(sizes.windows(2).all(|p| p[0] <= p[1]));
                assert_eq!(sizes[n - 1], n);
                for k in 1..=n {
                    assert_eq!(max_family_in_window(&cl, k, k as u32 + 1).0, sizes[k - 1]);
                }
            }
        }
    }

    #[test]
    fn witness_is_deterministic() {
        let cl = z("0 2 3 1 0 3 1 2 0");
        assert_eq!(max_family(&cl, 3), max_family(&cl, 3));
        let (_, fam) = max_family(&z("0 0"), 1);
        assert_eq!(fam.chains, vec![Chain::new(vec![1]), Chain::new(vec![2])]);
    }

    #[test]
    fn reflections_carry_chains() {
        for n in 2..=5 {
            for u in all_standard_words(n) {
                let cu = cocharge_label(&u);
                let chains = chains_in_window(&cu, n as u32);
                for d in 1..n {
                    let l = cu.labels();
                    if !is_cocharge_preserving(&u, d).unwrap() || l[d - 1] == l[d] + 1 {
                        continue;
                    }
                    let cv = cocharge_label(&u.apply_s(d).unwrap());
                    for c in &chains {
                        assert!(is_chain(&cv, c.apply_s(n, d).indices()), "{u} d={d} {c:?}");
                    }
                }
            }
        }
    }
}
