//! The cocyclage poset on standard tableaux.
//!
//! Edges are generated from every standard word, not one representative per
//! tableau, so that the zero/non-zero classification of an edge can be
//! checked against all of its inducing corotations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::catabolism::{ctype_greedy, Mode};
use crate::cocharge::{corotate, tableau_cocharge};
use crate::error::Error;
use crate::partition::{partitions, Partition};
use crate::tableau::{all_syt, row_insert, Tableau};
use crate::word::all_standard_words;

/// `source →cc target`, with the number of inducing corotations of each kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocyclageEdge {
    pub source: Tableau,
    pub target: Tableau,
    pub zero_inducers: usize,
    pub nonzero_inducers: usize,
}

impl CocyclageEdge {
    pub fn zero(&self) -> bool {
        self.nonzero_inducers == 0
    }

    /// All inducing corotations agree on zero versus non-zero.
    pub fn is_consistent(&self) -> bool {
        self.zero_inducers == 0 || self.nonzero_inducers == 0
    }
}

/// All cocyclage edges on SYT of size `n`, sorted by `(source, target)`.
pub fn cocyclage_edges(n: usize) -> Vec<CocyclageEdge> {
    let mut edges: BTreeMap<(Tableau, Tableau), (usize, usize)> = BTreeMap::new();
    for u in all_standard_words(n) {
        let Ok((v, kind)) = corotate(&u) else { continue };
        let counts = edges.entry((row_insert(u.letters()), row_insert(v.letters()))).or_default();
        if kind.zero {
            counts.0 += 1;
        } else {
            counts.1 += 1;
        }
    }
    edges
        .into_iter()
        .map(|((source, target), (zero_inducers, nonzero_inducers))| CocyclageEdge {
            source,
            target,
            zero_inducers,
            nonzero_inducers,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedReport {
    pub n: usize,
    pub nodes: usize,
    pub edges: usize,
    pub min_rank: usize,
    pub max_rank: usize,
    pub connected: bool,
    /// Edges whose cocharge difference is not exactly one, and extremal-element violations.
    pub counterexamples: Vec<String>,
}

impl GradedReport {
    pub fn graded(&self) -> bool {
        self.counterexamples.is_empty() && self.connected
    }
}

/// Checks that cocharge ranks the cyclage poset.
///
/// Every generating edge must raise cocharge by exactly one, which makes each
/// generating edge a cover and cocharge a rank function. The row tableau must
/// be the only element without an incoming edge and the column tableau the
/// only one without an outgoing edge.
pub fn verify_graded(n: usize) -> GradedReport {
    let nodes = all_syt(n);
    let index: BTreeMap<&Tableau, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let rank: Vec<usize> = nodes.iter().map(tableau_cocharge).collect();
    let edges = cocyclage_edges(n);
    let mut counterexamples = Vec::new();
    let mut has_in = vec![false; nodes.len()];
    let mut has_out = vec![false; nodes.len()];
    let mut adj = vec![Vec::new(); nodes.len()];
    for e in &edges {
        let (s, t) = (index[&e.source], index[&e.target]);
        has_out[s] = true;
        has_in[t] = true;
        adj[s].push(t);
        adj[t].push(s);
        if rank[t] != rank[s] + 1 {
            counterexamples.push(format!(
                "{} (cocharge {}) -> {} (cocharge {})",
                e.source.compact(),
                rank[s],
                e.target.compact(),
                rank[t]
            ));
        }
    }
    let max_rank_expected = n * n.saturating_sub(1) / 2;
    for (i, t) in nodes.iter().enumerate() {
        let is_row = t.rows().len() <= 1;
        let is_col = t.rows().iter().all(|r| r.len() == 1);
        if has_in[i] == is_row && n > 1 {
            counterexamples.push(format!("{} has incoming edges: {}", t.compact(), has_in[i]));
        }
        if has_out[i] == is_col && n > 1 {
            counterexamples.push(format!("{} has outgoing edges: {}", t.compact(), has_out[i]));
        }
        if is_row && rank[i] != 0 || is_col && rank[i] != max_rank_expected {
            counterexamples.push(format!("{} has cocharge {}", t.compact(), rank[i]));
        }
    }

    let mut seen = vec![false; nodes.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !std::mem::replace(&mut seen[j], true) {
                stack.push(j);
            }
        }
    }

    GradedReport {
        n,
        nodes: nodes.len(),
        edges: edges.len(),
        min_rank: rank.iter().copied().min().unwrap_or(0),
        max_rank: rank.iter().copied().max().unwrap_or(0),
        connected: seen.iter().all(|&s| s),
        counterexamples,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overlay {
    None,
    Ctype,
}

impl FromStr for Overlay {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "none" => Ok(Overlay::None),
            "ctype" => Ok(Overlay::Ctype),
            _ => Err(Error::Parse { token: s.to_string(), reason: "expected none or ctype".into() }),
        }
    }
}

/// DOT digraph of the cocyclage poset. Zero edges are dashed; with the ctype
/// overlay nodes are filled by catabolizability class.
pub fn export_dot(n: usize, overlay: Overlay) -> String {
    let nodes = all_syt(n);
    let index: BTreeMap<&Tableau, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let classes: Vec<Partition> = partitions(n);
    let mut out = String::new();
    writeln!(out, "digraph cocyclage {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    let mut by_rank: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, t) in nodes.iter().enumerate() {
        let cc = tableau_cocharge(t);
        by_rank.entry(cc).or_default().insert(i);
        let grid = t.compact().replace('/', "\\n");
        match overlay {
            Overlay::None => writeln!(out, "  t{i} [label=\"{grid}\\ncocharge {cc}\"];").unwrap(),
            Overlay::Ctype => {
                let ct = ctype_greedy(t, Mode::Row);
                let class = classes.iter().position(|p| *p == ct).unwrap();
                writeln!(
                    out,
                    "  t{i} [label=\"{grid}\\ncocharge {cc}\\nctype {ct}\", style=filled, colorscheme=set312, fillcolor={}];",
                    class % 12 + 1
                )
                .unwrap();
            }
        }
    }
    for ids in by_rank.values() {
        let ids: Vec<String> = ids.iter().map(|i| format!("t{i}")).collect();
        writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
    }
    for e in cocyclage_edges(n) {
        let (s, t) = (index[&e.source], index[&e.target]);
        let style = if e.zero() { " [style=dashed]" } else { "" };
        writeln!(out, "  t{s} -> t{t}{style};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cells() {
        let edges = cocyclage_edges(2);
        assert_eq!(edges.len(), 1);
        let e = &edges[0];
        assert_eq!(e.source.rows(), &[vec![1, 2]]);
        assert_eq!(e.target.rows(), &[vec![1], vec![2]]);
        assert!(e.zero());
        let dot = export_dot(2, Overlay::None);
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("t1 -> t0 [style=dashed];") || dot.contains("t0 -> t1 [style=dashed];"));
    }

    #[test]
    fn three_cells_are_graded() {
        let report = verify_graded(3);
        assert!(report.graded(), "{report:?}");
        assert_eq!((report.min_rank, report.max_rank, report.nodes), (0, 3, 4));
    }

    #[test]
    fn zero_classification_is_well_defined() {
        for n in 1..=6 {
            assert!(cocyclage_edges(n).iter().all(CocyclageEdge::is_consistent));
        }
    }

    #[test]
    fn graded_up_to_six() {
        for n in 0..=6 {
            let r = verify_graded(n);
            assert!(r.graded(), "{r:?}");
            assert_eq!(r.max_rank, n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn nonzero_edges_stay_in_a_ctype_class() {
        for n in 1..=6 {
            for e in cocyclage_edges(n) {
                let (a, b) = (ctype_greedy(&e.source, Mode::Row), ctype_greedy(&e.target, Mode::Row));
                if e.zero() {
                    assert!(a.dominates(&b) && a != b, "{e:?}");
                } else {
                    assert_eq!(a, b, "{e:?}");
                }
            }
        }
    }

    #[test]
    fn dot_is_deterministic() {
        assert_eq!(export_dot(4, Overlay::Ctype), export_dot(4, Overlay::Ctype));
        assert!(export_dot(3, Overlay::Ctype).contains("ctype 2,1"));
    }
}
