//! Canonical labeling by colour refinement with individualization.
//!
//! The search tree individualizes each vertex of the first smallest
//! non-singleton cell and keeps the lexicographically least relabeled
//! adjacency among the leaves. Without automorphism pruning the tree can
//! blow up on very symmetric graphs, so a leaf budget applies; past it the
//! identity labeling is used. Keys are relabeled adjacency matrices either
//! way, so two equal keys always certify an isomorphism through the labelings.

use crate::graph::Graph;
use crate::vertex_set::{VertexId, VertexSet};

pub const DEFAULT_LEAF_BUDGET: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// Row `i` is the neighborhood of canonical vertex `i`.
    pub key: Vec<VertexSet>,
    /// `labeling[v]` is the canonical index of vertex `v`.
    pub labeling: Vec<VertexId>,
    /// False when the leaf budget forced the identity labeling.
    pub canonical: bool,
}

impl CanonicalForm {
    /// `map[v]` for `v` in `self`'s graph is the matching vertex in
    /// `other`'s graph. Only meaningful when the keys are equal.
    pub fn map_to(&self, other: &CanonicalForm) -> Vec<VertexId> {
        let mut inv = vec![0; other.labeling.len()];
        for (v, &c) in other.labeling.iter().enumerate() {
            inv[c] = v;
        }
        self.labeling.iter().map(|&c| inv[c]).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_budgeted(g, DEFAULT_LEAF_BUDGET)
}

pub fn canonical_form_budgeted(g: &Graph, leaf_budget: usize) -> CanonicalForm {
    let mut search = Search {
        g,
        best: None,
        leaves: 0,
        budget: leaf_budget,
    };
    let colors = refine(g, vec![0; g.n()]);
    search.walk(colors);
    match search.best {
        Some((key, labeling)) if search.leaves <= search.budget => CanonicalForm {
            key,
            labeling,
            canonical: true,
        },
        _ => {
            let labeling: Vec<VertexId> = (0..g.n()).collect();
            CanonicalForm {
                key: relabeled(g, &labeling),
                labeling,
                canonical: false,
            }
        }
    }
}

/// Adjacency rows after moving each vertex `v` to `labeling[v]`.
fn relabeled(g: &Graph, labeling: &[VertexId]) -> Vec<VertexSet> {
    let mut rows = vec![VertexSet::EMPTY; g.n()];
    for v in 0..g.n() {
        rows[labeling[v]] = g.neighbors(v).map(labeling);
    }
    rows
}

/// Refines a colouring until stable. New colours are ranks of
/// `(old colour, neighbor counts per colour)`, so the order of existing
/// classes is preserved.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; classes];
                for u in g.neighbors(v) {
                    counts[colors[u]] += 1;
                }
                (colors[v], counts)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<VertexSet>, Vec<VertexId>)>,
    leaves: usize,
    budget: usize,
}

impl Search<'_> {
    fn walk(&mut self, colors: Vec<usize>) {
        if self.leaves > self.budget {
            return;
        }
        let classes = count_classes(&colors);
        if classes == self.g.n() {
            self.leaves += 1;
            let key = relabeled(self.g, &colors);
            if self.best.as_ref().map_or(true, |(b, _)| key < *b) {
                self.best = Some((key, colors));
            }
            return;
        }
        let mut sizes = vec![0usize; classes];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..classes)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .expect("a non-singleton class exists");
        for v in (0..self.g.n()).filter(|&v| colors[v] == target) {
            // v goes just before the rest of its class.
            let split: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + usize::from(c == target && u != v))
                .collect();
            self.walk(refine(self.g, compress(split)));
        }
    }
}

fn compress(colors: Vec<usize>) -> Vec<usize> {
    let mut distinct = colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    colors
        .iter()
        .map(|c| distinct.binary_search(c).expect("present"))
        .collect()
}
