//! k-collapsibility, the collapsibility number and vertex decomposability.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::vertex_set::{maximal_sets, sort_size_lex, VertexId, VertexSet};

pub const DEFAULT_COLLAPSE_BUDGET: u64 = 10_000_000;

/// One elementary collapse: every face between `face` and `facet` is removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub face: VertexSet,
    pub facet: VertexSet,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseTrace {
    /// The last step always removes the empty face, leaving the void complex.
    pub steps: Vec<CollapseStep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Collapsibility {
    Collapsible { trace: CollapseTrace },
    NotCollapsible,
    /// The search budget ran out before a decision.
    Indeterminate { states: u64 },
}

impl Collapsibility {
    pub fn is_collapsible(&self) -> Option<bool> {
        match self {
            Collapsibility::Collapsible { .. } => Some(true),
            Collapsibility::NotCollapsible => Some(false),
            Collapsibility::Indeterminate { .. } => None,
        }
    }
}

/// Facets after removing the interval `[a, f]`.
fn collapse_facets(facets: &[VertexSet], a: VertexSet, f: VertexSet) -> Vec<VertexSet> {
    let mut next: Vec<VertexSet> = facets.iter().copied().filter(|&g| g != f).collect();
    if a.is_empty() {
        return next;
    }
    next.extend(a.iter().map(|v| f.without(v)));
    let mut next = maximal_sets(next);
    sort_size_lex(&mut next);
    next
}

/// Free faces of size at most `k`, in size-lex order, with their facets.
fn free_faces_up_to(facets: &[VertexSet], k: usize) -> Vec<CollapseStep> {
    let mut out = Vec::new();
    for &f in facets {
        let others: Vec<VertexSet> = facets.iter().map(|&g| g & f).filter(|&g| g != f).collect();
        for a in f.subsets() {
            if a.len() <= k && !others.iter().any(|&g| a.is_subset(g)) {
                out.push(CollapseStep { face: a, facet: f });
            }
        }
    }
    out.sort_by(|x, y| x.face.cmp_size_lex(&y.face));
    out
}

pub fn is_k_collapsible(x: &SimplicialComplex, k: usize) -> Collapsibility {
    is_k_collapsible_budgeted(x, k, DEFAULT_COLLAPSE_BUDGET)
}

/// Backtracking over free-face choices with a table of failed residuals.
pub fn is_k_collapsible_budgeted(x: &SimplicialComplex, k: usize, budget: u64) -> Collapsibility {
    assert!(k >= 1, "k must be positive");
    let mut search = CollapseSearch {
        k,
        failed: HashSet::new(),
        states: 0,
        budget,
        exhausted: false,
        steps: Vec::new(),
    };
    let mut start = x.facets().to_vec();
    sort_size_lex(&mut start);
    if search.run(&start) {
        Collapsibility::Collapsible {
            trace: CollapseTrace { steps: search.steps },
        }
    } else if search.exhausted {
        Collapsibility::Indeterminate {
            states: search.states,
        }
    } else {
        Collapsibility::NotCollapsible
    }
}

struct CollapseSearch {
    k: usize,
    failed: HashSet<Vec<VertexSet>>,
    states: u64,
    budget: u64,
    exhausted: bool,
    steps: Vec<CollapseStep>,
}

impl CollapseSearch {
    fn run(&mut self, facets: &[VertexSet]) -> bool {
        match facets {
            [] => return true,
            [only] => {
                // A single simplex goes in one step through its empty face.
                self.steps.push(CollapseStep {
                    face: VertexSet::EMPTY,
                    facet: *only,
                });
                return true;
            }
            _ => {}
        }
        if self.failed.contains(facets) {
            return false;
        }
        self.states += 1;
        if self.states > self.budget {
            self.exhausted = true;
            return false;
        }
        for step in free_faces_up_to(facets, self.k) {
            self.steps.push(step);
            if self.run(&collapse_facets(facets, step.face, step.facet)) {
                return true;
            }
            self.steps.pop();
            if self.exhausted {
                return false;
            }
        }
        self.failed.insert(facets.to_vec());
        false
    }
}

/// Replays `trace` from `x`: every step removes a free face of size at most
/// `k`, and the complex ends void.
pub fn verify_collapse_trace(x: &SimplicialComplex, k: usize, trace: &CollapseTrace) -> bool {
    let mut facets = x.facets().to_vec();
    for step in &trace.steps {
        let containing: Vec<VertexSet> = facets.iter().copied().filter(|f| step.face.is_subset(*f)).collect();
        if step.face.len() > k || containing != [step.facet] {
            return false;
        }
        facets = collapse_facets(&facets, step.face, step.facet);
    }
    facets.is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapsibilityNumber {
    /// `col(X)` when every smaller `k` was decided negatively.
    pub value: Option<usize>,
    /// Every `k` below this is excluded.
    pub lower: usize,
    /// Smallest `k` with a collapse found.
    pub upper: usize,
    pub trace: CollapseTrace,
}

pub fn collapsibility_number(x: &SimplicialComplex) -> CollapsibilityNumber {
    collapsibility_number_budgeted(x, DEFAULT_COLLAPSE_BUDGET)
}

/// Tries `k = 1, 2, ...`. Every facet is free, so `k = dim + 1` always
/// succeeds.
pub fn collapsibility_number_budgeted(x: &SimplicialComplex, budget: u64) -> CollapsibilityNumber {
    let top = x.dim().map_or(1, |d| (d + 1).max(1) as usize);
    let mut lower = 1;
    let mut decided = true;
    for k in 1..=top {
        match is_k_collapsible_budgeted(x, k, budget) {
            Collapsibility::Collapsible { trace } => {
                return CollapsibilityNumber {
                    value: decided.then_some(k),
                    lower,
                    upper: k,
                    trace,
                }
            }
            Collapsibility::NotCollapsible => {
                if decided {
                    lower = k + 1;
                }
            }
            Collapsibility::Indeterminate { .. } => decided = false,
        }
    }
    unreachable!("every complex is (dim + 1)-collapsible")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SheddingTree {
    Simplex { facet: VertexSet },
    Shed {
        vertex: VertexId,
        deletion: Arc<SheddingTree>,
        link: Arc<SheddingTree>,
    },
}

/// A shedding tree when the complex is vertex decomposable.
pub fn is_vertex_decomposable(x: &SimplicialComplex) -> Option<Arc<SheddingTree>> {
    let mut memo = HashMap::new();
    decompose(x, &mut memo)
}

fn decompose(
    x: &SimplicialComplex,
    memo: &mut HashMap<Vec<VertexSet>, Option<Arc<SheddingTree>>>,
) -> Option<Arc<SheddingTree>> {
    if x.facets().len() <= 1 {
        return Some(Arc::new(SheddingTree::Simplex {
            facet: x.facets().first().copied().unwrap_or(VertexSet::EMPTY),
        }));
    }
    let key = x.facets().to_vec();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut result = None;
    for z in x.vertices() {
        let del = x.deletion_unchecked(VertexSet::singleton(z));
        // Shedding: no facet of the deletion is lost inside a facet through z.
        if !del.facets().iter().all(|f| x.is_facet(*f)) {
            continue;
        }
        let Some(d) = decompose(&del, memo) else { continue };
        let lk = x.link_unchecked(VertexSet::singleton(z));
        let Some(l) = decompose(&lk, memo) else { continue };
        result = Some(Arc::new(SheddingTree::Shed {
            vertex: z,
            deletion: d,
            link: l,
        }));
        break;
    }
    memo.insert(key, result.clone());
    result
}

/// Re-checks a shedding tree against `x` from the definition.
pub fn verify_shedding_tree(x: &SimplicialComplex, tree: &SheddingTree) -> bool {
    match tree {
        SheddingTree::Simplex { facet } => {
            x.facets().len() <= 1 && x.facets().first().copied().unwrap_or(VertexSet::EMPTY) == *facet
        }
        SheddingTree::Shed { vertex, deletion, link } => {
            let z = VertexSet::singleton(*vertex);
            if !x.vertices().contains(*vertex) {
                return false;
            }
            let del = x.deletion_unchecked(z);
            del.facets().iter().all(|f| x.is_facet(*f))
                && verify_shedding_tree(&del, deletion)
                && verify_shedding_tree(&x.link_unchecked(z), link)
        }
    }
}
