//! The v-number by three independent searches, β, β_ve and the induced
//! matching number, each returned with a certificate.
//!
//! The three v-number routes share no search code: one walks independent
//! sets of the clutter and tests `N(A)` against the minimal-cover predicate,
//! one walks faces of the complex tracking containing facets, and one
//! branches on undominated edges of the graph.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{Clutter, SimplicialComplex};
use crate::graph::Graph;
use crate::vertex_set::{sort_size_lex, VertexId, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

const EDGELESS_WARNING: &str = "no edges: the v-number is taken to be 0";
const SIMPLEX_WARNING: &str = "the complex is a simplex: the value is taken to be 0";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    IndependentSetWithMinimalCoverNbhd,
    FreeFace,
    VeDominatingSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VNumberCertificate {
    pub value: usize,
    pub witness_set: VertexSet,
    pub witness_kind: WitnessKind,
    /// The facet of the independence complex tied to the witness: `V - N(A)`
    /// for the first and third kinds, the unique containing facet for free faces.
    pub derived_facet: VertexSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl VNumberCertificate {
    fn degenerate(kind: WitnessKind, facet: VertexSet, warning: &str) -> Self {
        VNumberCertificate {
            value: 0,
            witness_set: VertexSet::EMPTY,
            witness_kind: kind,
            derived_facet: facet,
            warning: Some(warning.to_string()),
        }
    }

    /// Re-checks the witness against `c` with predicates that do not depend
    /// on the search that produced it.
    pub fn validate(&self, c: &Clutter) -> bool {
        let a = self.witness_set;
        if a.len() != self.value || !c.is_independent(a) {
            return false;
        }
        if c.edges().is_empty() {
            return self.value == 0;
        }
        if a.is_empty() {
            return false;
        }
        let all = c.vertices();
        match self.witness_kind {
            WitnessKind::IndependentSetWithMinimalCoverNbhd => {
                let n = c.neighbors_of(a);
                c.is_minimal_vertex_cover(n) && self.derived_facet == all - n
            }
            WitnessKind::FreeFace => {
                // F is a maximal independent set containing A, and every
                // vertex outside F is blocked from A by an edge.
                let f = self.derived_facet;
                a.is_subset(f)
                    && c.is_independent(f)
                    && (all - f).iter().all(|v| !c.is_independent(f.with(v)))
                    && (all - f).iter().all(|v| !c.is_independent(a.with(v)))
            }
            WitnessKind::VeDominatingSet => match c.to_graph() {
                Some(g) => is_ve_dominating(&g, a) && self.derived_facet == all - g.neighborhood_of(a),
                None => false,
            },
        }
    }
}

/// Result of a budgeted minimization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum VSearch {
    Exact(VNumberCertificate),
    /// The budget ran out after every size below `lower` was excluded.
    LowerBound { lower: usize, nodes: u64 },
}

impl VSearch {
    pub fn value(&self) -> Option<usize> {
        match self {
            VSearch::Exact(c) => Some(c.value),
            VSearch::LowerBound { .. } => None,
        }
    }

    pub fn lower_bound(&self) -> usize {
        match self {
            VSearch::Exact(c) => c.value,
            VSearch::LowerBound { lower, .. } => *lower,
        }
    }

    pub fn certificate(&self) -> Option<&VNumberCertificate> {
        match self {
            VSearch::Exact(c) => Some(c),
            VSearch::LowerBound { .. } => None,
        }
    }

    pub fn unwrap_exact(self) -> VNumberCertificate {
        match self {
            VSearch::Exact(c) => c,
            VSearch::LowerBound { lower, nodes } => {
                panic!("search stopped after {nodes} nodes with v >= {lower}")
            }
        }
    }
}

// Route 1: the definition.

pub fn v_number_definition(c: &Clutter) -> VSearch {
    v_number_definition_budgeted(c, DEFAULT_NODE_BUDGET)
}

/// Smallest independent `A` whose neighbor set `N(A)` is a minimal vertex
/// cover, by increasing size and lexicographically within a size.
pub fn v_number_definition_budgeted(c: &Clutter, budget: u64) -> VSearch {
    let all = c.vertices();
    if c.edges().is_empty() {
        return VSearch::Exact(VNumberCertificate::degenerate(
            WitnessKind::IndependentSetWithMinimalCoverNbhd,
            all,
            EDGELESS_WARNING,
        ));
    }
    let mut search = DefinitionSearch {
        clutter: c,
        graph: c.to_graph(),
        all,
        nodes: 0,
        budget,
    };
    for size in 1..=c.ground() {
        match search.at_size(VertexSet::EMPTY, size) {
            Ok(Some(a)) => {
                let n = c.neighbors_of(a);
                return VSearch::Exact(VNumberCertificate {
                    value: size,
                    witness_set: a,
                    witness_kind: WitnessKind::IndependentSetWithMinimalCoverNbhd,
                    derived_facet: all - n,
                    warning: None,
                });
            }
            Ok(None) => {}
            Err(()) => {
                return VSearch::LowerBound {
                    lower: size,
                    nodes: search.nodes,
                }
            }
        }
    }
    unreachable!("every maximal independent set has a minimal-cover neighborhood")
}

struct DefinitionSearch<'a> {
    clutter: &'a Clutter,
    graph: Option<Graph>,
    all: VertexSet,
    nodes: u64,
    budget: u64,
}

impl DefinitionSearch<'_> {
    fn at_size(&mut self, a: VertexSet, size: usize) -> Result<Option<VertexSet>, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if a.len() == size {
            return Ok(self.qualifies(a).then_some(a));
        }
        let start = a.last().map_or(self.all, |m| self.all.above(m));
        for x in start {
            if self.all.above(x).len() + 1 < size - a.len() {
                break;
            }
            let b = a.with(x);
            if self.independent_extension(a, x) {
                if let Some(found) = self.at_size(b, size)? {
                    return Ok(Some(found));
                }
            }
        }
        Ok(None)
    }

    fn independent_extension(&self, a: VertexSet, x: VertexId) -> bool {
        match &self.graph {
            Some(g) => !g.neighbors(x).intersects(a),
            None => self.clutter.is_independent(a.with(x)),
        }
    }

    fn qualifies(&self, a: VertexSet) -> bool {
        match &self.graph {
            Some(g) => {
                let n = g.neighborhood_of(a);
                let rest = self.all - n;
                rest.iter().all(|v| !g.neighbors(v).intersects(rest))
                    && n.iter().all(|w| g.neighbors(w).intersects(rest))
            }
            None => self
                .clutter
                .is_minimal_vertex_cover(self.clutter.neighbors_of(a)),
        }
    }
}

// Route 2: free faces.

pub fn v_number_free_face(x: &SimplicialComplex) -> VSearch {
    v_number_free_face_budgeted(x, DEFAULT_NODE_BUDGET)
}

/// Size-lex smallest nonempty free face.
pub fn v_number_free_face_budgeted(x: &SimplicialComplex, budget: u64) -> VSearch {
    let facets = x.facets();
    if x.is_void() || x.is_simplex() {
        return VSearch::Exact(VNumberCertificate::degenerate(
            WitnessKind::FreeFace,
            facets.first().copied().unwrap_or(VertexSet::EMPTY),
            SIMPLEX_WARNING,
        ));
    }
    let mut search = FreeFaceSearch {
        facets,
        best: None,
        nodes: 0,
        budget,
        exhausted: false,
    };
    let every: Vec<u32> = (0..facets.len() as u32).collect();
    search.walk(VertexSet::EMPTY, &every);
    match search.best {
        Some((a, f)) if !search.exhausted => VSearch::Exact(VNumberCertificate {
            value: a.len(),
            witness_set: a,
            witness_kind: WitnessKind::FreeFace,
            derived_facet: f,
            warning: None,
        }),
        // An interrupted depth-first walk only excludes the empty face.
        _ => VSearch::LowerBound {
            lower: 1,
            nodes: search.nodes,
        },
    }
}

struct FreeFaceSearch<'a> {
    facets: &'a [VertexSet],
    best: Option<(VertexSet, VertexSet)>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl FreeFaceSearch<'_> {
    fn limit(&self) -> usize {
        self.best.map_or(usize::MAX, |(a, _)| a.len())
    }

    /// `containing` lists the facets that contain `a`. Faces are visited in
    /// prefix order, which is lexicographic within each size.
    fn walk(&mut self, a: VertexSet, containing: &[u32]) {
        let reach = containing
            .iter()
            .fold(VertexSet::EMPTY, |acc, &i| acc | self.facets[i as usize]);
        let start = a.last().map_or(reach, |m| reach.above(m));
        for v in start {
            if a.len() + 1 >= self.limit() {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            let b = a.with(v);
            let next: Vec<u32> = containing
                .iter()
                .copied()
                .filter(|&i| self.facets[i as usize].contains(v))
                .collect();
            if next.len() == 1 {
                self.best = Some((b, self.facets[next[0] as usize]));
            } else {
                self.walk(b, &next);
            }
            if self.exhausted {
                return;
            }
        }
    }
}

// Route 3: vertex-wise domination.

/// Every edge `xy` has a member of `s` in `N[x] ∪ N[y]`.
pub fn is_ve_dominating(g: &Graph, s: VertexSet) -> bool {
    let free = g.vertices() - g.closed_neighborhood_of(s);
    free.iter().all(|x| !g.neighbors(x).intersects(free))
}

/// `s` is independent and ve-dominating, and each member dominates an edge
/// that no other member dominates.
pub fn verify_is_minimal_ve_dominating(g: &Graph, s: VertexSet) -> bool {
    g.is_independent(s)
        && is_ve_dominating(g, s)
        && s.iter().all(|v| has_private_edge(g, s, v))
}

fn has_private_edge(g: &Graph, s: VertexSet, v: VertexId) -> bool {
    let outside = g.vertices() - g.closed_neighborhood_of(s.without(v));
    (g.closed_neighborhood(v) & outside)
        .iter()
        .any(|x| g.neighbors(x).intersects(outside))
}

pub fn ive_number(g: &Graph) -> VSearch {
    ive_number_budgeted(g, DEFAULT_NODE_BUDGET)
}

/// Smallest independent ve-dominating set, by iterative deepening on the
/// first undominated edge.
pub fn ive_number_budgeted(g: &Graph, budget: u64) -> VSearch {
    let all = g.vertices();
    if g.edge_count() == 0 {
        return VSearch::Exact(VNumberCertificate::degenerate(
            WitnessKind::VeDominatingSet,
            all,
            EDGELESS_WARNING,
        ));
    }
    let mut nodes = 0u64;
    for k in 1..=g.n() {
        let mut seen = HashSet::new();
        match ive_search(g, VertexSet::EMPTY, k, &mut seen, &mut nodes, budget) {
            Ok(Some(s)) => {
                return VSearch::Exact(VNumberCertificate {
                    value: k,
                    witness_set: s,
                    witness_kind: WitnessKind::VeDominatingSet,
                    derived_facet: all - g.neighborhood_of(s),
                    warning: None,
                })
            }
            Ok(None) => {}
            Err(()) => return VSearch::LowerBound { lower: k, nodes },
        }
    }
    unreachable!("a maximal independent set is ve-dominating")
}

fn ive_search(
    g: &Graph,
    s: VertexSet,
    k: usize,
    seen: &mut HashSet<VertexSet>,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<VertexSet>, ()> {
    *nodes += 1;
    if *nodes > budget {
        return Err(());
    }
    let free = g.vertices() - g.closed_neighborhood_of(s);
    let edge = free
        .iter()
        .find_map(|x| (g.neighbors(x) & free).first().map(|y| (x, y)));
    let Some((x, y)) = edge else {
        return Ok(Some(s));
    };
    if s.len() == k {
        return Ok(None);
    }
    let candidates = (g.closed_neighborhood(x) | g.closed_neighborhood(y)) - g.closed_neighborhood_of(s);
    for u in candidates {
        let t = s.with(u);
        if seen.insert(t) {
            if let Some(found) = ive_search(g, t, k, seen, nodes, budget)? {
                return Ok(Some(found));
            }
        }
    }
    Ok(None)
}

// β and β_ve.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaReport {
    pub value: usize,
    pub witness: VertexSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// β(X), computed as the largest minimal free face and again as the largest
/// face that is minimal with a simplex link; the two must agree.
pub fn beta_number(x: &SimplicialComplex) -> BetaReport {
    if x.is_void() || x.is_simplex() {
        return BetaReport {
            value: 0,
            witness: VertexSet::EMPTY,
            warning: Some(SIMPLEX_WARNING.to_string()),
        };
    }
    let by_free = largest_first(x.minimal_free_faces());
    let by_link = largest_first(minimal_simplex_link_faces(x));
    assert_eq!(
        by_free.len(),
        by_link.len(),
        "beta disagrees: minimal free face {by_free} vs minimal simplex-link face {by_link}"
    );
    BetaReport {
        value: by_free.len(),
        witness: by_free,
        warning: None,
    }
}

/// First set of maximum size in size-lex order.
fn largest_first(mut sets: Vec<VertexSet>) -> VertexSet {
    sort_size_lex(&mut sets);
    let top = sets.last().map_or(0, |s| s.len());
    sets.into_iter().find(|s| s.len() == top).unwrap_or(VertexSet::EMPTY)
}

/// Faces whose link is a simplex while no proper subface has that property.
fn minimal_simplex_link_faces(x: &SimplicialComplex) -> Vec<VertexSet> {
    let faces = x.faces();
    let simplex_link: HashSet<VertexSet> = faces
        .iter()
        .copied()
        .filter(|a| x.link(*a).map(|l| l.is_simplex()).unwrap_or(false))
        .collect();
    faces
        .into_iter()
        .filter(|a| simplex_link.contains(a))
        .filter(|a| a.subsets().all(|b| b == *a || !simplex_link.contains(&b)))
        .collect()
}

/// Largest minimal independent ve-dominating set.
pub fn beta_ve_number(g: &Graph) -> BetaReport {
    if g.edge_count() == 0 {
        return BetaReport {
            value: 0,
            witness: VertexSet::EMPTY,
            warning: Some(EDGELESS_WARNING.to_string()),
        };
    }
    let mut best = None;
    beta_ve_walk(g, VertexSet::EMPTY, &mut best);
    let witness = best.expect("a maximal independent set contains a minimal ve-dominating set");
    BetaReport {
        value: witness.len(),
        witness,
        warning: None,
    }
}

fn beta_ve_walk(g: &Graph, s: VertexSet, best: &mut Option<VertexSet>) {
    if !s.is_empty() && is_ve_dominating(g, s) {
        // Further vertices would have no private edge.
        let better = match best {
            None => true,
            Some(b) => s.len() > b.len() || (s.len() == b.len() && s.cmp_size_lex(b).is_lt()),
        };
        if better {
            *best = Some(s);
        }
        return;
    }
    let start = s.last().map_or(g.vertices(), |m| g.vertices().above(m));
    for u in start - g.closed_neighborhood_of(s) {
        let t = s.with(u);
        // Private edges only disappear as the set grows.
        if t.iter().all(|v| has_private_edge(g, t, v)) {
            beta_ve_walk(g, t, best);
        }
    }
}

// Induced matchings.

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCertificate {
    pub edges: Vec<[VertexId; 2]>,
}

impl MatchingCertificate {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges of `g`, pairwise disjoint, with no edge of `g` joining two of them.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut used = VertexSet::EMPTY;
        for &[u, v] in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) || used.contains(u) || used.contains(v) {
                return false;
            }
            used.insert(u);
            used.insert(v);
        }
        self.edges.iter().enumerate().all(|(i, &[a, b])| {
            self.edges[i + 1..].iter().all(|&[c, d]| {
                !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d)
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedMatching {
    pub certificate: MatchingCertificate,
    /// False when the budget ran out; the certificate is then only a lower bound.
    pub exact: bool,
}

pub fn induced_matching_number(g: &Graph) -> InducedMatching {
    induced_matching_budgeted(g, DEFAULT_NODE_BUDGET)
}

/// Exact maximum induced matching: branch on a minimum-degree vertex (left
/// unmatched, or matched to one of its neighbors), split into components,
/// and memoize on the remaining vertex set.
pub fn induced_matching_budgeted(g: &Graph, budget: u64) -> InducedMatching {
    let mut search = MatchingSearch {
        g,
        memo: HashMap::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    let mut edges = search.solve(g.vertices());
    for e in &mut edges {
        e.sort_unstable();
    }
    edges.sort_unstable();
    InducedMatching {
        certificate: MatchingCertificate { edges },
        exact: !search.exhausted,
    }
}

struct MatchingSearch<'a> {
    g: &'a Graph,
    memo: HashMap<VertexSet, Vec<[VertexId; 2]>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl MatchingSearch<'_> {
    fn core(&self, avail: VertexSet) -> VertexSet {
        avail.iter().filter(|&v| self.g.neighbors(v).intersects(avail)).collect()
    }

    /// Twice a greedy maximal matching bounds the maximum matching, which
    /// bounds any induced matching.
    fn upper_bound(&self, avail: VertexSet) -> usize {
        let mut left = avail;
        let mut greedy = 0;
        for v in avail {
            if !left.contains(v) {
                continue;
            }
            if let Some(w) = (self.g.neighbors(v) & left).first() {
                left.remove(v);
                left.remove(w);
                greedy += 1;
            }
        }
        (2 * greedy).min(avail.len() / 2)
    }

    fn solve(&mut self, avail: VertexSet) -> Vec<[VertexId; 2]> {
        let avail = self.core(avail);
        if avail.is_empty() {
            return Vec::new();
        }
        if let Some(hit) = self.memo.get(&avail) {
            return hit.clone();
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        let first = avail.first().expect("nonempty");
        let comp = self.g.component_of(first, avail);
        let result = if comp != avail {
            let mut out = self.solve(comp);
            out.extend(self.solve(avail - comp));
            out
        } else {
            self.branch(avail)
        };
        if !self.exhausted {
            self.memo.insert(avail, result.clone());
        }
        result
    }

    fn branch(&mut self, avail: VertexSet) -> Vec<[VertexId; 2]> {
        let g = self.g;
        let u = avail
            .iter()
            .min_by_key(|&v| ((g.neighbors(v) & avail).len(), v))
            .expect("nonempty");
        let mut best: Vec<[VertexId; 2]> = Vec::new();
        for w in g.neighbors(u) & avail {
            let rest = avail - g.closed_neighborhood(u) - g.closed_neighborhood(w);
            if self.exhausted && !best.is_empty() {
                break;
            }
            if 1 + self.upper_bound(self.core(rest)) <= best.len() {
                continue;
            }
            let mut cand = vec![[u, w]];
            cand.extend(self.solve(rest));
            if cand.len() > best.len() {
                best = cand;
            }
        }
        let rest = avail.without(u);
        if !self.exhausted && self.upper_bound(self.core(rest)) > best.len() {
            let cand = self.solve(rest);
            if cand.len() > best.len() {
                best = cand;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::independence_complex_of_graph;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    /// Brute-force oracles over all subsets.
    fn brute_v(g: &Graph) -> usize {
        let all = g.vertices();
        all.subsets()
            .filter(|a| !a.is_empty() && g.is_independent(*a))
            .filter(|a| g.set_predicates(g.neighborhood_of(*a)).minimal_vertex_cover)
            .map(|a| a.len())
            .min()
            .unwrap()
    }

    fn brute_ive(g: &Graph) -> usize {
        g.vertices()
            .subsets()
            .filter(|s| g.is_independent(*s) && is_ve_dominating(g, *s))
            .map(|s| s.len())
            .min()
            .unwrap()
    }

    fn brute_beta_ve(g: &Graph) -> usize {
        g.vertices()
            .subsets()
            .filter(|s| verify_is_minimal_ve_dominating(g, *s))
            .filter(|s| s.iter().all(|v| !is_ve_dominating(g, s.without(v))))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    fn brute_im(g: &Graph) -> usize {
        let edges = g.edges();
        let m = edges.len();
        (0u32..1 << m)
            .filter(|mask| {
                let chosen: Vec<[usize; 2]> = (0..m)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| [edges[i].0, edges[i].1])
                    .collect();
                MatchingCertificate { edges: chosen }.validate(g)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn all_v(g: &Graph) -> [usize; 3] {
        let c = Clutter::from_graph(g);
        let x = independence_complex_of_graph(g);
        let d = v_number_definition(&c).unwrap_exact();
        let f = v_number_free_face(&x).unwrap_exact();
        let i = ive_number(g).unwrap_exact();
        for cert in [&d, &f, &i] {
            assert!(cert.validate(&c), "certificate {cert:?} fails on {g:?}");
        }
        [d.value, f.value, i.value]
    }

    #[test]
    fn spec_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = Graph::path(4).unwrap();
        assert_eq!(all_v(&c5), [2; 3]);
        assert_eq!(all_v(&p4), [1; 3]);
        for n in 2..=6 {
            assert_eq!(all_v(&Graph::complete(n).unwrap()), [1; 3]);
            assert_eq!(beta_ve_number(&Graph::complete(n).unwrap()).value, 1);
        }
        let ind_p4 = independence_complex_of_graph(&p4);
        assert_eq!(beta_number(&ind_p4).value, 2);
        assert_eq!(beta_number(&independence_complex_of_graph(&c5)).value, 2);
        assert_eq!(beta_ve_number(&p4).value, 2);
        assert_eq!(beta_ve_number(&c5).value, 2);
        assert!(verify_is_minimal_ve_dominating(&p4, set(&[1])));
        assert!(!verify_is_minimal_ve_dominating(&p4, set(&[1, 2])));
        assert!(!verify_is_minimal_ve_dominating(&c5, set(&[0])));
        assert_eq!(induced_matching_number(&p4).certificate.size(), 1);
        let three_k2 = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(induced_matching_number(&three_k2).certificate.size(), 3);
    }

    #[test]
    fn certificates_serialize() {
        let cert = v_number_definition(&Clutter::from_graph(&Graph::cycle(5).unwrap())).unwrap_exact();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.contains("independent_set_with_minimal_cover_nbhd"));
        let back: VNumberCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn degenerate_inputs_warn() {
        let g = Graph::empty(3).unwrap();
        let d = v_number_definition(&Clutter::from_graph(&g)).unwrap_exact();
        assert_eq!(d.value, 0);
        assert!(d.warning.is_some());
        assert!(ive_number(&g).unwrap_exact().warning.is_some());
        let simplex = SimplicialComplex::simplex(3).unwrap();
        assert!(v_number_free_face(&simplex).unwrap_exact().warning.is_some());
        assert!(beta_number(&simplex).warning.is_some());
    }

    #[test]
    fn budget_gives_lower_bound() {
        let g = Graph::cycle(9).unwrap();
        let r = v_number_definition_budgeted(&Clutter::from_graph(&g), 3);
        assert!(matches!(r, VSearch::LowerBound { .. }));
        assert!(r.lower_bound() <= brute_v(&g));
        let r = ive_number_budgeted(&g, 2);
        assert!(r.lower_bound() <= brute_v(&g));
    }

    #[test]
    fn clutter_route_matches_brute_force() {
        // A non-graph clutter: edges {0,1,2}, {2,3}, {3,4,0}.
        let c = Clutter::new(5, vec![set(&[0, 1, 2]), set(&[2, 3]), set(&[0, 3, 4])]).unwrap();
        let brute = c
            .vertices()
            .subsets()
            .filter(|a| !a.is_empty() && c.is_independent(*a))
            .filter(|a| c.is_minimal_vertex_cover(c.neighbors_of(*a)))
            .map(|a| a.len())
            .min()
            .unwrap();
        let d = v_number_definition(&c).unwrap_exact();
        assert_eq!(d.value, brute);
        assert!(d.validate(&c));
        let f = v_number_free_face(&crate::complex::independence_complex(&c)).unwrap_exact();
        assert_eq!(f.value, brute);
        assert!(f.validate(&c));
    }

    proptest! {
        #[test]
        fn routes_match_brute_force(g in arb_graph(8)) {
            prop_assume!(g.edge_count() > 0);
            let v = brute_v(&g);
            prop_assert_eq!(all_v(&g), [v; 3]);
            prop_assert_eq!(brute_ive(&g), v);
            let beta = beta_ve_number(&g);
            prop_assert_eq!(beta.value, brute_beta_ve(&g));
            prop_assert!(verify_is_minimal_ve_dominating(&g, beta.witness));
            prop_assert_eq!(beta.value, beta_number(&independence_complex_of_graph(&g)).value);
        }

        #[test]
        fn induced_matching_matches_brute_force(g in arb_graph(9)) {
            prop_assume!(g.edge_count() <= 16);
            let im = induced_matching_number(&g);
            prop_assert!(im.exact);
            prop_assert!(im.certificate.validate(&g));
            prop_assert_eq!(im.certificate.size(), brute_im(&g));
        }
    }
}
