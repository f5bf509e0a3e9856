//! Castelnuovo–Mumford regularity of edge ideals.
//!
//! Small inputs are solved exactly with Hochster's formula
//! `β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Ind[W])`. Larger graphs go through a
//! bound engine that combines component additivity, vertex splitting,
//! induced-subgraph and induced-matching lower bounds and co-chordal cover
//! upper bounds into a derivation tree that [`replay`] re-checks.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::chordal::{cochord_upper_bound, verify_cochordal_cover};
use crate::complex::{independence_complex, Clutter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::homology::{reduced_betti_from_levels, top_degree_at_least, Field, HomologyConfig};
use crate::invariants::{induced_matching_budgeted, MatchingCertificate};
use crate::vertex_set::{VertexId, VertexSet};

pub const DEFAULT_HOCHSTER_THRESHOLD: usize = 18;
/// Hard ceiling for subset enumeration regardless of configuration.
const MAX_HOCHSTER_VERTICES: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    /// `(i, j) -> β_{i,j}`, nonzero entries only.
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `max{j - i : β_{i,j} != 0}`.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }
}

fn check_threshold(n: usize, threshold: usize) -> Result<()> {
    if n > threshold.min(MAX_HOCHSTER_VERTICES) {
        return Err(Error::ThresholdExceeded {
            n,
            threshold: threshold.min(MAX_HOCHSTER_VERTICES),
        });
    }
    Ok(())
}

/// `W` induces a cone: some vertex of `W` lies in no edge inside `W`.
fn is_cone(c: &Clutter, graph: Option<&Graph>, w: VertexSet) -> bool {
    match graph {
        Some(g) => g.has_isolated_vertex_in(w),
        None => {
            let support = c
                .edges()
                .iter()
                .filter(|e| e.is_subset(w))
                .fold(VertexSet::EMPTY, |acc, e| acc | *e);
            support != w
        }
    }
}

fn subset(mask: u64) -> VertexSet {
    VertexSet::from_bits(u128::from(mask))
}

pub fn betti_table_hochster(c: &Clutter, field: Field, threshold: usize) -> Result<BettiTable> {
    let n = c.ground();
    check_threshold(n, threshold)?;
    let x = independence_complex(c);
    let graph = c.to_graph();
    let cfg = HomologyConfig::default();
    let entries = (0..1u64 << n)
        .into_par_iter()
        .filter(|&m| !is_cone(c, graph.as_ref(), subset(m)))
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), usize>, m| {
            let w = subset(m);
            let levels = x.induced(w).faces_by_size();
            let betti = reduced_betti_from_levels(&levels, field, &cfg);
            let j = w.len();
            for (idx, &r) in betti.ranks.iter().enumerate() {
                // idx = d + 1 and i = j - d - 1.
                if r > 0 {
                    *acc.entry((j - idx, j)).or_default() += r;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(BettiTable { entries })
}

/// Largest `d + 1` with `H̃_d(Ind[W]) != 0` over all `W`; 0 when edgeless.
pub fn reg_exact(c: &Clutter, field: Field, threshold: usize) -> Result<usize> {
    let n = c.ground();
    check_threshold(n, threshold)?;
    if c.edges().is_empty() {
        return Ok(0);
    }
    let x = independence_complex(c);
    let graph = c.to_graph();
    let cfg = HomologyConfig::default();
    let best = AtomicUsize::new(1);
    let top = (1u64 << n) - 1;
    // Larger sets first so the running maximum prunes early.
    (0..=top).into_par_iter().for_each(|i| {
        let w = subset(top - i);
        if is_cone(c, graph.as_ref(), w) {
            return;
        }
        let sub = x.induced(w);
        let size = sub.facets().iter().map(|f| f.len()).max().unwrap_or(0);
        let floor = best.load(Ordering::Relaxed);
        // H̃_d vanishes above the dimension, so d + 1 <= largest facet size.
        if size <= floor {
            return;
        }
        let levels = sub.faces_by_size();
        if let Some(d) = top_degree_at_least(&levels, floor as isize, field, &cfg) {
            best.fetch_max((d + 1) as usize, Ordering::Relaxed);
        }
    });
    Ok(best.into_inner())
}

pub fn reg_exact_graph(g: &Graph, field: Field, threshold: usize) -> Result<usize> {
    reg_exact(&Clutter::from_graph(g), field, threshold)
}

// Bound engine.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "rule")]
pub enum Rule {
    /// No edges: regularity 0.
    Edgeless,
    /// Exact value from Hochster's formula.
    Hochster { field: Field },
    /// Sum over the components with edges, listed in `parts`; children in order.
    Components { parts: Vec<VertexSet> },
    /// `map[v]` sends this graph isomorphically onto the child's graph.
    Isomorphic { map: Vec<VertexId> },
    /// `reg(G) ∈ {reg(G - v), reg(G - N[v]) + 1}`; children in that order.
    VertexSplit { pivot: VertexId },
    /// `leaf` has degree one with neighbor `neighbor`:
    /// `reg(G) ∈ {reg(G - leaf), reg(G - N[neighbor]) + 1}`.
    DegreeOne { leaf: VertexId, neighbor: VertexId },
    /// An induced matching bounds regularity from below.
    InducedMatching { edges: Vec<[VertexId; 2]> },
    /// Regularity is monotone on induced subgraphs; the child is `G[vertices]`.
    InducedSubgraph { vertices: VertexSet },
    /// A co-chordal edge cover bounds regularity from above; any edge gives 1 below.
    CochordalCover { parts: Vec<Vec<[VertexId; 2]>> },
    /// Intersection of the children's intervals, all about this graph.
    Combine,
    /// Budget exhausted: `reg <= α(G) <= n`.
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegEvidence {
    pub lo: usize,
    pub hi: usize,
    /// graph6 of the graph this node is about.
    pub graph: String,
    #[serde(flatten)]
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Arc<RegEvidence>>,
}

impl RegEvidence {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Number of distinct nodes, counting shared subtrees once.
    pub fn node_count(&self) -> usize {
        fn walk(e: &RegEvidence, seen: &mut std::collections::HashSet<*const RegEvidence>) {
            if seen.insert(e as *const _) {
                for c in &e.children {
                    walk(c, seen);
                }
            }
        }
        let mut seen = Default::default();
        walk(self, &mut seen);
        seen.len()
    }

    pub fn uses_rule(&self, pred: &dyn Fn(&Rule) -> bool) -> bool {
        pred(&self.rule) || self.children.iter().any(|c| c.uses_rule(pred))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegConfig {
    pub field: Field,
    pub hochster_threshold: usize,
    /// Maximum number of engine nodes expanded.
    pub budget: u64,
    /// Node budget for each induced-matching search.
    pub matching_budget: u64,
    /// Splits tried on one graph while its interval stays open.
    pub split_attempts: usize,
}

impl Default for RegConfig {
    fn default() -> Self {
        RegConfig {
            field: Field::Gf2,
            hochster_threshold: DEFAULT_HOCHSTER_THRESHOLD,
            budget: 1_000_000,
            matching_budget: 1_000_000,
            split_attempts: 2,
        }
    }
}

/// Extra certificates for graphs isomorphic to `graph`, in its labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegHint {
    pub graph: Graph,
    /// Vertex sets whose induced subgraphs give lower bounds.
    pub subgraphs: Vec<VertexSet>,
    pub covers: Vec<Vec<Vec<[VertexId; 2]>>>,
    pub matchings: Vec<Vec<[VertexId; 2]>>,
}

pub struct RegEngine {
    cfg: RegConfig,
    memo: HashMap<Vec<VertexSet>, (CanonicalForm, Arc<RegEvidence>)>,
    hints: HashMap<Vec<VertexSet>, (CanonicalForm, RegHint)>,
    nodes: u64,
}

impl RegEngine {
    pub fn new(cfg: RegConfig) -> RegEngine {
        RegEngine {
            cfg,
            memo: HashMap::new(),
            hints: HashMap::new(),
            nodes: 0,
        }
    }

    pub fn add_hint(&mut self, hint: RegHint) {
        let form = canonical_form(&hint.graph);
        self.hints.insert(form.key.clone(), (form, hint));
    }

    pub fn bounds(&mut self, g: &Graph) -> Arc<RegEvidence> {
        let g6 = graph6::encode(g);
        if g.edge_count() == 0 {
            return leaf(0, 0, g6, Rule::Edgeless);
        }
        let comps: Vec<VertexSet> = g
            .connected_components()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect();
        if comps.len() > 1 || comps[0] != g.vertices() {
            let children: Vec<Arc<RegEvidence>> = comps
                .iter()
                .map(|&c| self.bounds(&g.induced_subgraph(c).0))
                .collect();
            return Arc::new(RegEvidence {
                lo: children.iter().map(|c| c.lo).sum(),
                hi: children.iter().map(|c| c.hi).sum(),
                graph: g6,
                rule: Rule::Components { parts: comps },
                children,
            });
        }
        let form = canonical_form(g);
        if let Some((other, hit)) = self.memo.get(&form.key) {
            let map = form.map_to(other);
            if map.iter().enumerate().all(|(v, &w)| v == w) {
                return hit.clone();
            }
            return Arc::new(RegEvidence {
                lo: hit.lo,
                hi: hit.hi,
                graph: g6,
                rule: Rule::Isomorphic { map },
                children: vec![hit.clone()],
            });
        }
        let result = self.solve_connected(g, g6, &form);
        self.memo.insert(form.key.clone(), (form, result.clone()));
        result
    }

    fn solve_connected(&mut self, g: &Graph, g6: String, form: &CanonicalForm) -> Arc<RegEvidence> {
        self.nodes += 1;
        if self.nodes > self.cfg.budget {
            return leaf(1, g.n(), g6, Rule::Trivial);
        }
        let mut parts: Vec<Arc<RegEvidence>> = Vec::new();
        let mut lo = 1;
        let mut hi = g.n();
        let mut push = |e: Arc<RegEvidence>, lo: &mut usize, hi: &mut usize| {
            *lo = (*lo).max(e.lo);
            *hi = (*hi).min(e.hi);
            parts.push(e);
        };

        if let Some((hint_form, hint)) = self.hints.get(&form.key).cloned() {
            // Hint labels -> labels of g.
            let back = hint_form.map_to(form);
            let to_g = |e: &[VertexId; 2]| [back[e[0]], back[e[1]]];
            for cover in &hint.covers {
                let mapped: Vec<Vec<[VertexId; 2]>> =
                    cover.iter().map(|p| p.iter().map(to_g).collect()).collect();
                if verify_cochordal_cover(g, &mapped).unwrap_or(false) {
                    let n = mapped.len();
                    push(leaf(1, n, g6.clone(), Rule::CochordalCover { parts: mapped }), &mut lo, &mut hi);
                }
            }
            for m in &hint.matchings {
                let edges: Vec<[VertexId; 2]> = m.iter().map(to_g).collect();
                let cert = MatchingCertificate { edges: edges.clone() };
                if cert.validate(g) {
                    push(leaf(edges.len(), g.n(), g6.clone(), Rule::InducedMatching { edges }), &mut lo, &mut hi);
                }
            }
            for w in &hint.subgraphs {
                let w = w.map(&back);
                if w == g.vertices() {
                    continue;
                }
                let child = self.bounds(&g.induced_subgraph(w).0);
                push(
                    Arc::new(RegEvidence {
                        lo: child.lo,
                        hi: g.n(),
                        graph: g6.clone(),
                        rule: Rule::InducedSubgraph { vertices: w },
                        children: vec![child],
                    }),
                    &mut lo,
                    &mut hi,
                );
            }
        }

        if lo < hi {
            let m = induced_matching_budgeted(g, self.cfg.matching_budget);
            if m.certificate.size() > lo {
                let edges = m.certificate.edges;
                push(leaf(edges.len(), g.n(), g6.clone(), Rule::InducedMatching { edges }), &mut lo, &mut hi);
            }
        }
        if lo < hi {
            let cover = cochord_upper_bound(g);
            if cover.size() < hi {
                let n = cover.size();
                push(leaf(1, n, g6.clone(), Rule::CochordalCover { parts: cover.parts }), &mut lo, &mut hi);
            }
        }
        if lo < hi && g.n() <= self.cfg.hochster_threshold {
            let r = reg_exact_graph(g, self.cfg.field, self.cfg.hochster_threshold)
                .expect("size checked against the threshold");
            push(leaf(r, r, g6.clone(), Rule::Hochster { field: self.cfg.field }), &mut lo, &mut hi);
        }
        for rule in split_rules(g).into_iter().take(self.cfg.split_attempts.max(1)) {
            if lo >= hi {
                break;
            }
            let split = self.split(g, &g6, rule);
            push(split, &mut lo, &mut hi);
        }
        debug_assert!(lo <= hi, "inconsistent bounds on {g6}");
        if parts.len() == 1 {
            return parts.pop().expect("one part");
        }
        Arc::new(RegEvidence {
            lo,
            hi,
            graph: g6,
            rule: Rule::Combine,
            children: parts,
        })
    }

    fn split(&mut self, g: &Graph, g6: &str, rule: Rule) -> Arc<RegEvidence> {
        let (first, second) = match rule {
            Rule::DegreeOne { leaf, neighbor } => {
                (g.remove_vertex(leaf).0, g.remove_set(g.closed_neighborhood(neighbor)).0)
            }
            Rule::VertexSplit { pivot } => (g.remove_vertex(pivot).0, g.remove_set(g.closed_neighborhood(pivot)).0),
            _ => unreachable!("not a split rule"),
        };
        let a = self.bounds(&first);
        let b = self.bounds(&second);
        let (lo, hi) = split_pair((a.lo, a.hi), (b.lo, b.hi));
        Arc::new(RegEvidence {
            lo,
            hi,
            graph: g6.to_string(),
            rule,
            children: vec![a, b],
        })
    }
}

fn leaf(lo: usize, hi: usize, graph: String, rule: Rule) -> Arc<RegEvidence> {
    Arc::new(RegEvidence {
        lo,
        hi,
        graph,
        rule,
        children: Vec::new(),
    })
}

/// Vertices by removal preference: smallest largest remaining component,
/// then higher degree, then lower id.
pub fn split_order(g: &Graph) -> Vec<VertexId> {
    let mut keyed: Vec<_> = g
        .vertices()
        .iter()
        .map(|v| {
            let (h, _) = g.remove_vertex(v);
            let largest = h.connected_components().iter().map(|c| c.len()).max().unwrap_or(0);
            ((largest, std::cmp::Reverse(g.degree(v)), v), v)
        })
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, v)| v).collect()
}

pub fn split_pivot(g: &Graph) -> VertexId {
    split_order(g)[0]
}

/// The first leaf split, if any, then vertex splits in `split_order`.
fn split_rules(g: &Graph) -> Vec<Rule> {
    let leaf = g.vertices().iter().find(|&v| g.degree(v) == 1).map(|l| Rule::DegreeOne {
        leaf: l,
        neighbor: g.neighbors(l).first().expect("degree one"),
    });
    leaf.into_iter()
        .chain(split_order(g).into_iter().map(|pivot| Rule::VertexSplit { pivot }))
        .collect()
}

pub fn reg_bounds(g: &Graph, cfg: &RegConfig, hints: &[RegHint]) -> Arc<RegEvidence> {
    let mut engine = RegEngine::new(cfg.clone());
    for h in hints {
        engine.add_hint(h.clone());
    }
    engine.bounds(g)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegSandwich {
    pub lo: usize,
    pub hi: usize,
    pub evidence: Arc<RegEvidence>,
}

impl RegSandwich {
    pub fn exact(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

/// Exact Hochster value when the graph fits the threshold, else the bound engine.
pub fn reg_sandwich(g: &Graph, cfg: &RegConfig, hints: &[RegHint]) -> RegSandwich {
    let evidence = if g.n() <= cfg.hochster_threshold && g.edge_count() > 0 {
        let r = reg_exact_graph(g, cfg.field, cfg.hochster_threshold).expect("within threshold");
        leaf(r, r, graph6::encode(g), Rule::Hochster { field: cfg.field })
    } else {
        reg_bounds(g, cfg, hints)
    };
    RegSandwich {
        lo: evidence.lo,
        hi: evidence.hi,
        evidence,
    }
}

// Replay.

fn gate(detail: String) -> Error {
    Error::Gate {
        gate: "reg-evidence",
        detail,
    }
}

/// Re-derives every interval in the tree from its rule, recomputing
/// Hochster leaves, and checks it against the stored bounds.
pub fn replay(e: &RegEvidence, cfg: &RegConfig) -> Result<(usize, usize)> {
    let mut cache = HashMap::new();
    replay_node(e, cfg, &mut cache)
}

fn replay_node(
    e: &RegEvidence,
    cfg: &RegConfig,
    cache: &mut HashMap<*const RegEvidence, (usize, usize)>,
) -> Result<(usize, usize)> {
    if let Some(&r) = cache.get(&(e as *const _)) {
        return Ok(r);
    }
    let g = graph6::decode_str(&e.graph)?;
    let children: Vec<(usize, usize)> = e
        .children
        .iter()
        .map(|c| replay_node(c, cfg, cache))
        .collect::<Result<_>>()?;
    let child_graph = |i: usize| -> Result<Graph> { graph6::decode_str(&e.children[i].graph) };
    let expect_children = |k: usize| -> Result<()> {
        if e.children.len() != k {
            return Err(gate(format!("{:?} expects {k} children", e.rule)));
        }
        Ok(())
    };
    let same = |i: usize, h: &Graph| -> Result<()> {
        if child_graph(i)? != *h {
            return Err(gate(format!("child {i} of {} is not the derived graph", e.graph)));
        }
        Ok(())
    };
    let (lo, hi) = match &e.rule {
        Rule::Edgeless => {
            if g.edge_count() != 0 {
                return Err(gate(format!("{} has edges", e.graph)));
            }
            (0, 0)
        }
        Rule::Hochster { field } => {
            expect_children(0)?;
            let r = reg_exact_graph(&g, *field, cfg.hochster_threshold.max(g.n()))?;
            (r, r)
        }
        Rule::Components { parts } => {
            expect_children(parts.len())?;
            let actual: Vec<VertexSet> = g
                .connected_components()
                .into_iter()
                .filter(|c| c.len() > 1)
                .collect();
            if actual != *parts {
                return Err(gate(format!("components of {} differ", e.graph)));
            }
            for (i, &p) in parts.iter().enumerate() {
                same(i, &g.induced_subgraph(p).0)?;
            }
            (children.iter().map(|c| c.0).sum(), children.iter().map(|c| c.1).sum())
        }
        Rule::Isomorphic { map } => {
            expect_children(1)?;
            let h = child_graph(0)?;
            let bijective = map.len() == g.n() && map.iter().collect::<VertexSet>() == h.vertices();
            if g.n() != h.n() || !bijective || (0..g.n()).any(|v| g.neighbors(v).map(map) != h.neighbors(map[v])) {
                return Err(gate(format!("map is not an isomorphism onto {}", h.n())));
            }
            children[0]
        }
        Rule::VertexSplit { pivot } => {
            expect_children(2)?;
            if *pivot >= g.n() {
                return Err(gate(format!("pivot {pivot} out of range")));
            }
            same(0, &g.remove_vertex(*pivot).0)?;
            same(1, &g.remove_set(g.closed_neighborhood(*pivot)).0)?;
            split_pair(children[0], children[1])
        }
        Rule::DegreeOne { leaf, neighbor } => {
            expect_children(2)?;
            if *leaf >= g.n() || g.neighbors(*leaf) != VertexSet::singleton(*neighbor) {
                return Err(gate(format!("{leaf} is not a leaf attached to {neighbor}")));
            }
            same(0, &g.remove_vertex(*leaf).0)?;
            same(1, &g.remove_set(g.closed_neighborhood(*neighbor)).0)?;
            split_pair(children[0], children[1])
        }
        Rule::InducedMatching { edges } => {
            let cert = MatchingCertificate { edges: edges.clone() };
            if !cert.validate(&g) {
                return Err(gate("invalid induced matching".into()));
            }
            (edges.len(), g.n())
        }
        Rule::InducedSubgraph { vertices } => {
            expect_children(1)?;
            same(0, &g.induced_subgraph(*vertices).0)?;
            (children[0].0, g.n())
        }
        Rule::CochordalCover { parts } => {
            if !verify_cochordal_cover(&g, parts)? {
                return Err(gate("co-chordal cover does not verify".into()));
            }
            (usize::from(g.edge_count() > 0), parts.len())
        }
        Rule::Combine => {
            for c in &e.children {
                if c.graph != e.graph {
                    return Err(gate("combined evidence concerns another graph".into()));
                }
            }
            let lo = children.iter().map(|c| c.0).max().unwrap_or(0);
            let hi = children.iter().map(|c| c.1).min().unwrap_or(g.n());
            (lo.max(1), hi)
        }
        Rule::Trivial => (usize::from(g.edge_count() > 0), g.n()),
    };
    if (lo, hi) != (e.lo, e.hi) || lo > hi {
        return Err(gate(format!(
            "{:?} on {} gives [{lo}, {hi}], recorded [{}, {}]",
            e.rule, e.graph, e.lo, e.hi
        )));
    }
    cache.insert(e as *const _, (lo, hi));
    Ok((lo, hi))
}

/// `reg(G) ∈ {a, b + 1}`, where both children are induced subgraphs.
fn split_pair(a: (usize, usize), b: (usize, usize)) -> (usize, usize) {
    let hi = a.1.max(b.1 + 1);
    let lo = a.0.max(b.0).max(a.0.min(b.0 + 1));
    (lo, hi)
}
