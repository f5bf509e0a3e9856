//! Chordality with witnesses, and co-chordal edge covers.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chordality {
    /// A perfect elimination ordering: each vertex's later neighbors form a clique.
    Chordal { elimination_order: Vec<VertexId> },
    /// An induced cycle of length at least four, in cyclic order.
    InducedCycle { cycle: Vec<VertexId> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Maximum cardinality search followed by a perfect-elimination check.
pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Visit order reversed is a PEO iff, for every v, the earlier-visited
    // neighbors other than the latest one are adjacent to that latest one.
    let ok = order.iter().all(|&v| {
        let earlier: Vec<VertexId> = g
            .neighbors(v)
            .iter()
            .filter(|&u| position[u] < position[v])
            .collect();
        match earlier.iter().max_by_key(|&&u| position[u]) {
            None => true,
            Some(&latest) => earlier
                .iter()
                .all(|&u| u == latest || g.has_edge(u, latest)),
        }
    });
    if ok {
        Chordality::Chordal {
            elimination_order: order.into_iter().rev().collect(),
        }
    } else {
        Chordality::InducedCycle {
            cycle: induced_long_cycle(g).expect("MCS rejected the graph, so a long induced cycle exists"),
        }
    }
}

fn mcs_order(g: &Graph) -> Vec<VertexId> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = left.iter().max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a))) {
        left.remove(v);
        order.push(v);
        for u in g.neighbors(v) & left {
            weight[u] += 1;
        }
    }
    order
}

/// For some vertex `v` with non-adjacent neighbors `u, w`, a shortest `u`-`w`
/// path avoiding the rest of `N[v]` closes a chordless cycle through `v`.
pub fn induced_long_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    for v in g.vertices() {
        let nv = g.neighbors(v);
        for u in nv {
            for w in nv.above(u) - g.neighbors(u) {
                let allowed = g.vertices() - g.closed_neighborhood(v) | VertexSet::from_iter([u, w]);
                if let Some(path) = shortest_path(g, u, w, allowed) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: VertexId, to: VertexId, allowed: VertexSet) -> Option<Vec<VertexId>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in (g.neighbors(x) & allowed) - seen {
            seen.insert(y);
            parent[y] = x;
            queue.push_back(y);
        }
    }
    None
}

/// The graph spanned by `edges`, on the vertices they touch.
fn edge_graph(n: usize, edges: &[[VertexId; 2]]) -> Graph {
    let full = Graph::from_edges(n, edges.iter().map(|&[u, v]| (u, v))).expect("edges of a valid graph");
    let touched: VertexSet = edges.iter().flatten().collect();
    full.induced_subgraph(touched).0
}

/// The complement, taken on the touched vertices, is chordal.
pub fn is_cochordal_edge_set(n: usize, edges: &[[VertexId; 2]]) -> bool {
    is_chordal(&edge_graph(n, edges).complement()).is_chordal()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochordalCover {
    pub parts: Vec<Vec<[VertexId; 2]>>,
}

impl CochordalCover {
    pub fn size(&self) -> usize {
        self.parts.len()
    }
}

/// The parts cover `E(g)` and each is co-chordal on its own vertices.
/// An edge that is not in `g` is an error.
pub fn verify_cochordal_cover(g: &Graph, parts: &[Vec<[VertexId; 2]>]) -> Result<bool> {
    let mut covered = Graph::empty(g.n())?;
    for part in parts {
        for &[u, v] in part {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(Error::StrayEdge(u, v));
            }
            covered.add_edge(u, v);
        }
    }
    Ok(covered == *g && parts.iter().all(|p| is_cochordal_edge_set(g.n(), p)))
}

/// Greedy cover: each part starts at the first uncovered edge and absorbs
/// every further uncovered edge that keeps it co-chordal. An upper bound on
/// the co-chordal cover number, not necessarily optimal.
pub fn cochord_upper_bound(g: &Graph) -> CochordalCover {
    let mut uncovered: Vec<[VertexId; 2]> = g.edges().into_iter().map(|(u, v)| [u, v]).collect();
    let mut parts = Vec::new();
    while !uncovered.is_empty() {
        let mut part = vec![uncovered[0]];
        for &e in &uncovered[1..] {
            part.push(e);
            if !is_cochordal_edge_set(g.n(), &part) {
                part.pop();
            }
        }
        uncovered.retain(|e| !part.contains(e));
        parts.push(part);
    }
    CochordalCover { parts }
}
