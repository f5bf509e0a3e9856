//! Simple undirected graphs stored as adjacency bitsets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet, CAPACITY};

/// Finite simple graph on the dense vertex set `0..n`.
///
/// Adjacency is symmetric and irreflexive; every constructor maintains this.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedKind {
    Complete,
    Path,
    Cycle,
}

/// The four set predicates reported by [`Graph::set_predicates`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SetPredicates {
    pub independent: bool,
    pub vertex_cover: bool,
    pub minimal_vertex_cover: bool,
    pub maximal_independent: bool,
}

/// Human-writable JSON edge list: `{"n": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > CAPACITY {
            return Err(Error::Capacity(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge iterator. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::named(NamedKind::Complete, n)
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::named(NamedKind::Path, n)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::named(NamedKind::Cycle, n)
    }

    /// `K_n`, `P_n` or `C_n` on `0..n`; path and cycle edges join consecutive ids.
    pub fn named(kind: NamedKind, n: usize) -> Result<Graph> {
        let min = match kind {
            NamedKind::Complete | NamedKind::Path => 1,
            NamedKind::Cycle => 3,
        };
        if n < min {
            return Err(Error::InvalidArgument(format!(
                "{kind:?} graph needs at least {min} vertices, got {n}"
            )));
        }
        let mut g = Graph::empty(n)?;
        match kind {
            NamedKind::Complete => {
                let all = VertexSet::full(n);
                for v in 0..n {
                    g.adj[v] = all.without(v);
                }
            }
            NamedKind::Path | NamedKind::Cycle => {
                for v in 1..n {
                    g.add_edge(v - 1, v);
                }
                if kind == NamedKind::Cycle {
                    g.add_edge(n - 1, 0);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn try_add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        self.add_edge(u, v);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N(S)`: union of the open neighborhoods of the members of `s`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N[S]`.
    pub fn closed_neighborhood_of(&self, s: VertexSet) -> VertexSet {
        self.neighborhood_of(s) | s
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].above(u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n).map(|v| (all - self.adj[v]).without(v)).collect();
        Graph { n: self.n, adj }
    }

    /// `G[S]` relabeled densely in increasing id order. The returned map sends
    /// each new id to the original id.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<VertexId>) {
        let map: Vec<VertexId> = (s & self.vertices()).to_vec();
        let mut back = [usize::MAX; CAPACITY];
        for (new, &old) in map.iter().enumerate() {
            back[old] = new;
        }
        let adj = map
            .iter()
            .map(|&old| (self.adj[old] & s).iter().map(|w| back[w]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `G - S`.
    pub fn remove_set(&self, s: VertexSet) -> (Graph, Vec<VertexId>) {
        self.induced_subgraph(self.vertices() - s)
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: VertexId) -> (Graph, Vec<VertexId>) {
        self.remove_set(VertexSet::singleton(v))
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].map(perm);
        }
        Graph { n: self.n, adj }
    }

    /// Vertex-offset concatenation in list order.
    pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
        let total: usize = graphs.iter().map(|g| g.n).sum();
        if total > CAPACITY {
            return Err(Error::Capacity(total));
        }
        let mut out = Graph::empty(total)?;
        let mut offset = 0;
        for g in graphs {
            for (u, v) in g.edges() {
                out.add_edge(u + offset, v + offset);
            }
            offset += g.n;
        }
        Ok(out)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Every edge has an endpoint in `s`.
    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        self.is_independent(self.vertices() - s)
    }

    pub fn set_predicates(&self, s: VertexSet) -> SetPredicates {
        let s = s & self.vertices();
        let independent = self.is_independent(s);
        let vertex_cover = self.is_vertex_cover(s);
        // A cover is minimal iff each member has a neighbor outside it;
        // otherwise that member could be dropped.
        let outside = self.vertices() - s;
        let minimal_vertex_cover =
            vertex_cover && s.iter().all(|w| self.adj[w].intersects(outside));
        let maximal_independent = independent
            && outside.iter().all(|w| self.adj[w].intersects(s));
        SetPredicates {
            independent,
            vertex_cover,
            minimal_vertex_cover,
            maximal_independent,
        }
    }

    /// Connected components ordered by least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.component_of(start, remaining);
            remaining -= comp;
            out.push(comp);
        }
        out
    }

    /// Component of `start` in `G[within]`.
    pub fn component_of(&self, start: VertexId, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = self.neighborhood_of(frontier) & within;
            frontier = next - comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    pub fn has_isolated_vertex_in(&self, s: VertexSet) -> bool {
        s.iter().any(|v| !self.adj[v].intersects(s))
    }

    pub fn max_degree_vertex(&self) -> Option<VertexId> {
        // Ties go to the lowest id.
        (0..self.n).max_by(|&a, &b| self.degree(a).cmp(&self.degree(b)).then(b.cmp(&a)))
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Strict JSON edge-list import: duplicate or reflexive edges are errors.
    pub fn from_edge_list(list: &EdgeList) -> Result<Graph> {
        let mut g = Graph::empty(list.n)?;
        for (i, &[u, v]) in list.edges.iter().enumerate() {
            if u < g.n && v < g.n && g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate edge {u}-{v} at index {i}"
                )));
            }
            g.try_add_edge(u, v)
                .map_err(|e| Error::InvalidArgument(format!("edge index {i}: {e}")))?;
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let list: EdgeList = serde_json::from_str(text)?;
        Graph::from_edge_list(&list)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    #[test]
    fn named_constructors() {
        let tri = Graph::cycle(3).unwrap();
        assert_eq!(tri.edge_count(), 3);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!((0..5).all(|v| k5.degree(v) == 4));
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::path(0).is_err());
        assert!(Graph::complete(129).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).unwrap().complement().edge_count(), 0);
        // P4 is self-complementary: 1-3-0-2 is the complement path.
        let p4c = Graph::path(4).unwrap().complement();
        assert_eq!(p4c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        let perm = [2, 0, 3, 1];
        assert_eq!(p4c.relabel(&perm), Graph::path(4).unwrap());
        let c12c = Graph::cycle(12).unwrap().complement();
        assert!((0..12).all(|v| c12c.degree(v) == 9));
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let (p3, map) = c5.induced_subgraph(set(&[0, 1, 2]));
        assert_eq!(p3, Graph::path(3).unwrap());
        assert_eq!(map, vec![0, 1, 2]);
        let (e, _) = c5.induced_subgraph(VertexSet::EMPTY);
        assert_eq!(e.n(), 0);
        let (whole, _) = c5.induced_subgraph(c5.vertices());
        assert_eq!(whole, c5);
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = Graph::complete(2).unwrap();
        let two = Graph::disjoint_union(&[k2.clone(), k2]).unwrap();
        assert_eq!(two.connected_components().len(), 2);
        assert_eq!(Graph::disjoint_union(&[]).unwrap().n(), 0);
        let big = Graph::empty(100).unwrap();
        assert!(matches!(
            Graph::disjoint_union(&[big.clone(), big]),
            Err(Error::Capacity(200))
        ));
    }

    #[test]
    fn set_predicate_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.set_predicates(set(&[1, 3])).independent);
        // 1-based {2,4,5} of the pentagon is {1,3,4} here.
        let p = c5.set_predicates(set(&[1, 3, 4]));
        assert!(p.vertex_cover && p.minimal_vertex_cover);
        let k4 = Graph::complete(4).unwrap();
        let p = k4.set_predicates(k4.vertices());
        assert!(p.vertex_cover && !p.minimal_vertex_cover);
    }

    #[test]
    fn minimal_cover_brute_force_on_c5() {
        // Oracle: W is a minimal cover iff it covers and no proper subset covers.
        let c5 = Graph::cycle(5).unwrap();
        for bits in 0u128..32 {
            let s = VertexSet::from_bits(bits);
            let covers = |t: VertexSet| c5.edges().iter().all(|&(u, v)| t.contains(u) || t.contains(v));
            let brute = covers(s) && s.subsets().filter(|t| *t != s).all(|t| !covers(t));
            let p = c5.set_predicates(s);
            assert_eq!(p.minimal_vertex_cover, brute, "{s}");
            assert_eq!(p.minimal_vertex_cover, c5.set_predicates(c5.vertices() - s).maximal_independent);
        }
    }

    #[test]
    fn components() {
        assert!(Graph::empty(0).unwrap().connected_components().is_empty());
        let g = Graph::from_edges(5, [(3, 4), (0, 2)]).unwrap();
        let comps: Vec<_> = g.connected_components().iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 2], vec![1], vec![3, 4]]);
    }

    #[test]
    fn json_edge_list() {
        let g = Graph::from_json(r#"{"n":3,"edges":[[0,1],[2,1]]}"#).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(Graph::from_json(r#"{"n":3,"edges":[[0,1],[1,0]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":3,"edges":[[1,1]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":3,"edges":[[1,3]]}"#).is_err());
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    }

    proptest! {
        #[test]
        fn symmetric_and_irreflexive(g in arb_graph(20)) {
            for u in 0..g.n() {
                prop_assert!(!g.has_edge(u, u));
                for v in g.neighbors(u) {
                    prop_assert!(g.has_edge(v, u));
                }
            }
            let c = g.complement();
            prop_assert_eq!(c.complement(), g.clone());
            prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        }
    }
}
