//! Clutters and simplicial complexes in facet representation.
//!
//! A complex is stored by its facets, kept pairwise incomparable and sorted
//! in size-lex order. The ground set `0..ground` fixes the id space; a ground
//! vertex that lies in no facet is a non-face and shows up as a singleton
//! circuit. Two degenerate complexes are distinguished: the *void* complex
//! (no faces at all, empty facet list) and `{∅}` (one empty facet).

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{maximal_sets, sort_size_lex, VertexId, VertexSet, CAPACITY};

/// A family of pairwise incomparable, nonempty vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clutter {
    ground: usize,
    edges: Vec<VertexSet>,
}

impl Clutter {
    pub fn new(ground: usize, mut edges: Vec<VertexSet>) -> Result<Clutter> {
        if ground > CAPACITY {
            return Err(Error::Capacity(ground));
        }
        let all = VertexSet::full(ground);
        for e in &edges {
            if e.is_empty() {
                return Err(Error::InvalidArgument("clutter edges must be nonempty".into()));
            }
            if !e.is_subset(all) {
                return Err(Error::InvalidArgument(format!(
                    "edge {e} is outside the ground set 0..{ground}"
                )));
            }
        }
        sort_size_lex(&mut edges);
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                if a.is_subset(*b) {
                    return Err(Error::InvalidArgument(format!(
                        "edges {a} and {b} are comparable"
                    )));
                }
            }
        }
        Ok(Clutter { ground, edges })
    }

    pub fn from_graph(g: &Graph) -> Clutter {
        let mut edges: Vec<VertexSet> = g
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from_iter([u, v]))
            .collect();
        sort_size_lex(&mut edges);
        Clutter {
            ground: g.n(),
            edges,
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.ground)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// The graph with the same edges, when every edge has two vertices.
    pub fn to_graph(&self) -> Option<Graph> {
        if !self.edges.iter().all(|e| e.len() == 2) {
            return None;
        }
        let pairs = self.edges.iter().map(|e| {
            let v = e.to_vec();
            (v[0], v[1])
        });
        Graph::from_edges(self.ground, pairs).ok()
    }

    /// Contains no edge.
    pub fn is_independent(&self, a: VertexSet) -> bool {
        !self.edges.iter().any(|e| e.is_subset(a))
    }

    /// `N(A)`: vertices `w` outside `A` such that `A ∪ {w}` contains an edge.
    pub fn neighbors_of(&self, a: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for e in &self.edges {
            let rest = *e - a;
            if rest.len() == 1 {
                out |= rest;
            }
        }
        out
    }

    /// Every edge meets `w`.
    pub fn is_vertex_cover(&self, w: VertexSet) -> bool {
        self.edges.iter().all(|e| e.intersects(w))
    }

    /// A cover from which no vertex can be dropped: each member is the only
    /// cover vertex of some edge.
    pub fn is_minimal_vertex_cover(&self, w: VertexSet) -> bool {
        self.is_vertex_cover(w)
            && w
                .iter()
                .all(|x| self.edges.iter().any(|e| (*e & w) == VertexSet::singleton(x)))
    }
}

/// A face contained in exactly one facet, together with that facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeFaceReport {
    pub face: VertexSet,
    pub unique_facet: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from facets that must already be pairwise incomparable.
    pub fn from_facets(ground: usize, facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
        let x = SimplicialComplex::from_faces(ground, facets.clone())?;
        if x.facets.len() != facets.len() {
            return Err(Error::InvalidArgument(
                "facets must be distinct and pairwise incomparable".into(),
            ));
        }
        Ok(x)
    }

    /// The complex generated by an arbitrary list of faces.
    pub fn from_faces(ground: usize, faces: Vec<VertexSet>) -> Result<SimplicialComplex> {
        if ground > CAPACITY {
            return Err(Error::Capacity(ground));
        }
        let all = VertexSet::full(ground);
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(all)) {
            return Err(Error::InvalidArgument(format!(
                "face {bad} is outside the ground set 0..{ground}"
            )));
        }
        Ok(SimplicialComplex {
            ground,
            facets: maximal_sets(faces),
        })
    }

    pub(crate) fn from_maximal_unchecked(ground: usize, facets: Vec<VertexSet>) -> Self {
        let mut facets = facets;
        sort_size_lex(&mut facets);
        SimplicialComplex { ground, facets }
    }

    pub fn void(ground: usize) -> SimplicialComplex {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Result<SimplicialComplex> {
        if n > CAPACITY {
            return Err(Error::Capacity(n));
        }
        Ok(SimplicialComplex {
            ground: n,
            facets: vec![VertexSet::full(n)],
        })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Union of the facets.
    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a | *f)
    }

    /// Every ground vertex is a face.
    pub fn has_all_singletons(&self) -> bool {
        self.vertices() == VertexSet::full(self.ground)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Exactly one facet (this includes `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, a: VertexSet) -> bool {
        self.facets.iter().any(|f| a.is_subset(*f))
    }

    pub fn is_facet(&self, a: VertexSet) -> bool {
        self.facets.contains(&a)
    }

    pub fn facets_containing(&self, a: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets.iter().copied().filter(move |f| a.is_subset(*f))
    }

    fn require_face(&self, a: VertexSet) -> Result<()> {
        if self.contains_face(a) {
            Ok(())
        } else {
            Err(Error::NotAFace(a))
        }
    }

    /// All faces grouped by cardinality: `out[k]` holds the faces of size `k`,
    /// sorted by raw bits. The void complex yields an empty vector.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let Some(top) = self.facets.iter().map(|f| f.len()).max() else {
            return Vec::new();
        };
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut out = vec![Vec::new(); top + 1];
        for s in seen {
            out[s.len()].push(s);
        }
        for level in &mut out {
            level.sort_unstable();
        }
        out
    }

    /// All faces, the empty face included, in size-lex order.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all: Vec<VertexSet> = self.faces_by_size().into_iter().flatten().collect();
        sort_size_lex(&mut all);
        all
    }

    /// `f[k]` = number of faces with `k` vertices (`f[0] = 1` unless void).
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Unreduced Euler characteristic over nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// The induced subcomplex `X[W]`: faces contained in `w`.
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        if self.is_void() {
            return self.clone();
        }
        SimplicialComplex {
            ground: self.ground,
            facets: maximal_sets(self.facets.iter().map(|f| *f & w).collect()),
        }
    }

    /// `(del(X; A), lk(X; A))`.
    pub fn link_and_deletion(&self, a: VertexSet) -> Result<(SimplicialComplex, SimplicialComplex)> {
        self.require_face(a)?;
        Ok((self.deletion_unchecked(a), self.link_unchecked(a)))
    }

    pub fn deletion(&self, a: VertexSet) -> Result<SimplicialComplex> {
        self.require_face(a)?;
        Ok(self.deletion_unchecked(a))
    }

    pub fn link(&self, a: VertexSet) -> Result<SimplicialComplex> {
        self.require_face(a)?;
        Ok(self.link_unchecked(a))
    }

    pub(crate) fn deletion_unchecked(&self, a: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            ground: self.ground,
            facets: maximal_sets(self.facets.iter().map(|f| *f - a).collect()),
        }
    }

    pub(crate) fn link_unchecked(&self, a: VertexSet) -> SimplicialComplex {
        // Distinct facets through `a` stay incomparable after removing `a`.
        let facets = self.facets_containing(a).map(|f| f - a).collect();
        SimplicialComplex::from_maximal_unchecked(self.ground, facets)
    }

    /// Cone over a new apex vertex `ground` (the ground set grows by one).
    pub fn cone(&self) -> Result<SimplicialComplex> {
        let apex = self.ground;
        if apex >= CAPACITY {
            return Err(Error::Capacity(apex + 1));
        }
        let facets = if self.is_void() {
            vec![VertexSet::singleton(apex)]
        } else {
            self.facets.iter().map(|f| f.with(apex)).collect()
        };
        Ok(SimplicialComplex::from_maximal_unchecked(apex + 1, facets))
    }

    /// `U_X(A) = {v ∉ A : A ∈ lk(X; v)} ∪ A`.
    pub fn u_set(&self, a: VertexSet) -> Result<VertexSet> {
        self.require_face(a)?;
        Ok(self.u_set_unchecked(a))
    }

    pub(crate) fn u_set_unchecked(&self, a: VertexSet) -> VertexSet {
        let mut u = a;
        for v in self.vertices() - a {
            if self.contains_face(a.with(v)) {
                u.insert(v);
            }
        }
        u
    }

    /// The free-face report for `a`, if exactly one facet contains it.
    ///
    /// The answer is computed by counting containing facets and is checked
    /// against the second characterization, `U_X(A)` being a facet.
    pub fn is_free_face(&self, a: VertexSet) -> Result<Option<FreeFaceReport>> {
        self.require_face(a)?;
        let by_count = self.unique_facet_of(a);
        let by_u = self.is_facet(self.u_set_unchecked(a));
        assert_eq!(
            by_count.is_some(),
            by_u,
            "free-face characterizations disagree on {a}"
        );
        Ok(by_count.map(|f| FreeFaceReport {
            face: a,
            unique_facet: f,
        }))
    }

    /// The facet containing `a` when it is the only one.
    pub(crate) fn unique_facet_of(&self, a: VertexSet) -> Option<VertexSet> {
        let mut it = self.facets_containing(a);
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    /// Inclusion-minimal nonempty free faces in size-lex order.
    pub fn minimal_free_faces(&self) -> Vec<VertexSet> {
        // Free faces are closed upward among faces, so a free face is minimal
        // iff none of its codimension-one subfaces is free.
        let mut out: Vec<VertexSet> = self
            .faces()
            .into_iter()
            .filter(|a| !a.is_empty() && self.unique_facet_of(*a).is_some())
            .filter(|a| {
                a.len() == 1
                    || a.iter().all(|v| self.unique_facet_of(a.without(v)).is_none())
            })
            .collect();
        sort_size_lex(&mut out);
        out
    }

    /// Minimal non-faces.
    pub fn circuits(&self) -> Result<Clutter> {
        if self.is_void() {
            return Err(Error::InvalidArgument(
                "the void complex has the empty set as its only circuit".into(),
            ));
        }
        // Every circuit S is A ∪ {x} with A = S - max(S) a face and x > max(A).
        let mut edges = Vec::new();
        for a in self.faces() {
            let start = a.last().map_or(0, |m| m + 1);
            for x in start..self.ground {
                let s = a.with(x);
                if !self.contains_face(s) && s.iter().all(|y| self.contains_face(s.without(y))) {
                    edges.push(s);
                }
            }
        }
        Clutter::new(self.ground, edges)
    }

    /// Every circuit has exactly two vertices.
    pub fn is_flag(&self) -> Result<bool> {
        Ok(self.circuits()?.edges().iter().all(|e| e.len() == 2))
    }

    /// Parses the facet-list text format: a header line `n <int>`, then one
    /// facet per line as whitespace-separated ids. `#` starts a comment and
    /// `()` denotes the empty facet.
    pub fn from_facet_text(text: &str) -> Result<SimplicialComplex> {
        let mut ground = None;
        let mut faces = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if let Some(rest) = line.strip_prefix("n ") {
                if ground.is_some() {
                    return Err(parse_err("duplicate header".into()));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex count `{}`", rest.trim())))?;
                if n > CAPACITY {
                    return Err(Error::Capacity(n));
                }
                ground = Some(n);
                continue;
            }
            let n = ground.ok_or_else(|| parse_err("facet before the `n <int>` header".into()))?;
            if line == "()" {
                faces.push(VertexSet::EMPTY);
                continue;
            }
            let mut f = VertexSet::EMPTY;
            for tok in line.split_whitespace() {
                let v: VertexId = tok
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex id `{tok}`")))?;
                if v >= n {
                    return Err(parse_err(format!("vertex {v} outside 0..{n}")));
                }
                f.insert(v);
            }
            faces.push(f);
        }
        let n = ground.ok_or(Error::Parse {
            line: 0,
            message: "missing `n <int>` header".into(),
        })?;
        SimplicialComplex::from_faces(n, faces)
    }

    pub fn to_facet_text(&self) -> String {
        let mut out = format!("n {}\n", self.ground);
        for f in &self.facets {
            if f.is_empty() {
                out.push_str("()\n");
            } else {
                let ids: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{}", ids.join(" "));
            }
        }
        out
    }
}

/// `Ind(C)`: facets are the maximal independent sets of the clutter.
pub fn independence_complex(c: &Clutter) -> SimplicialComplex {
    let facets = match c.to_graph() {
        Some(g) => maximal_independent_sets(&g),
        None => maximal_independent_sets_clutter(c),
    };
    SimplicialComplex::from_maximal_unchecked(c.ground(), facets)
}

pub fn independence_complex_of_graph(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_maximal_unchecked(g.n(), maximal_independent_sets(g))
}

/// Bron–Kerbosch with pivoting on the complement graph.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertices();
    let non_adj: Vec<VertexSet> = (0..g.n())
        .map(|v| all - g.closed_neighborhood(v))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adj, VertexSet::EMPTY, all, VertexSet::EMPTY, &mut out);
    out
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (p & adj[u]).len())
        .expect("p is nonempty");
    for v in p - adj[pivot] {
        bron_kerbosch(adj, r.with(v), p & adj[v], x & adj[v], out);
        p.remove(v);
        x.insert(v);
    }
}

fn maximal_independent_sets_clutter(c: &Clutter) -> Vec<VertexSet> {
    fn rec(c: &Clutter, v: VertexId, a: VertexSet, excluded: VertexSet, out: &mut Vec<VertexSet>) {
        let n = c.ground();
        if v == n {
            let blocked = excluded.iter().all(|w| !c.is_independent(a.with(w)));
            if blocked {
                out.push(a);
            }
            return;
        }
        if c.is_independent(a.with(v)) {
            rec(c, v + 1, a.with(v), excluded, out);
        }
        // Excluding v is only useful if some edge through v can still be
        // completed from chosen and undecided vertices.
        let reachable = a | VertexSet::full(n).above(v);
        if c.edges().iter().any(|e| e.contains(v) && (e.without(v)).is_subset(reachable)) {
            rec(c, v + 1, a, excluded.with(v), out);
        }
    }
    let mut out = Vec::new();
    rec(c, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{arb_complex, arb_graph};
    use proptest::prelude::*;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    fn lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.to_vec()).collect()
    }

    fn ind(g: &Graph) -> SimplicialComplex {
        independence_complex(&Clutter::from_graph(g))
    }

    /// Brute-force maximal independent sets over all subsets.
    fn brute_maximal_independent(g: &Graph) -> Vec<Vec<usize>> {
        let mut out: Vec<VertexSet> = g
            .vertices()
            .subsets()
            .filter(|s| g.set_predicates(*s).maximal_independent)
            .collect();
        sort_size_lex(&mut out);
        lists(&out)
    }

    #[test]
    fn independence_complex_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(lists(ind(&k3).facets()), vec![vec![0], vec![1], vec![2]]);
        let c5 = Graph::cycle(5).unwrap();
        let x = ind(&c5);
        assert_eq!(x.facets().len(), 5);
        assert!(x.facets().iter().all(|f| f.len() == 2 && !c5.has_edge(f.first().unwrap(), f.last().unwrap())));
        assert_eq!(lists(x.facets()), brute_maximal_independent(&c5));
        let p4 = Graph::path(4).unwrap();
        assert_eq!(lists(ind(&p4).facets()), vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
    }

    #[test]
    fn clutter_validation() {
        assert!(Clutter::new(3, vec![set(&[0, 1]), set(&[0, 1, 2])]).is_err());
        assert!(Clutter::new(3, vec![VertexSet::EMPTY]).is_err());
        assert!(Clutter::new(3, vec![set(&[3])]).is_err());
        let c = Clutter::new(4, vec![set(&[0, 1, 2]), set(&[2, 3])]).unwrap();
        assert_eq!(c.neighbors_of(set(&[0, 1])), set(&[2]));
        assert_eq!(c.neighbors_of(set(&[3])), set(&[2]));
    }

    #[test]
    fn circuits_examples() {
        assert!(SimplicialComplex::simplex(4).unwrap().circuits().unwrap().edges().is_empty());
        let boundary = SimplicialComplex::from_facets(3, vec![set(&[0, 1]), set(&[1, 2]), set(&[0, 2])]).unwrap();
        assert_eq!(lists(boundary.circuits().unwrap().edges()), vec![vec![0, 1, 2]]);
        assert!(!boundary.is_flag().unwrap());
        let ghost = SimplicialComplex::from_facets(3, vec![set(&[0, 1])]).unwrap();
        assert_eq!(lists(ghost.circuits().unwrap().edges()), vec![vec![2]]);
    }

    #[test]
    fn circuits_invert_ind_for_all_small_graphs() {
        // Exhaustive over labeled graphs on up to 5 vertices, sampled beyond.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e)).unwrap();
                let c = Clutter::from_graph(&g);
                let x = independence_complex(&c);
                assert_eq!(x.circuits().unwrap(), c);
                assert!(x.is_flag().unwrap());
                assert_eq!(lists(x.facets()), brute_maximal_independent(&g));
            }
        }
    }

    #[test]
    fn clutter_round_trip_exhaustive_small() {
        // Every clutter on <= 4 vertices: enumerate antichains of nonempty sets.
        for n in 1..=4usize {
            let sets: Vec<VertexSet> = (1u128..(1 << n)).map(VertexSet::from_bits).collect();
            let mut count = 0;
            let mut stack = vec![(0usize, Vec::<VertexSet>::new())];
            while let Some((i, chosen)) = stack.pop() {
                if i == sets.len() {
                    let c = Clutter::new(n, chosen).unwrap();
                    let x = independence_complex(&c);
                    assert_eq!(x.circuits().unwrap(), c);
                    count += 1;
                    continue;
                }
                let s = sets[i];
                stack.push((i + 1, chosen.clone()));
                if chosen.iter().all(|t| !t.is_subset(s) && !s.is_subset(*t)) {
                    let mut next = chosen;
                    next.push(s);
                    stack.push((i + 1, next));
                }
            }
            // Dedekind numbers minus the antichain {∅}: 2, 5, 19, 167.
            assert_eq!(count, [2, 5, 19, 167][n - 1]);
        }
    }

    #[test]
    fn link_and_deletion_examples() {
        let simplex = SimplicialComplex::simplex(3).unwrap();
        let (_, lk) = simplex.link_and_deletion(set(&[0])).unwrap();
        assert_eq!(lists(lk.facets()), vec![vec![1, 2]]);
        let pent = ind(&Graph::cycle(5).unwrap());
        let lk = pent.link(set(&[0])).unwrap();
        assert_eq!(lists(lk.facets()), vec![vec![2], vec![3]]);
        let p4 = Graph::path(4).unwrap();
        let del = ind(&p4).deletion(set(&[1])).unwrap();
        let (sub, map) = p4.remove_vertex(1);
        let expected: Vec<VertexSet> = ind(&sub).facets().iter().map(|f| f.map(&map)).collect();
        assert_eq!(del.facets(), &expected[..]);
        assert!(matches!(pent.link(set(&[0, 1])), Err(Error::NotAFace(_))));
    }

    #[test]
    fn u_set_examples() {
        let p4 = ind(&Graph::path(4).unwrap());
        for f in p4.facets() {
            assert_eq!(p4.u_set(*f).unwrap(), *f);
        }
        assert_eq!(p4.u_set(set(&[2])).unwrap(), set(&[0, 2]));
        let pent = ind(&Graph::cycle(5).unwrap());
        assert_eq!(pent.u_set(set(&[0])).unwrap(), set(&[0, 2, 3]));
        assert!(!pent.contains_face(set(&[0, 2, 3])));
    }

    #[test]
    fn free_face_examples() {
        let p4 = ind(&Graph::path(4).unwrap());
        let r = p4.is_free_face(set(&[1])).unwrap().unwrap();
        assert_eq!(r.unique_facet, set(&[1, 3]));
        let pent = ind(&Graph::cycle(5).unwrap());
        assert!((0..5).all(|v| pent.is_free_face(set(&[v])).unwrap().is_none()));
        assert!(p4.is_free_face(set(&[0, 1])).is_err());
    }

    #[test]
    fn minimal_free_face_examples() {
        let p4 = ind(&Graph::path(4).unwrap());
        assert_eq!(lists(&p4.minimal_free_faces()), vec![vec![1], vec![2], vec![0, 3]]);
        let s = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(lists(&s.minimal_free_faces()), vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(SimplicialComplex::simplex(5).unwrap().euler_characteristic(), 1);
        assert_eq!(ind(&Graph::cycle(5).unwrap()).euler_characteristic(), 0);
    }

    #[test]
    fn facet_text_round_trip() {
        let text = "# comment\nn 4\n0 1 2\n2 3 # trailing\n\n1 2\n";
        let x = SimplicialComplex::from_facet_text(text).unwrap();
        assert_eq!(lists(x.facets()), vec![vec![2, 3], vec![0, 1, 2]]);
        assert_eq!(SimplicialComplex::from_facet_text(&x.to_facet_text()).unwrap(), x);
        let e = SimplicialComplex::from_facet_text("n 2\n()\n").unwrap();
        assert_eq!(e.dim(), Some(-1));
        assert!(matches!(SimplicialComplex::from_facet_text("n 2\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(SimplicialComplex::from_facet_text("0 1\n").is_err());
    }

    #[test]
    fn free_face_bridge_exhaustive_small() {
        // Both free-face characterizations agree on every face of every complex
        // on up to 5 vertices (all antichains containing every singleton's cover).
        for n in 1..=5usize {
            let sets: Vec<VertexSet> = (1u128..(1 << n)).map(VertexSet::from_bits).collect();
            let mut stack = vec![(0usize, Vec::<VertexSet>::new())];
            while let Some((i, chosen)) = stack.pop() {
                if i == sets.len() {
                    if chosen.is_empty() {
                        continue;
                    }
                    let x = SimplicialComplex::from_facets(n, chosen).unwrap();
                    for a in x.faces() {
                        let by_u = x.is_facet(x.u_set(a).unwrap());
                        assert_eq!(x.is_free_face(a).unwrap().is_some(), by_u);
                    }
                    continue;
                }
                let s = sets[i];
                stack.push((i + 1, chosen.clone()));
                if chosen.iter().all(|t| !t.is_subset(s) && !s.is_subset(*t)) {
                    let mut next = chosen;
                    next.push(s);
                    stack.push((i + 1, next));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn duality_round_trip(x in arb_complex(9, 6)) {
            let c = x.circuits().unwrap();
            prop_assert_eq!(independence_complex(&c), x.clone());
            for f in x.facets() {
                prop_assert_eq!(x.u_set(*f).unwrap(), *f);
            }
        }

        #[test]
        fn ind_graph_matches_clutter_route(g in arb_graph(10)) {
            let c = Clutter::from_graph(&g);
            let mut a = maximal_independent_sets(&g);
            let mut b = maximal_independent_sets_clutter(&c);
            sort_size_lex(&mut a);
            sort_size_lex(&mut b);
            prop_assert_eq!(a, b);
        }
    }
}
