//! Shared proptest strategies for unit tests.

use proptest::prelude::*;

use crate::complex::SimplicialComplex;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Complexes on `n` vertices generated from random facet candidates; every
/// vertex is added as a singleton so the ground set is fully used.
pub fn arb_complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(1u128..(1u128 << n), 1..=max_facets).prop_map(move |raw| {
            let mut sets: Vec<VertexSet> = raw.into_iter().map(VertexSet::from_bits).collect();
            sets.extend((0..n).map(VertexSet::singleton));
            SimplicialComplex::from_faces(n, sets).unwrap()
        })
    })
}
