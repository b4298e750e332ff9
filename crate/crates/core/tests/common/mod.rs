#![allow(dead_code)]

use lexdim_core::{is_connected, Family, Graph, NamedGraph};
use proptest::prelude::*;

pub fn named(n: NamedGraph) -> Graph {
    n.build().unwrap()
}

pub fn spec(s: &str) -> Graph {
    lexdim_core::parse_graph(s).unwrap()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

/// Uniform labeled graphs with order in `lo..=hi`.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn connected_graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graphs(lo, hi).prop_filter("connected", is_connected)
}

/// Families with a connected base of order `2..=base_hi` and members of order
/// `1..=member_hi`.
pub fn families(base_hi: usize, member_hi: usize) -> impl Strategy<Value = Family> {
    connected_graphs(2, base_hi).prop_flat_map(move |base| {
        let n = base.order();
        proptest::collection::vec(graphs(1, member_hi), n)
            .prop_map(move |members| Family::new(base.clone(), members).unwrap())
    })
}

/// Families whose members all have at least one edge.
pub fn edged_families(base_hi: usize, member_hi: usize) -> impl Strategy<Value = Family> {
    connected_graphs(2, base_hi).prop_flat_map(move |base| {
        let n = base.order();
        let member = graphs(2, member_hi).prop_filter("has an edge", |h| h.edge_count() > 0);
        proptest::collection::vec(member, n)
            .prop_map(move |members| Family::new(base.clone(), members).unwrap())
    })
}

/// Every labeled graph of order `1..=n`.
pub fn all_graphs_up_to(n: usize) -> impl Iterator<Item = Graph> {
    (1..=n).flat_map(|k| lexdim_core::enumerate_labeled(k).unwrap())
}
