mod common;

use common::*;
use lexdim_core::family::apex_join;
use lexdim_core::{
    components, dimension, girth, in_family_g, in_family_g_prime, is_connected, true_twin_classes,
    unit_adim_l_criterion, GeneratorKind, Girth, Graph, NamedGraph,
};
use proptest::prelude::*;

fn adim_l(g: &Graph) -> usize {
    dimension(g, GeneratorKind::LocalAdjacency).unwrap().value
}

/// Graph isomorphism by trying every bijection; fine up to order 7.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    use itertools::Itertools;
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    (0..n).permutations(n).any(|p| a.edges().all(|(u, v)| b.adjacent(p[u], p[v])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn family_tests_agree(g in graphs(1, 7)) {
        prop_assert_eq!(in_family_g(&g).unwrap(), in_family_g_prime(&g).unwrap());
    }

    #[test]
    fn connected_non_trees_in_the_family_have_short_cycles(g in connected_graphs(3, 7)) {
        if g.edge_count() >= g.order() && in_family_g(&g).unwrap() {
            prop_assert!(matches!(girth(&g), Girth::Finite(k) if k <= 6));
        }
    }
}

#[test]
fn apex_join_shifts_the_dimension() {
    for h in all_graphs_up_to(6) {
        let joined = dimension(&apex_join(&h).unwrap(), GeneratorKind::LocalMetric)
            .unwrap()
            .value;
        let shift = usize::from(in_family_g_prime(&h).unwrap());
        assert_eq!(adim_l(&h) + shift, joined, "{}", lexdim_core::to_graph6(&h));
    }
}

#[test]
fn unit_dimension_and_cliques() {
    for h in all_graphs_up_to(6) {
        let a = adim_l(&h);
        assert_eq!(a == 1, unit_adim_l_criterion(&h), "{}", lexdim_core::to_graph6(&h));
        assert_eq!(a + 1 == h.order(), h.is_complete(), "{}", lexdim_core::to_graph6(&h));
    }
}

/// A disconnected member of the family is an edgeless graph, or isolated
/// vertices beside one connected member of the family.
#[test]
fn disconnected_members() {
    for h in all_graphs_up_to(6) {
        if is_connected(&h) {
            continue;
        }
        let comps = components(&h);
        let big: Vec<_> = comps.iter().filter(|c| c.len() >= 2).collect();
        let shape = match big.as_slice() {
            [] => true,
            [core] => in_family_g(&h.induced(**core)).unwrap(),
            _ => false,
        };
        assert_eq!(in_family_g(&h).unwrap(), shape, "{}", lexdim_core::to_graph6(&h));
        if big.is_empty() {
            assert!(isomorphic(&h, &named(NamedGraph::Empty(h.order()))));
        }
    }
}

#[test]
fn wide_graphs_are_outside() {
    for n in 9..=12 {
        assert!(!in_family_g(&named(NamedGraph::Path(n))).unwrap(), "P{n}");
        assert!(!in_family_g(&named(NamedGraph::Cycle(n))).unwrap(), "C{n}");
    }
    for n in 7..=8 {
        assert!(!in_family_g(&named(NamedGraph::Cycle(n))).unwrap(), "C{n}");
    }
}

#[test]
fn family_examples() {
    for r in 1..=7 {
        assert!(in_family_g(&named(NamedGraph::Empty(r))).unwrap());
    }
    for t in 2..=6 {
        assert!(in_family_g(&named(NamedGraph::Complete(t))).unwrap());
    }
    assert!(!in_family_g(&Graph::empty(0).unwrap()).unwrap());
    let k1_k2 = spec("g6:B_");
    assert_eq!(true_twin_classes(&k1_k2).nonsingleton.len(), 1);
    assert!(in_family_g(&k1_k2).unwrap());
}
