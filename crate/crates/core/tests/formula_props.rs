mod common;

use std::collections::HashMap;

use common::*;
use itertools::Itertools;
use lexdim_core::formula::{analyze_member, decompose_with, MemberAnalysis};
use lexdim_core::lexicographic::ProductDistances;
use lexdim_core::verify::{verify_instance, Status};
use lexdim_core::{
    decompose, dim_l_formula, dimension, distance_matrix, enumerate_small_connected,
    equality_condition, in_family_g, product, true_twin_classes, unit_adim_l_criterion, Family,
    GeneratorKind, Graph, NamedGraph, RepresentativeChoice, SolverConfig,
};
use proptest::prelude::*;

fn local_metric(g: &Graph) -> usize {
    dimension(g, GeneratorKind::LocalMetric).unwrap().value
}

fn analysis(h: &Graph) -> MemberAnalysis {
    analyze_member(h, &SolverConfig::default()).unwrap()
}

fn small_family() -> impl Strategy<Value = Family> {
    families(4, 4).prop_filter("product fits the search", |f| f.product_order() <= 16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_forms_match_exhaustive_search(fam in small_family()) {
        let r = verify_instance(&fam).unwrap();
        prop_assert_eq!(r.status, Status::Pass, "{}\n{:#?}", fam.to_family_file(), r.checks);
    }

    #[test]
    fn product_distances_from_the_factors(fam in families(4, 4)) {
        let p = product(&fam).unwrap();
        let dm = distance_matrix(&p.graph);
        let pd = ProductDistances::new(&fam).unwrap();
        for x in 0..p.graph.order() {
            for y in 0..p.graph.order() {
                let (xi, xa) = p.locate(x);
                let (yj, yb) = p.locate(y);
                let want = if xi != yj {
                    distance_matrix(fam.base()).get(xi, yj)
                } else if xa == yb {
                    0
                } else if fam.member(xi).adjacent(xa, yb) {
                    1
                } else {
                    2
                };
                prop_assert_eq!(dm.get(x, y), want);
                prop_assert_eq!(pd.distance((xi, xa), (yj, yb)).unwrap(), want);
            }
        }
    }

    #[test]
    fn base_dimension_is_a_lower_bound(fam in families(5, 4)) {
        let base = local_metric(fam.base());
        prop_assert!(dim_l_formula(&fam).unwrap().total >= base);
        let edgeless: Vec<Graph> = fam
            .members()
            .iter()
            .map(|h| named(NamedGraph::Empty(h.order())))
            .collect();
        let flat = Family::new(fam.base().clone(), edgeless).unwrap();
        prop_assert_eq!(dim_l_formula(&flat).unwrap().total, base);
    }

    #[test]
    fn order_many_exactly_for_unit_members(fam in edged_families(5, 4)) {
        let n = fam.base().order();
        let tp = true_twin_classes(fam.base());
        let at_most_one_per_class = tp.classes.iter().all(|c| {
            c.iter().filter(|&i| in_family_g(fam.member(i)).unwrap()).count() <= 1
        });
        let units = fam.members().iter().all(unit_adim_l_criterion);
        let total = dim_l_formula(&fam).unwrap().total;
        prop_assert_eq!(total == n, at_most_one_per_class && units);
    }

    #[test]
    fn clique_members_reach_the_maximum(
        fam in edged_families(5, 4)
            .prop_filter("twin-free base", |f| true_twin_classes(f.base()).nonsingleton.is_empty())
    ) {
        let n = fam.base().order();
        let total = dim_l_formula(&fam).unwrap().total;
        let all_complete = fam.members().iter().all(Graph::is_complete);
        prop_assert_eq!(total + n == fam.product_order(), all_complete);
    }
}

/// Decomposition under every way of picking the retained vertex of each
/// non-empty `I_j`.
fn every_choice(fam: &Family, members: &[MemberAnalysis]) -> Vec<(usize, usize, usize, usize)> {
    let first = decompose_with(fam, members, &RepresentativeChoice::default()).unwrap();
    let options: Vec<Vec<usize>> = first
        .i_parts
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| p.to_vec())
        .collect();
    options
        .iter()
        .map(|o| o.iter().copied())
        .multi_cartesian_product()
        .map(|picks| {
            let r = decompose_with(fam, members, &RepresentativeChoice::Explicit(picks)).unwrap();
            (r.rho.value, r.rho_prime.value, r.dim_l_terms().total, r.adim_l_terms().total)
        })
        .collect()
}

#[test]
fn representative_choice_does_not_matter() {
    let pool: Vec<Graph> = ["N1", "N2", "K2", "P3", "C7"].iter().map(|s| spec(s)).collect();
    let info: Vec<MemberAnalysis> = pool.iter().map(analysis).collect();
    let mut checked = 0;
    for n in 2..=5 {
        let tuples: Vec<Vec<usize>> = if n <= 4 {
            (0..n).map(|_| 0..pool.len()).multi_cartesian_product().collect()
        } else {
            // order 5: every base with members drawn from N1, N2 and K2
            (0..n).map(|_| 0..3).multi_cartesian_product().collect()
        };
        for base in enumerate_small_connected(n).unwrap() {
            if true_twin_classes(&base).nonsingleton.is_empty() {
                continue;
            }
            for picks in &tuples {
                let members: Vec<Graph> = picks.iter().map(|&p| pool[p].clone()).collect();
                let fam = Family::new(base.clone(), members).unwrap();
                let analyses: Vec<_> = picks.iter().map(|&p| info[p].clone()).collect();
                let outcomes = every_choice(&fam, &analyses);
                assert!(
                    outcomes.iter().all_equal(),
                    "{}{outcomes:?}",
                    fam.to_family_file()
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn explicit_choices_are_validated() {
    let fam = Family::new(
        named(NamedGraph::Complete(3)),
        vec![spec("K2"), spec("K2"), spec("N1")],
    )
    .unwrap();
    let info: Vec<_> = fam.members().iter().map(analysis).collect();
    assert!(decompose_with(&fam, &info, &RepresentativeChoice::Explicit(vec![7])).is_err());
    assert!(decompose_with(&fam, &info, &RepresentativeChoice::Explicit(vec![])).is_err());
    let r = decompose_with(&fam, &info, &RepresentativeChoice::Explicit(vec![0])).unwrap();
    assert_eq!(r.x_e.to_vec(), vec![0]);
}

/// Members with no local adjacency basis inside a neighbourhood.
fn outside_members() -> Vec<Graph> {
    let found: Vec<Graph> = (2..=5)
        .flat_map(|n| lexdim_core::enumerate_labeled(n).unwrap())
        .filter(|h| !in_family_g(h).unwrap())
        .collect();
    assert!(!found.is_empty());
    found
}

#[test]
fn bipartite_base_with_outside_members() {
    let outside = outside_members();
    let mut hits = HashMap::new();
    for n in 2..=4 {
        for base in enumerate_small_connected(n).unwrap() {
            if !base.is_bipartite() {
                continue;
            }
            for k in (0..outside.len()).step_by(7).take(6) {
                let members: Vec<Graph> = (0..n).map(|i| outside[(k + i) % outside.len()].clone()).collect();
                let fam = Family::new(base.clone(), members).unwrap();
                let sum: usize = fam
                    .members()
                    .iter()
                    .map(|h| dimension(h, GeneratorKind::LocalAdjacency).unwrap().value)
                    .sum();
                assert_eq!(dim_l_formula(&fam).unwrap().total, sum);
                if fam.product_order() <= 16 {
                    assert_eq!(local_metric(&product(&fam).unwrap().graph), sum);
                    *hits.entry(n).or_insert(0) += 1;
                }
            }
        }
    }
    assert!(hits.values().sum::<usize>() > 0);
}

#[test]
fn cycle_members_add_a_quarter_each() {
    let cfg = SolverConfig {
        max_order: 32,
        ..SolverConfig::default()
    };
    let cases: [(Graph, Vec<usize>); 4] = [
        (named(NamedGraph::Path(2)), vec![7, 8]),
        (named(NamedGraph::Path(2)), vec![7, 9]),
        (named(NamedGraph::Complete(3)), vec![7, 7, 8]),
        (named(NamedGraph::Path(3)), vec![12, 9, 7]),
    ];
    for (base, lengths) in cases {
        let members: Vec<Graph> = lengths.iter().map(|&n| named(NamedGraph::Cycle(n))).collect();
        let fam = Family::new(base, members).unwrap();
        let want: usize = lengths.iter().map(|n| n.div_ceil(4)).sum();
        let r = decompose(&fam).unwrap();
        assert_eq!(r.dim_l_terms().total, want);
        let apex: usize = r.members.iter().map(|m| m.dim_l_apex_join).sum();
        assert_eq!(apex, want);
        let brute = dimension_with_cap(&fam, &cfg);
        assert_eq!(brute, want, "{lengths:?}");
    }
    // radius 4 member
    let fam = Family::uniform(named(NamedGraph::Path(2)), &named(NamedGraph::Path(9))).unwrap();
    assert_eq!(dim_l_formula(&fam).unwrap().total, 4);
    assert_eq!(dimension_with_cap(&fam, &cfg), 4);
}

fn dimension_with_cap(fam: &Family, cfg: &SolverConfig) -> usize {
    lexdim_core::dimension_with(&product(fam).unwrap().graph, GeneratorKind::LocalMetric, cfg)
        .unwrap()
        .value
}

#[test]
fn complete_base_uniform_products() {
    for n in 2..=4 {
        for h in ["N1", "N2", "K2", "P3", "K3", "g6:B_"] {
            let h = spec(h);
            let fam = Family::uniform(named(NamedGraph::Complete(n)), &h).unwrap();
            if fam.product_order() > 16 {
                continue;
            }
            let a = dimension(&h, GeneratorKind::LocalAdjacency).unwrap().value;
            let want = n * a + if in_family_g(&h).unwrap() { n - 1 } else { 0 };
            assert_eq!(dim_l_formula(&fam).unwrap().total, want);
            assert_eq!(local_metric(&product(&fam).unwrap().graph), want);
            assert!(equality_condition(&fam).unwrap());
        }
    }
}

fn six_vertex_family() -> Family {
    let k1 = spec("K1");
    let k2 = spec("K2");
    let blown = product(&Family::new(named(NamedGraph::Path(4)), vec![k1.clone(), k2.clone(), k2, k1]).unwrap())
        .unwrap()
        .graph;
    let members = ["N2", "P4", "K2", "K2", "K2", "N2"].iter().map(|s| spec(s)).collect();
    Family::new(blown, members).unwrap()
}

#[test]
fn six_vertex_decomposition() {
    let fam = six_vertex_family();
    let r = decompose(&fam).unwrap();
    assert_eq!(r.v_e.to_vec(), vec![0, 5]);
    assert_eq!(r.x_e.to_vec(), vec![0, 2, 4, 5]);
    assert_eq!(r.i_prime.iter().map(|p| p.to_vec()).collect::<Vec<_>>(), vec![vec![1], vec![3]]);
    assert_eq!(r.r_pairs, vec![(2, 4)]);
    assert_eq!(r.rho.value, 1);
    assert_eq!(r.dim_l_terms().total, 7);
    assert_eq!(local_metric(&product(&fam).unwrap().graph), 7);
}

/// Counting only the non-singleton twin classes in the apex-join version
/// overshoots by one for every vertex of `I` without a twin.
#[test]
fn apex_join_needs_every_twin_class() {
    let r = decompose(&six_vertex_family()).unwrap();
    let apex: usize = r.members.iter().map(|m| m.dim_l_apex_join).sum();
    assert_eq!(r.tau, 2);
    assert_eq!(r.tau_all_classes, 4);
    assert_eq!(apex + r.rho.value - r.tau, 9);
    assert_eq!(r.apex_join_terms().total, 7);

    let fam = Family::uniform(named(NamedGraph::Path(3)), &spec("N1")).unwrap();
    let r = decompose(&fam).unwrap();
    assert_eq!(r.tau, 0);
    assert_eq!(r.apex_join_terms().total, 1);
    assert_eq!(local_metric(&product(&fam).unwrap().graph), 1);
}

#[test]
fn path_base_pairs() {
    let fam = Family::new(named(NamedGraph::Path(4)), ["P3", "P3", "N3", "P3"].iter().map(|s| spec(s)).collect()).unwrap();
    let r = decompose(&fam).unwrap();
    assert!(r.r_pairs.is_empty());
    assert_eq!(r.r_prime_pairs, vec![(0, 1)]);
    assert_eq!((r.dim_l_terms().total, r.adim_l_terms().total), (3, 4));
    assert!(!equality_condition(&fam).unwrap());

    let fam = Family::new(named(NamedGraph::Path(4)), ["N3", "P3", "P3", "N3"].iter().map(|s| spec(s)).collect()).unwrap();
    let r = decompose(&fam).unwrap();
    assert_eq!(r.r_pairs, vec![(1, 2)]);
    assert_eq!((r.rho.value, r.rho_prime.value), (1, 1));
    assert_eq!((r.dim_l_terms().total, r.adim_l_terms().total), (3, 3));
}

/// Triangle 0,1,2 with a pendant 3 on 2; the edgeless members sit on the
/// triangle. The pair (2,3) is separated by 0 and 1 only, whose members are
/// edgeless, yet those vertices are twins, so they still count.
#[test]
fn twin_vertices_with_edgeless_members_separate() {
    let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    let fam = Family::new(paw.clone(), ["N1", "N1", "K2", "K2"].iter().map(|s| spec(s)).collect()).unwrap();
    let r = verify_instance(&fam).unwrap();
    assert_eq!(r.status, Status::Pass, "{:#?}", r.checks);
    let d = r.decomposition.unwrap();
    assert_eq!((d.rho.value, d.rho_prime.value), (0, 0));
    assert!(equality_condition(&fam).unwrap());
    let b = r.brute_force.unwrap();
    assert_eq!((b.dim_l.value, b.adim_l.value), (3, 3));

    // requiring a separator with an edged member would reject this instance
    let sep: Vec<usize> = paw
        .neighbors(2)
        .symmetric_difference(paw.neighbors(3))
        .iter()
        .filter(|&v| v != 2 && v != 3)
        .collect();
    assert_eq!(sep, vec![0, 1]);
    assert!(sep.iter().all(|&v| fam.member(v).edge_count() == 0));
}
