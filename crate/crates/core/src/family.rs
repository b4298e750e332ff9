//! Membership in the families used by the product formulas:
//!
//! * `Φ`: edgeless graphs;
//! * `𝒢`: graphs where every local adjacency basis `B` lies inside some
//!   open neighbourhood `N(v)`;
//! * `𝒢′`: graphs `H` such that some local metric basis of `K₁ + H`
//!   contains the apex.

use serde::{Deserialize, Serialize};

use crate::distance::{components, radius};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::solver::{all_minimum_bases_with, GeneratorKind, SolverConfig};

/// Outcome of the `𝒢` test with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GWitness {
    /// Each local adjacency basis paired with the smallest vertex whose open
    /// neighbourhood contains it.
    Dominated(Vec<(VertexSet, usize)>),
    /// A local adjacency basis no open neighbourhood contains.
    Violation(VertexSet),
    /// The order-0 graph, which is never a member.
    NoVertices,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMembership {
    pub in_phi: bool,
    pub in_g: bool,
    pub in_g_prime: bool,
    pub witness: GWitness,
}

pub fn in_phi(h: &Graph) -> bool {
    h.is_edgeless()
}

/// Smallest vertex `v` with `basis ⊆ N(v)`.
fn dominating_vertex(h: &Graph, basis: VertexSet) -> Option<usize> {
    (0..h.order()).find(|&v| basis.is_subset(h.neighbors(v)))
}

pub fn g_witness_with(h: &Graph, cfg: &SolverConfig) -> Result<GWitness> {
    if h.order() == 0 {
        return Ok(GWitness::NoVertices);
    }
    let bases = all_minimum_bases_with(h, GeneratorKind::LocalAdjacency, cfg)?;
    let mut dominated = Vec::with_capacity(bases.len());
    for b in bases {
        match dominating_vertex(h, b) {
            Some(v) => dominated.push((b, v)),
            None => return Ok(GWitness::Violation(b)),
        }
    }
    Ok(GWitness::Dominated(dominated))
}

pub fn in_family_g_with(h: &Graph, cfg: &SolverConfig) -> Result<bool> {
    Ok(matches!(g_witness_with(h, cfg)?, GWitness::Dominated(_)))
}

pub fn in_family_g(h: &Graph) -> Result<bool> {
    in_family_g_with(h, &SolverConfig::default())
}

/// `K₁ + h` with the apex labeled last.
pub fn apex_join(h: &Graph) -> Result<Graph> {
    h.join(&Graph::empty(1)?)
}

pub fn in_family_g_prime_with(h: &Graph, cfg: &SolverConfig) -> Result<bool> {
    if h.order() == 0 {
        return Ok(false);
    }
    let joined = apex_join(h)?;
    let apex = h.order();
    let bases = all_minimum_bases_with(&joined, GeneratorKind::LocalMetric, cfg)?;
    Ok(bases.iter().any(|b| b.contains(apex)))
}

pub fn in_family_g_prime(h: &Graph) -> Result<bool> {
    in_family_g_prime_with(h, &SolverConfig::default())
}

pub fn classify_with(h: &Graph, cfg: &SolverConfig) -> Result<FamilyMembership> {
    let witness = g_witness_with(h, cfg)?;
    Ok(FamilyMembership {
        in_phi: h.order() > 0 && in_phi(h),
        in_g: matches!(witness, GWitness::Dominated(_)),
        in_g_prime: in_family_g_prime_with(h, cfg)?,
        witness,
    })
}

pub fn classify(h: &Graph) -> Result<FamilyMembership> {
    classify_with(h, &SolverConfig::default())
}

/// The structural shape whose graphs are exactly those of local adjacency
/// dimension one: non-empty, bipartite, one component with an edge, and that
/// component of radius at most two.
pub fn unit_adim_l_criterion(h: &Graph) -> bool {
    if h.is_edgeless() || !h.is_bipartite() {
        return false;
    }
    let mut nontrivial = components(h).into_iter().filter(|c| c.len() >= 2);
    let Some(core) = nontrivial.next() else {
        return false;
    };
    if nontrivial.next().is_some() {
        return false;
    }
    radius(&h.induced(core)).is_ok_and(|r| r <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraph;
    use crate::solver::dimension;

    fn named(n: NamedGraph) -> Graph {
        n.build().unwrap()
    }

    fn k1_k2() -> Graph {
        named(NamedGraph::Empty(1))
            .disjoint_union(&named(NamedGraph::Complete(2)))
            .unwrap()
    }

    #[test]
    fn phi_membership() {
        assert!(in_phi(&named(NamedGraph::Empty(5))));
        assert!(!in_phi(&named(NamedGraph::Complete(2))));
        assert!(in_phi(&named(NamedGraph::Complete(1))));
    }

    #[test]
    fn g_examples() {
        for r in 1..=8 {
            assert!(in_family_g(&named(NamedGraph::Empty(r))).unwrap());
        }
        assert!(in_family_g(&k1_k2()).unwrap());
        assert!(!in_family_g(&Graph::empty(0).unwrap()).unwrap());

        let p4 = named(NamedGraph::Path(4));
        let w = g_witness_with(&p4, &SolverConfig::default()).unwrap();
        assert_eq!(
            w,
            GWitness::Dominated(vec![
                ([1].into_iter().collect(), 0),
                ([2].into_iter().collect(), 1),
            ])
        );
    }

    #[test]
    fn c7_is_not_in_g() {
        // adim_l(C7) = 2 and no two vertices of C7 share a neighbour while
        // also separating every edge.
        let c7 = named(NamedGraph::Cycle(7));
        assert!(matches!(
            g_witness_with(&c7, &SolverConfig::default()).unwrap(),
            GWitness::Violation(_)
        ));
    }

    #[test]
    fn g_prime_examples() {
        assert!(in_family_g_prime(&named(NamedGraph::Path(4))).unwrap());
        for t in 2..=6 {
            let k = named(NamedGraph::Complete(t));
            assert!(in_family_g(&k).unwrap());
            assert!(in_family_g_prime(&k).unwrap());
        }
        // C7 plus a pendant: connected, not a tree, girth 7
        let mut g = named(NamedGraph::Cycle(7))
            .disjoint_union(&named(NamedGraph::Complete(1)))
            .unwrap();
        g.add_edge(0, 7);
        assert!(!in_family_g(&g).unwrap());
        assert!(!in_family_g_prime(&g).unwrap());
    }

    #[test]
    fn classification_bundle() {
        let m = classify(&named(NamedGraph::Empty(3))).unwrap();
        assert!(m.in_phi && m.in_g && m.in_g_prime);
        let m = classify(&named(NamedGraph::Cycle(7))).unwrap();
        assert!(!m.in_phi && !m.in_g && !m.in_g_prime);
    }

    #[test]
    fn unit_criterion_examples() {
        let p4 = named(NamedGraph::Path(4));
        assert!(unit_adim_l_criterion(&p4));
        assert_eq!(dimension(&p4, GeneratorKind::LocalAdjacency).unwrap().value, 1);

        let c6 = named(NamedGraph::Cycle(6));
        assert!(!unit_adim_l_criterion(&c6));
        assert_eq!(dimension(&c6, GeneratorKind::LocalAdjacency).unwrap().value, 2);

        assert!(!unit_adim_l_criterion(&named(NamedGraph::Complete(3))));
        assert!(!unit_adim_l_criterion(&named(NamedGraph::Empty(3))));
        assert!(unit_adim_l_criterion(&k1_k2()));
        let two_edges = named(NamedGraph::Complete(2))
            .disjoint_union(&named(NamedGraph::Complete(2)))
            .unwrap();
        assert!(!unit_adim_l_criterion(&two_edges));
    }
}
