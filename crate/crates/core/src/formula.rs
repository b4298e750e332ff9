//! Closed forms for the local metric and local adjacency dimensions of
//! `G ∘ ℋ`.
//!
//! Both dimensions decompose as
//!
//! ```text
//! Σ adim_l(H_i)  +  Σ_{I_j ≠ ∅} (|I_j| − 1)  +  ϱ
//! ```
//!
//! where the middle sum runs over the non-singleton true-twin classes `U_j`
//! of the base, `I_j = I ∩ U_j`, and `ϱ` is the size of a smallest subset of
//! `X_E` separating every pair of the relation `ℛ` (under `d_G` for the
//! metric version, `min(d_G, 2)` for the adjacency version).
//!
//! Notation:
//!
//! * `T`: union of the non-singleton twin classes;
//! * `V_E`: base vertices outside `T` whose member graph is edgeless;
//! * `I`: base vertices whose member graph is in `𝒢`;
//! * `I′_j`: `I_j` minus one chosen representative;
//! * `X_E`: `I` minus every `I′_j`;
//! * `ℛ`: adjacent pairs of `X_E` that no vertex outside `V_E` and the pair
//!   itself separates.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::distance::{is_connected, DistanceMatrix};
use crate::error::{Error, Result};
use crate::family::{apex_join, in_family_g_with, in_phi};
use crate::graph::{Graph, VertexSet};
use crate::lexicographic::Family;
use crate::solver::{all_minimum_bases_with, dimension_with, GeneratorKind, SolverConfig};
use crate::twins::{true_twin_classes, TwinPartition};

/// Everything the formulas need to know about one member graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberAnalysis {
    pub adim_l: usize,
    pub in_phi: bool,
    pub in_g: bool,
    pub in_g_prime: bool,
    /// `dim_l(K₁ + H)`.
    pub dim_l_apex_join: usize,
}

pub fn analyze_member(h: &Graph, cfg: &SolverConfig) -> Result<MemberAnalysis> {
    let adim_l = dimension_with(h, GeneratorKind::LocalAdjacency, cfg)?.value;
    let joined = apex_join(h)?;
    let apex = h.order();
    let join_bases = all_minimum_bases_with(&joined, GeneratorKind::LocalMetric, cfg)?;
    Ok(MemberAnalysis {
        adim_l,
        in_phi: in_phi(h),
        in_g: in_family_g_with(h, cfg)?,
        in_g_prime: join_bases.iter().any(|b| b.contains(apex)),
        dim_l_apex_join: join_bases[0].len(),
    })
}

pub fn analyze_members(fam: &Family, cfg: &SolverConfig) -> Result<Vec<MemberAnalysis>> {
    fam.members().iter().map(|h| analyze_member(h, cfg)).collect()
}

/// Which vertex of each non-empty `I_j` stays in `X_E`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum RepresentativeChoice {
    /// The largest-index vertex of `I_j`.
    #[default]
    Largest,
    /// One vertex per non-empty `I_j`, listed in class order.
    Explicit(Vec<usize>),
}

/// A smallest separating set with the lexicographically least witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub value: usize,
    pub witness: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    /// Non-singleton true-twin classes `U_1 .. U_k` of the base.
    #[serde(rename = "U")]
    pub twin_classes: Vec<VertexSet>,
    #[serde(rename = "T")]
    pub t: VertexSet,
    #[serde(rename = "V_E")]
    pub v_e: VertexSet,
    #[serde(rename = "I")]
    pub i: VertexSet,
    /// `I ∩ U_j`, aligned with `twin_classes`.
    #[serde(rename = "I_parts")]
    pub i_parts: Vec<VertexSet>,
    /// Representative kept from each `I_j`; `None` when `I_j` is empty.
    pub representatives: Vec<Option<usize>>,
    /// `I′_j`, aligned with `twin_classes`.
    #[serde(rename = "I_prime")]
    pub i_prime: Vec<VertexSet>,
    #[serde(rename = "X_E")]
    pub x_e: VertexSet,
    #[serde(rename = "R_pairs")]
    pub r_pairs: Vec<(usize, usize)>,
    #[serde(rename = "R_prime_pairs")]
    pub r_prime_pairs: Vec<(usize, usize)>,
    pub rho: Separation,
    pub rho_prime: Separation,
    /// Non-singleton twin classes holding a vertex whose member is in `𝒢′`.
    pub tau: usize,
    /// Twin classes of any size holding a vertex whose member is in `𝒢′`.
    pub tau_all_classes: usize,
    pub members: Vec<MemberAnalysis>,
}

/// One closed-form value with its three terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaTerms {
    pub adim_l_sum: usize,
    pub twin_term: usize,
    pub separation: usize,
    pub total: usize,
}

/// `Σ dim_l(K₁ + H_i) − τ + ϱ`, with `τ` counting every twin class (singletons
/// included) that holds a `𝒢′` member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexJoinTerms {
    pub apex_join_sum: usize,
    pub tau_all_classes: usize,
    pub rho: usize,
    pub total: usize,
}

impl DecompositionReport {
    pub fn adim_l_sum(&self) -> usize {
        self.members.iter().map(|m| m.adim_l).sum()
    }

    pub fn twin_term(&self) -> usize {
        self.i_parts
            .iter()
            .filter(|p| !p.is_empty())
            .map(|p| p.len() - 1)
            .sum()
    }

    pub fn dim_l_terms(&self) -> FormulaTerms {
        let (a, t, r) = (self.adim_l_sum(), self.twin_term(), self.rho.value);
        FormulaTerms {
            adim_l_sum: a,
            twin_term: t,
            separation: r,
            total: a + t + r,
        }
    }

    pub fn adim_l_terms(&self) -> FormulaTerms {
        let (a, t, r) = (self.adim_l_sum(), self.twin_term(), self.rho_prime.value);
        FormulaTerms {
            adim_l_sum: a,
            twin_term: t,
            separation: r,
            total: a + t + r,
        }
    }

    pub fn apex_join_terms(&self) -> ApexJoinTerms {
        let sum: usize = self.members.iter().map(|m| m.dim_l_apex_join).sum();
        ApexJoinTerms {
            apex_join_sum: sum,
            tau_all_classes: self.tau_all_classes,
            rho: self.rho.value,
            total: sum + self.rho.value - self.tau_all_classes,
        }
    }
}

fn check_base(fam: &Family) -> Result<()> {
    let base = fam.base();
    if base.order() < 2 {
        return Err(Error::invalid("the base graph needs at least two vertices"));
    }
    if !is_connected(base) {
        return Err(Error::Disconnected {
            what: "the product decomposition",
        });
    }
    Ok(())
}

/// Adjacent pairs of `x_e` whose distances from every vertex outside
/// `v_e ∪ {u_i, u_j}` agree under `dist`.
fn relation_pairs(
    base: &Graph,
    x_e: VertexSet,
    v_e: VertexSet,
    dist: impl Fn(usize, usize) -> u32,
) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (a, b) in x_e.iter().tuple_combinations() {
        if !base.adjacent(a, b) {
            continue;
        }
        let mut outside = base.vertices().difference(v_e);
        outside.remove(a);
        outside.remove(b);
        if outside.iter().all(|u| dist(u, a) == dist(u, b)) {
            pairs.push((a, b));
        }
    }
    pairs
}

/// Smallest `A ⊆ x_e` such that every pair has a member of `A` at different
/// distances from its two ends. Subsets are tried by size, then
/// lexicographically.
fn min_separating_subset(
    x_e: VertexSet,
    pairs: &[(usize, usize)],
    dist: impl Fn(usize, usize) -> u32,
) -> Separation {
    let pool = x_e.to_vec();
    for k in 0..=pool.len() {
        for combo in pool.iter().copied().combinations(k) {
            let separates = pairs
                .iter()
                .all(|&(a, b)| combo.iter().any(|&z| dist(z, a) != dist(z, b)));
            if separates {
                return Separation {
                    value: k,
                    witness: combo.into_iter().collect(),
                };
            }
        }
    }
    // each pair is separated by either of its own ends, so x_e always works
    unreachable!("X_E separates every pair it contains")
}

fn representatives(
    i_parts: &[VertexSet],
    choice: &RepresentativeChoice,
) -> Result<Vec<Option<usize>>> {
    match choice {
        RepresentativeChoice::Largest => Ok(i_parts.iter().map(|p| p.last()).collect()),
        RepresentativeChoice::Explicit(picks) => {
            let mut picks = picks.iter();
            i_parts
                .iter()
                .map(|p| {
                    if p.is_empty() {
                        return Ok(None);
                    }
                    match picks.next() {
                        Some(&v) if p.contains(v) => Ok(Some(v)),
                        Some(&v) => Err(Error::invalid(format!(
                            "representative {v} is not in I_j = {p}"
                        ))),
                        None => Err(Error::invalid("too few representatives")),
                    }
                })
                .collect()
        }
    }
}

pub fn decompose_with(
    fam: &Family,
    members: &[MemberAnalysis],
    choice: &RepresentativeChoice,
) -> Result<DecompositionReport> {
    check_base(fam)?;
    if members.len() != fam.members().len() {
        return Err(Error::invalid("one analysis per member graph is required"));
    }
    let base = fam.base();
    let tp: TwinPartition = true_twin_classes(base);
    let dm = DistanceMatrix::new(base);

    let t = tp.twin_vertices();
    let v_e: VertexSet = (0..base.order())
        .filter(|&i| !t.contains(i) && members[i].in_phi)
        .collect();
    let i_set: VertexSet = (0..base.order()).filter(|&i| members[i].in_g).collect();

    let i_parts: Vec<VertexSet> = tp.nonsingleton.iter().map(|u| u.intersection(i_set)).collect();
    let reps = representatives(&i_parts, choice)?;
    let i_prime: Vec<VertexSet> = i_parts
        .iter()
        .zip(&reps)
        .map(|(p, r)| {
            let mut s = *p;
            if let Some(r) = r {
                s.remove(*r);
            }
            s
        })
        .collect();
    let x_e = i_prime
        .iter()
        .fold(i_set, |acc, p| acc.difference(*p));

    let full = |a: usize, b: usize| dm.get(a, b);
    let capped = |a: usize, b: usize| dm.get(a, b).min(2);
    let r_pairs = relation_pairs(base, x_e, v_e, full);
    let r_prime_pairs = relation_pairs(base, x_e, v_e, capped);
    let rho = min_separating_subset(x_e, &r_pairs, full);
    let rho_prime = min_separating_subset(x_e, &r_prime_pairs, capped);

    let holds_g_prime = |class: &VertexSet| class.iter().any(|v| members[v].in_g_prime);
    let tau = tp.nonsingleton.iter().filter(|c| holds_g_prime(c)).count();
    let tau_all_classes = tp.classes.iter().filter(|c| holds_g_prime(c)).count();

    Ok(DecompositionReport {
        twin_classes: tp.nonsingleton.clone(),
        t,
        v_e,
        i: i_set,
        i_parts,
        representatives: reps,
        i_prime,
        x_e,
        r_pairs,
        r_prime_pairs,
        rho,
        rho_prime,
        tau,
        tau_all_classes,
        members: members.to_vec(),
    })
}

pub fn decompose_using(fam: &Family, cfg: &SolverConfig) -> Result<DecompositionReport> {
    check_base(fam)?;
    let members = analyze_members(fam, cfg)?;
    decompose_with(fam, &members, &RepresentativeChoice::default())
}

pub fn decompose(fam: &Family) -> Result<DecompositionReport> {
    decompose_using(fam, &SolverConfig::default())
}

/// `dim_l(G ∘ ℋ)` in closed form.
pub fn dim_l_formula(fam: &Family) -> Result<FormulaTerms> {
    Ok(decompose(fam)?.dim_l_terms())
}

/// `adim_l(G ∘ ℋ)` in closed form.
pub fn adim_l_formula(fam: &Family) -> Result<FormulaTerms> {
    Ok(decompose(fam)?.adim_l_terms())
}

/// `dim_l(G ∘ ℋ)` through the local metric dimensions of the apex joins
/// `K₁ + H_i`.
pub fn dim_l_via_k1(fam: &Family) -> Result<ApexJoinTerms> {
    Ok(decompose(fam)?.apex_join_terms())
}

/// Neighbourhood test for `ϱ′ = 0`, read straight off the base graph: every
/// adjacent pair from different twin classes has a member outside `𝒢`, or a
/// third vertex adjacent to exactly one of the two that is not in `V_E`
/// (its member has an edge, or it has a true twin).
pub fn equality_condition_with(fam: &Family, members: &[MemberAnalysis]) -> Result<bool> {
    check_base(fam)?;
    let base = fam.base();
    let tp = true_twin_classes(base);
    let t = tp.twin_vertices();
    let counts = |l: usize| !members[l].in_phi || t.contains(l);
    Ok(base.edges().all(|(a, b)| {
        if tp.same_class(a, b) || !members[a].in_g || !members[b].in_g {
            return true;
        }
        let mut witnesses = base.neighbors(a).symmetric_difference(base.neighbors(b));
        witnesses.remove(a);
        witnesses.remove(b);
        witnesses.iter().any(counts)
    }))
}

pub fn equality_condition(fam: &Family) -> Result<bool> {
    let members = analyze_members(fam, &SolverConfig::default())?;
    equality_condition_with(fam, &members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::NamedGraph;

    fn named(n: NamedGraph) -> Graph {
        n.build().unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn all_edged_members_leave_nothing_to_separate() {
        let fam = Family::new(
            named(NamedGraph::Path(4)),
            vec![
                named(NamedGraph::Complete(2)),
                named(NamedGraph::Path(3)),
                named(NamedGraph::Cycle(5)),
                named(NamedGraph::Complete(3)),
            ],
        )
        .unwrap();
        let r = decompose(&fam).unwrap();
        assert!(r.v_e.is_empty());
        assert_eq!(r.rho.value, 0);
        assert_eq!(r.rho.witness, VertexSet::EMPTY);
    }

    #[test]
    fn complete_base_uniform_family() {
        for n in 2..=4 {
            for (h, in_g) in [
                (named(NamedGraph::Path(4)), true),
                (named(NamedGraph::Complete(3)), true),
                (named(NamedGraph::Cycle(5)), false),
            ] {
                let fam = Family::uniform(named(NamedGraph::Complete(n)), &h).unwrap();
                let r = decompose(&fam).unwrap();
                let adim = r.members[0].adim_l;
                let expected = n * adim + if in_g { n - 1 } else { 0 };
                assert_eq!(r.dim_l_terms().total, expected);
            }
        }
    }

    #[test]
    fn explicit_representatives() {
        let k1 = named(NamedGraph::Complete(1));
        let k2 = named(NamedGraph::Complete(2));
        let base = Family::new(named(NamedGraph::Path(4)), vec![k1.clone(), k2.clone(), k2.clone(), k1])
            .unwrap();
        let base = crate::lexicographic::product(&base).unwrap().graph;
        let n2 = named(NamedGraph::Empty(2));
        let fam = Family::new(
            base,
            vec![n2.clone(), named(NamedGraph::Path(4)), k2.clone(), k2.clone(), k2, n2],
        )
        .unwrap();
        let members = analyze_members(&fam, &SolverConfig::default()).unwrap();
        let r = decompose_with(&fam, &members, &RepresentativeChoice::Explicit(vec![1, 3])).unwrap();
        assert_eq!(r.x_e, set(&[0, 1, 3, 5]));
        assert_eq!(r.rho.value, 1);
        assert!(decompose_with(&fam, &members, &RepresentativeChoice::Explicit(vec![0, 3])).is_err());
        assert!(decompose_with(&fam, &members, &RepresentativeChoice::Explicit(vec![1])).is_err());
    }

    #[test]
    fn base_requirements() {
        let k1 = named(NamedGraph::Complete(1));
        let trivial = Family::new(k1.clone(), vec![k1.clone()]).unwrap();
        assert!(decompose(&trivial).is_err());
        let split = Family::uniform(named(NamedGraph::Empty(2)), &k1).unwrap();
        assert!(matches!(decompose(&split), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn complete_base_satisfies_equality_condition() {
        let fam = Family::uniform(named(NamedGraph::Complete(4)), &named(NamedGraph::Empty(2))).unwrap();
        assert!(equality_condition(&fam).unwrap());
        assert_eq!(decompose(&fam).unwrap().rho_prime.value, 0);
    }
}
