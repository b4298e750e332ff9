//! Report types owned by the CLI and the plain-text renderings of every
//! report.

use std::fmt::{self, Write as _};

use anyhow::Result;
use serde::{Deserialize, Serialize};

use lexdim_core::family::{classify_with, FamilyMembership, GWitness};
use lexdim_core::verify::{Status, SweepSummary, VerificationReport};
use lexdim_core::{
    dimension_with, girth, is_connected, radius, to_graph6, true_twin_classes,
    DecompositionReport, Family, GeneratorKind, Girth, Graph, ProductGraph, SolverConfig,
    VertexSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub dim: Option<VertexSet>,
    pub adim: VertexSet,
    pub dim_l: Option<VertexSet>,
    pub adim_l: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub graph: String,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub connected: bool,
    /// `null` for disconnected graphs.
    pub dim: Option<usize>,
    pub adim: usize,
    pub dim_l: Option<usize>,
    pub adim_l: usize,
    pub witnesses: Witnesses,
    pub radius: Option<u32>,
    pub girth: Girth,
    pub twin_classes: Vec<VertexSet>,
    pub in_phi: bool,
    pub in_g: bool,
    pub in_g_prime: bool,
}

impl InvariantsReport {
    pub fn compute(spec: String, g: &Graph, cfg: &SolverConfig) -> Result<Self> {
        let connected = g.order() > 0 && is_connected(g);
        let metric = |kind| -> Result<Option<_>> {
            Ok(if connected {
                Some(dimension_with(g, kind, cfg)?)
            } else {
                None
            })
        };
        let dim = metric(GeneratorKind::Metric)?;
        let dim_l = metric(GeneratorKind::LocalMetric)?;
        let adim = dimension_with(g, GeneratorKind::Adjacency, cfg)?;
        let adim_l = dimension_with(g, GeneratorKind::LocalAdjacency, cfg)?;
        let membership = classify_with(g, cfg)?;
        Ok(InvariantsReport {
            graph: spec,
            graph6: to_graph6(g),
            order: g.order(),
            edges: g.edge_count(),
            connected,
            dim: dim.as_ref().map(|d| d.value),
            adim: adim.value,
            dim_l: dim_l.as_ref().map(|d| d.value),
            adim_l: adim_l.value,
            witnesses: Witnesses {
                dim: dim.map(|d| d.witness),
                adim: adim.witness,
                dim_l: dim_l.map(|d| d.witness),
                adim_l: adim_l.witness,
            },
            radius: if connected { radius(g).ok() } else { None },
            girth: girth(g),
            twin_classes: true_twin_classes(g).classes,
            in_phi: membership.in_phi,
            in_g: membership.in_g,
            in_g_prime: membership.in_g_prime,
        })
    }
}

fn or_dash<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn join_sets(sets: &[VertexSet]) -> String {
    sets.iter().map(VertexSet::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for InvariantsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph     {} (g6:{})", self.graph, self.graph6)?;
        writeln!(f, "order     {}, {} edges", self.order, self.edges)?;
        writeln!(f, "dim       {}", or_dash(&self.dim))?;
        writeln!(f, "adim      {}", self.adim)?;
        writeln!(f, "dim_l     {}", or_dash(&self.dim_l))?;
        writeln!(f, "adim_l    {}", self.adim_l)?;
        writeln!(f, "radius    {}", or_dash(&self.radius))?;
        writeln!(f, "girth     {}", self.girth)?;
        writeln!(f, "twins     {}", join_sets(&self.twin_classes))?;
        writeln!(
            f,
            "edgeless {}  G {}  G' {}",
            self.in_phi, self.in_g, self.in_g_prime
        )
    }
}

pub fn classification_text(m: &FamilyMembership) -> String {
    let mut out = String::new();
    writeln!(out, "edgeless   {}", m.in_phi).unwrap();
    writeln!(out, "G          {}", m.in_g).unwrap();
    writeln!(out, "G'         {}", m.in_g_prime).unwrap();
    match &m.witness {
        GWitness::Dominated(pairs) => {
            for (basis, v) in pairs {
                writeln!(out, "basis {basis} inside N({v})").unwrap();
            }
        }
        GWitness::Violation(basis) => {
            writeln!(out, "basis {basis} lies in no open neighbourhood").unwrap()
        }
        GWitness::NoVertices => writeln!(out, "graph has no vertices").unwrap(),
    }
    out
}

pub struct ProductReport<'a> {
    fam: &'a Family,
    product: &'a ProductGraph,
}

impl<'a> ProductReport<'a> {
    pub fn new(fam: &'a Family, product: &'a ProductGraph) -> Self {
        ProductReport { fam, product }
    }
}

impl fmt::Display for ProductReport<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.product.graph;
        writeln!(f, "order {}, {} edges", g.order(), g.edge_count())?;
        writeln!(f, "graph6 {}", to_graph6(g))?;
        for i in 0..self.fam.base().order() {
            let block = self.product.block(i);
            writeln!(f, "block {i}: {}..{}", block.start, block.end - 1)?;
        }
        for v in 0..g.order() {
            writeln!(f, "{v}: {}", g.neighbors(v))?;
        }
        Ok(())
    }
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return "-".into();
    }
    pairs
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn decomposition_text(r: &DecompositionReport) -> String {
    let mut out = String::new();
    let dim = r.dim_l_terms();
    let adim = r.adim_l_terms();
    writeln!(out, "twin classes  {}", join_sets(&r.twin_classes)).unwrap();
    writeln!(out, "T             {}", r.t).unwrap();
    writeln!(out, "V_E           {}", r.v_e).unwrap();
    writeln!(out, "I             {}", r.i).unwrap();
    writeln!(out, "I_prime       {}", join_sets(&r.i_prime)).unwrap();
    writeln!(out, "X_E           {}", r.x_e).unwrap();
    writeln!(out, "R             {}", pairs_text(&r.r_pairs)).unwrap();
    writeln!(out, "R_prime       {}", pairs_text(&r.r_prime_pairs)).unwrap();
    writeln!(out, "rho           {} {}", r.rho.value, r.rho.witness).unwrap();
    writeln!(out, "rho_prime     {} {}", r.rho_prime.value, r.rho_prime.witness).unwrap();
    writeln!(out, "tau           {}", r.tau).unwrap();
    writeln!(
        out,
        "dim_l         {} = {} + {} + {}",
        dim.total, dim.adim_l_sum, dim.twin_term, dim.separation
    )
    .unwrap();
    writeln!(
        out,
        "adim_l        {} = {} + {} + {}",
        adim.total, adim.adim_l_sum, adim.twin_term, adim.separation
    )
    .unwrap();
    out
}

pub fn verification_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "base     {}", r.instance.base).unwrap();
    writeln!(out, "members  {}", r.instance.members.join(" ")).unwrap();
    if let Some(reason) = &r.skip_reason {
        writeln!(out, "SKIPPED  {reason}").unwrap();
        return out;
    }
    if let (Some(fv), Some(bf)) = (&r.formula, &r.brute_force) {
        writeln!(
            out,
            "dim_l    formula {}  brute force {}",
            fv.dim_l.total, bf.dim_l.value
        )
        .unwrap();
        writeln!(
            out,
            "adim_l   formula {}  brute force {}",
            fv.adim_l.total, bf.adim_l.value
        )
        .unwrap();
        writeln!(out, "via K1   {}", fv.via_k1.total).unwrap();
    }
    for c in &r.checks {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        writeln!(out, "{mark} {}: {}", c.name, c.detail).unwrap();
    }
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIPPED",
    };
    writeln!(out, "{status}").unwrap();
    out
}

pub fn sweep_text(s: &SweepSummary) -> String {
    let mut out = String::new();
    writeln!(out, "pool {}", s.pool.join(" ")).unwrap();
    for t in &s.by_base_order {
        writeln!(
            out,
            "order {}: {} bases, {} instances, {} passed, {} failed, {} skipped",
            t.base_order, t.bases, t.instances, t.passed, t.failed, t.skipped
        )
        .unwrap();
    }
    writeln!(
        out,
        "total {}: {} passed, {} failed, {} skipped",
        s.total, s.passed, s.failed, s.skipped
    )
    .unwrap();
    for f in &s.failures {
        writeln!(out, "\nfailure on base g6:{}", f.base_graph6).unwrap();
        out.push_str(&f.family_file);
        for c in f.report.checks.iter().filter(|c| !c.pass) {
            writeln!(out, "  {}: {}", c.name, c.detail).unwrap();
        }
    }
    out
}
