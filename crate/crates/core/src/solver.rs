//! Generator predicates and exact minimum-generator search.
//!
//! A set `S` generates a graph under some (possibly truncated) distance when
//! every pair that must be separated has a vertex of `S` at different
//! distances from its two ends. For each such pair we precompute its
//! *distinguisher mask*: the vertices that separate it, both endpoints
//! included. `S` is then a generator exactly when it meets every mask, so the
//! dimension is a minimum hitting set over the masks.
//!
//! The search walks subsets by increasing cardinality and, within one
//! cardinality, in lexicographic order of their sorted members, so the first
//! hit is the lexicographically least minimum generator.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::distance::{components, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// Separate every pair under `d_G`.
    Metric,
    /// Separate every pair under `min(d_G, 2)`.
    Adjacency,
    /// Separate adjacent pairs under `d_G`.
    LocalMetric,
    /// Separate adjacent pairs under `min(d_G, 2)`.
    LocalAdjacency,
    /// Separate every pair under `min(d_G, t)`; cross-component pairs sit at `t`.
    Truncated(u32),
}

impl GeneratorKind {
    pub fn is_local(self) -> bool {
        matches!(self, GeneratorKind::LocalMetric | GeneratorKind::LocalAdjacency)
    }

    fn requires_connected(self) -> bool {
        matches!(self, GeneratorKind::Metric | GeneratorKind::LocalMetric)
    }

    fn truncation(self) -> Option<u32> {
        match self {
            GeneratorKind::Metric | GeneratorKind::LocalMetric => None,
            GeneratorKind::Adjacency | GeneratorKind::LocalAdjacency => Some(2),
            GeneratorKind::Truncated(t) => Some(t),
        }
    }

    fn name(self) -> &'static str {
        match self {
            GeneratorKind::Metric => "metric generators",
            GeneratorKind::Adjacency => "adjacency generators",
            GeneratorKind::LocalMetric => "local metric generators",
            GeneratorKind::LocalAdjacency => "local adjacency generators",
            GeneratorKind::Truncated(_) => "truncated-metric generators",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest graph order the exhaustive search will accept.
    pub max_order: usize,
    /// Largest number of minimum bases `all_minimum_bases` will materialize.
    pub max_bases: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_order: 16,
            max_bases: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionResult {
    pub value: usize,
    /// Lexicographically least minimum generator.
    pub witness: VertexSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_bases: Option<Vec<VertexSet>>,
}

/// Distance under `kind`, with unreachable pairs mapped to the truncation.
struct Metric<'a> {
    dm: &'a DistanceMatrix,
    cap: Option<u32>,
}

impl Metric<'_> {
    fn dist(&self, x: usize, y: usize) -> u32 {
        match self.cap {
            Some(t) => self.dm.get(x, y).min(t),
            None => self.dm.get(x, y),
        }
    }
}

fn validate(g: &Graph, kind: GeneratorKind) -> Result<()> {
    if let GeneratorKind::Truncated(0) = kind {
        return Err(Error::invalid("truncation level must be at least 1"));
    }
    if kind.requires_connected() && components(g).len() > 1 {
        return Err(Error::Disconnected { what: kind.name() });
    }
    Ok(())
}

/// Pairs `(x, y)`, `x < y`, that a generator of `kind` must separate.
fn required_pairs(g: &Graph, kind: GeneratorKind) -> Vec<(usize, usize)> {
    if kind.is_local() {
        g.edges().collect()
    } else {
        let n = g.order();
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
    }
}

/// Checks `s` against the definition directly, pair by pair.
pub fn is_generator(g: &Graph, s: VertexSet, kind: GeneratorKind) -> Result<bool> {
    validate(g, kind)?;
    if !s.is_subset(g.vertices()) {
        let v = s.difference(g.vertices()).first().unwrap();
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let dm = DistanceMatrix::new(g);
    let metric = Metric {
        dm: &dm,
        cap: kind.truncation(),
    };
    Ok(required_pairs(g, kind)
        .into_iter()
        .filter(|&(x, y)| !s.contains(x) && !s.contains(y))
        .all(|(x, y)| s.iter().any(|z| metric.dist(z, x) != metric.dist(z, y))))
}

/// Inclusion-minimal distinguisher masks for `kind`.
fn distinguisher_masks(g: &Graph, kind: GeneratorKind) -> Vec<u64> {
    let dm = DistanceMatrix::new(g);
    let metric = Metric {
        dm: &dm,
        cap: kind.truncation(),
    };
    let mut masks: Vec<u64> = required_pairs(g, kind)
        .into_iter()
        .map(|(x, y)| {
            (0..g.order())
                .filter(|&z| metric.dist(z, x) != metric.dist(z, y))
                .fold(0u64, |m, z| m | 1 << z)
        })
        .collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut minimal: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        // a mask containing a kept one is hit whenever the kept one is
        if !minimal.iter().any(|&k| k & !m == 0) {
            minimal.push(m);
        }
    }
    minimal
}

/// Lexicographic search for hitting sets of a fixed cardinality.
struct HittingSearch<'a> {
    order: usize,
    masks: &'a [u64],
}

impl HittingSearch<'_> {
    /// Visits every `k`-subset of `0..order` meeting all masks, in
    /// lexicographic order, until `visit` breaks.
    fn for_each(&self, k: usize, visit: &mut impl FnMut(u64) -> ControlFlow<()>) -> ControlFlow<()> {
        if k > self.order {
            return ControlFlow::Continue(());
        }
        self.descend(0, k, 0, visit)
    }

    fn descend(
        &self,
        start: usize,
        remaining: usize,
        chosen: u64,
        visit: &mut impl FnMut(u64) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let reachable = if start >= 64 { 0 } else { !0u64 << start };
        // Unhit masks restricted to the vertices still available. Any of them
        // being empty is a dead end; pairwise-disjoint ones each need their
        // own vertex.
        let mut used = 0u64;
        let mut disjoint = 0usize;
        let mut all_hit = true;
        for &m in self.masks {
            if m & chosen != 0 {
                continue;
            }
            all_hit = false;
            let open = m & reachable;
            if open == 0 {
                return ControlFlow::Continue(());
            }
            if open & used == 0 {
                used |= open;
                disjoint += 1;
                if disjoint > remaining {
                    return ControlFlow::Continue(());
                }
            }
        }
        if remaining == 0 {
            return if all_hit {
                visit(chosen)
            } else {
                ControlFlow::Continue(())
            };
        }
        for v in start..=self.order - remaining {
            self.descend(v + 1, remaining - 1, chosen | 1 << v, visit)?;
        }
        ControlFlow::Continue(())
    }
}

fn check_cap(g: &Graph, cfg: &SolverConfig) -> Result<()> {
    if g.order() > cfg.max_order {
        return Err(Error::OverCap {
            what: "exhaustive dimension search",
            order: g.order(),
            cap: cfg.max_order,
        });
    }
    Ok(())
}

pub fn dimension_with(g: &Graph, kind: GeneratorKind, cfg: &SolverConfig) -> Result<DimensionResult> {
    check_cap(g, cfg)?;
    validate(g, kind)?;
    let masks = distinguisher_masks(g, kind);
    let search = HittingSearch {
        order: g.order(),
        masks: &masks,
    };
    for k in 0..=g.order() {
        let mut found = None;
        let _ = search.for_each(k, &mut |s| {
            found = Some(s);
            ControlFlow::Break(())
        });
        if let Some(s) = found {
            return Ok(DimensionResult {
                value: k,
                witness: VertexSet::from_bits(s),
                all_bases: None,
            });
        }
    }
    unreachable!("the whole vertex set meets every distinguisher mask")
}

pub fn dimension(g: &Graph, kind: GeneratorKind) -> Result<DimensionResult> {
    dimension_with(g, kind, &SolverConfig::default())
}

/// Every minimum generator of `kind`, in lexicographic order.
pub fn all_minimum_bases_with(
    g: &Graph,
    kind: GeneratorKind,
    cfg: &SolverConfig,
) -> Result<Vec<VertexSet>> {
    let dim = dimension_with(g, kind, cfg)?;
    let masks = distinguisher_masks(g, kind);
    let search = HittingSearch {
        order: g.order(),
        masks: &masks,
    };
    let mut bases = Vec::new();
    let mut overflow = false;
    let _ = search.for_each(dim.value, &mut |s| {
        if bases.len() == cfg.max_bases {
            overflow = true;
            return ControlFlow::Break(());
        }
        bases.push(VertexSet::from_bits(s));
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::TooManyBases {
            limit: cfg.max_bases,
        });
    }
    Ok(bases)
}

pub fn all_minimum_bases(g: &Graph, kind: GeneratorKind) -> Result<Vec<VertexSet>> {
    all_minimum_bases_with(g, kind, &SolverConfig::default())
}

/// `dimension` with the bases filled in.
pub fn dimension_with_bases(
    g: &Graph,
    kind: GeneratorKind,
    cfg: &SolverConfig,
) -> Result<DimensionResult> {
    let bases = all_minimum_bases_with(g, kind, cfg)?;
    Ok(DimensionResult {
        value: bases[0].len(),
        witness: bases[0],
        all_bases: Some(bases),
    })
}

/// Metric dimension of `(V, min(d_G, t))`.
pub fn dim_t(g: &Graph, t: u32) -> Result<DimensionResult> {
    dimension(g, GeneratorKind::Truncated(t))
}
