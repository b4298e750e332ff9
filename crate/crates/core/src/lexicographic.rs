//! Lexicographic products `G ∘ ℋ` over an ordered family of member graphs.
//!
//! Product vertices are numbered block by block: the copy of `H_i` occupies
//! the contiguous ids `offset(i) .. offset(i) + |H_i|`.

use std::fmt::Write as _;

use crate::distance::{is_connected, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::named::{GraphSpec, NamedGraph};

/// A base graph with one member graph per base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    base: Graph,
    members: Vec<Graph>,
}

impl Family {
    pub fn new(base: Graph, members: Vec<Graph>) -> Result<Self> {
        if members.len() != base.order() {
            return Err(Error::invalid(format!(
                "base has order {} but {} member graphs were given",
                base.order(),
                members.len()
            )));
        }
        if let Some(i) = members.iter().position(|h| h.order() == 0) {
            return Err(Error::invalid(format!("member {i} has no vertices")));
        }
        Ok(Family { base, members })
    }

    /// The standard product `G ∘ H`: every member is a copy of `h`.
    pub fn uniform(base: Graph, h: &Graph) -> Result<Self> {
        let members = vec![h.clone(); base.order()];
        Family::new(base, members)
    }

    /// `G_1 + G_2 + ... + G_k` realized as `K_k ∘ {G_1, .., G_k}`.
    pub fn join_of(graphs: Vec<Graph>) -> Result<Self> {
        let base = NamedGraph::Complete(graphs.len()).build()?;
        Family::new(base, graphs)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Graph {
        &self.members[i]
    }

    pub fn product_order(&self) -> usize {
        self.members.iter().map(Graph::order).sum()
    }

    /// The family in the text format read by [`parse_family_file`], every
    /// graph written as `g6:`.
    pub fn to_family_file(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", GraphSpec::of_graph(&self.base)).unwrap();
        for h in &self.members {
            writeln!(out, "{}", GraphSpec::of_graph(h)).unwrap();
        }
        out
    }
}

/// Reads a family file: the first spec line is the base graph, each further
/// spec line one member in base-vertex order. `#` starts a comment and blank
/// lines are skipped.
pub fn parse_family_file(text: &str) -> Result<Family> {
    let mut specs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let graph = line
            .parse::<GraphSpec>()
            .and_then(|s| s.build())
            .map_err(|e| Error::FamilyFile {
                line: idx + 1,
                reason: e.to_string(),
            })?;
        specs.push((idx + 1, graph));
    }
    let mut specs = specs.into_iter();
    let Some((_, base)) = specs.next() else {
        return Err(Error::FamilyFile {
            line: 0,
            reason: "no base graph".into(),
        });
    };
    let members: Vec<(usize, Graph)> = specs.collect();
    if members.len() != base.order() {
        let line = members.last().map_or(0, |m| m.0);
        return Err(Error::FamilyFile {
            line,
            reason: format!(
                "base graph has order {} but {} member specs follow",
                base.order(),
                members.len()
            ),
        });
    }
    Family::new(base, members.into_iter().map(|(_, g)| g).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    offsets: Vec<usize>,
}

impl ProductGraph {
    /// Product id of `(u_i, v_a)`.
    pub fn index(&self, i: usize, a: usize) -> usize {
        debug_assert!(self.offsets[i] + a < self.offsets[i + 1]);
        self.offsets[i] + a
    }

    /// `(i, a)` for a product id.
    pub fn locate(&self, id: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= id) - 1;
        (i, id - self.offsets[i])
    }

    /// Product ids of the copy of `H_i`.
    pub fn block(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }
}

pub fn product_with_cap(fam: &Family, cap: usize) -> Result<ProductGraph> {
    let order = fam.product_order();
    let cap = cap.min(MAX_ORDER);
    if order > cap {
        return Err(Error::OverCap {
            what: "lexicographic product",
            order,
            cap,
        });
    }
    let mut offsets = Vec::with_capacity(fam.members.len() + 1);
    offsets.push(0);
    for h in &fam.members {
        offsets.push(offsets.last().unwrap() + h.order());
    }
    let mut graph = Graph::empty(order)?;
    for (i, h) in fam.members.iter().enumerate() {
        for (a, b) in h.edges() {
            graph.add_edge(offsets[i] + a, offsets[i] + b);
        }
    }
    for (i, j) in fam.base.edges() {
        for x in offsets[i]..offsets[i + 1] {
            for y in offsets[j]..offsets[j + 1] {
                graph.add_edge(x, y);
            }
        }
    }
    Ok(ProductGraph { graph, offsets })
}

pub fn product(fam: &Family) -> Result<ProductGraph> {
    product_with_cap(fam, MAX_ORDER)
}

/// Product distances from the factors alone: base distance across blocks,
/// `min(d_{H_i}, 2)` inside block `i`.
pub struct ProductDistances<'a> {
    fam: &'a Family,
    base: DistanceMatrix,
    members: Vec<DistanceMatrix>,
}

impl<'a> ProductDistances<'a> {
    pub fn new(fam: &'a Family) -> Result<Self> {
        if !is_connected(&fam.base) {
            return Err(Error::Disconnected {
                what: "product distances",
            });
        }
        Ok(ProductDistances {
            fam,
            base: DistanceMatrix::new(&fam.base),
            members: fam.members.iter().map(DistanceMatrix::new).collect(),
        })
    }

    pub fn distance(&self, (i, b): (usize, usize), (j, d): (usize, usize)) -> Result<u32> {
        let n = self.fam.base.order();
        for (k, v) in [(i, b), (j, d)] {
            if k >= n {
                return Err(Error::VertexOutOfRange { vertex: k, order: n });
            }
            let order = self.fam.members[k].order();
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
        }
        if i != j {
            Ok(self.base.get(i, j))
        } else {
            self.members[i].truncated(2, b, d)
        }
    }
}

pub fn product_distance(fam: &Family, x: (usize, usize), y: (usize, usize)) -> Result<u32> {
    ProductDistances::new(fam)?.distance(x, y)
}
