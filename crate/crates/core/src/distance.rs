//! Shortest-path metrics, connectivity, radius and girth.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Distance between vertices in different components. Compares greater than
/// every finite distance.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs shortest-path lengths, computed by one BFS per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut entries = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut entries[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for w in g.neighbors(u) {
                    if row[w] == UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { order: n, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.order + v]
    }

    /// `min(d(x, y), t)`, with unreachable pairs mapped to `t`.
    pub fn truncated(&self, t: u32, x: usize, y: usize) -> Result<u32> {
        if t == 0 {
            return Err(Error::invalid("truncation level must be at least 1"));
        }
        for v in [x, y] {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
        }
        Ok(self.get(x, y).min(t))
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.entries[..self.order].iter().all(|&d| d != UNREACHABLE)
    }

    /// `None` when some vertex cannot reach another.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let row = &self.entries[v * self.order..(v + 1) * self.order];
        let m = row.iter().copied().max().unwrap_or(0);
        (m != UNREACHABLE).then_some(m)
    }

    pub fn diameter(&self) -> Option<u32> {
        (0..self.order)
            .map(|v| self.eccentricity(v))
            .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = self.entries.chunks(self.order.max(1)).collect();
        f.debug_struct("DistanceMatrix")
            .field("order", &self.order)
            .field("rows", &rows)
            .finish()
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

/// Connected components, each listed once, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for root in 0..g.order() {
        if seen.contains(root) {
            continue;
        }
        let mut comp = VertexSet::singleton(root);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(g.neighbors(u));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

pub fn radius(g: &Graph) -> Result<u32> {
    if g.order() == 0 || !is_connected(g) {
        return Err(Error::Disconnected { what: "radius" });
    }
    let dm = DistanceMatrix::new(g);
    Ok((0..g.order())
        .filter_map(|v| dm.eccentricity(v))
        .min()
        .expect("connected graph has finite eccentricities"))
}

/// Length of a shortest cycle; acyclic graphs have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

// A number, or the string "inf".
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => serializer.serialize_u32(*g),
            Girth::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Finite(u32),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Finite(g) => Ok(Girth::Finite(g)),
            Repr::Text(s) if s == "inf" => Ok(Girth::Infinite),
            Repr::Text(s) => Err(serde::de::Error::custom(format!("invalid girth {s:?}"))),
        }
    }
}

/// BFS from every vertex; a non-tree edge `uw` seen from root `r` closes a
/// closed walk of length `d(r,u) + d(r,w) + 1` through `r`, and the minimum
/// over all roots is the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = u32::MAX;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    for root in 0..n {
        dist.fill(UNREACHABLE);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}
