//! True-twin equivalence: `x ~ y` iff `N[x] = N[y]`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    /// Every class, ordered by smallest member.
    pub classes: Vec<VertexSet>,
    /// Classes with at least two members, ordered by smallest member.
    pub nonsingleton: Vec<VertexSet>,
}

impl TwinPartition {
    /// Index into `classes` of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(v))
            .expect("partition covers every vertex")
    }

    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.classes.iter().any(|c| c.contains(u) && c.contains(v))
    }

    /// Union of the non-singleton classes.
    pub fn twin_vertices(&self) -> VertexSet {
        self.nonsingleton
            .iter()
            .fold(VertexSet::EMPTY, |acc, c| acc.union(*c))
    }
}

pub fn true_twin_classes(g: &Graph) -> TwinPartition {
    let mut by_closed: HashMap<VertexSet, VertexSet> = HashMap::new();
    for v in 0..g.order() {
        by_closed
            .entry(g.closed_neighbors(v))
            .or_default()
            .insert(v);
    }
    let mut classes: Vec<VertexSet> = by_closed.into_values().collect();
    classes.sort_by_key(|c| c.first());
    let nonsingleton = classes.iter().copied().filter(|c| c.len() >= 2).collect();
    TwinPartition {
        classes,
        nonsingleton,
    }
}
