//! Standard labeled graph families and the textual graph specs used by
//! family files and the command line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// `P_n`, `C_n`, `K_n`, `N_n` and `K_{r,s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
}

impl NamedGraph {
    /// Paths and cycles use consecutive-index adjacency; `K_{r,s}` puts the
    /// `r` side on `0..r`.
    pub fn build(self) -> Result<Graph> {
        let bad = |reason: &str| Error::GraphSpec {
            spec: self.to_string(),
            reason: reason.to_string(),
        };
        match self {
            NamedGraph::Path(n) => {
                if n == 0 {
                    return Err(bad("paths need at least one vertex"));
                }
                let mut g = Graph::empty(n)?;
                for v in 1..n {
                    g.add_edge(v - 1, v);
                }
                Ok(g)
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return Err(bad("cycles need at least three vertices"));
                }
                let mut g = NamedGraph::Path(n).build()?;
                g.add_edge(n - 1, 0);
                Ok(g)
            }
            NamedGraph::Complete(n) => {
                if n == 0 {
                    return Err(bad("complete graphs need at least one vertex"));
                }
                let mut g = Graph::empty(n)?;
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge(u, v);
                    }
                }
                Ok(g)
            }
            NamedGraph::Empty(n) => {
                if n == 0 {
                    return Err(bad("empty graphs need at least one vertex"));
                }
                Graph::empty(n)
            }
            NamedGraph::CompleteBipartite(r, s) => {
                if r == 0 || s == 0 {
                    return Err(bad("both sides need at least one vertex"));
                }
                let mut g = Graph::empty(r + s)?;
                for u in 0..r {
                    for v in r..r + s {
                        g.add_edge(u, v);
                    }
                }
                Ok(g)
            }
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::Empty(n) => write!(f, "N{n}"),
            NamedGraph::CompleteBipartite(r, s) => write!(f, "K{r},{s}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::GraphSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(|| bad("empty token"))?;
        let rest = chars.as_str();
        let num = |t: &str| -> Result<usize> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected a decimal size"));
            }
            t.parse().map_err(|_| bad("size out of range"))
        };
        match kind {
            'P' => Ok(NamedGraph::Path(num(rest)?)),
            'C' => Ok(NamedGraph::Cycle(num(rest)?)),
            'N' => Ok(NamedGraph::Empty(num(rest)?)),
            'K' => match rest.split_once(',') {
                Some((r, s)) => Ok(NamedGraph::CompleteBipartite(num(r)?, num(s)?)),
                None => Ok(NamedGraph::Complete(num(rest)?)),
            },
            _ => Err(bad("unknown family (expected P, C, K, N or Kr,s)")),
        }
    }
}

/// A graph given either by a named-family token or as `g6:<graph6>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Named(NamedGraph),
    Graph6(String),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Named(n) => n.build(),
            GraphSpec::Graph6(text) => graph6::from_graph6(text),
        }
    }

    /// Spec text for `g`, always in the `g6:` form.
    pub fn of_graph(g: &Graph) -> GraphSpec {
        GraphSpec::Graph6(graph6::to_graph6(g))
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Named(n) => n.fmt(f),
            GraphSpec::Graph6(t) => write!(f, "g6:{t}"),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix("g6:") {
            Some(text) => {
                // validate eagerly so errors surface where the spec is read
                graph6::from_graph6(text)?;
                Ok(GraphSpec::Graph6(text.to_string()))
            }
            None => {
                let named: NamedGraph = s.parse()?;
                named.build()?;
                Ok(GraphSpec::Named(named))
            }
        }
    }
}

/// Parses a spec token straight to a graph.
pub fn parse_graph(spec: &str) -> Result<Graph> {
    spec.parse::<GraphSpec>()?.build()
}
