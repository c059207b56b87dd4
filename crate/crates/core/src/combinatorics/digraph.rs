use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex sets are stored as `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

/// A simple directed graph on the vertices `1..=n`.
///
/// A pair may carry both `(u, v)` and `(v, u)`; loops and repeated arcs are
/// rejected on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    out_mask: Vec<u64>,
    in_mask: Vec<u64>,
}

impl Digraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "at most {MAX_VERTICES} vertices are supported, got {n}"
            )));
        }
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has a vertex outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop edge ({u}, {u})")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
        }
        let mut out_mask = vec![0u64; n + 1];
        let mut in_mask = vec![0u64; n + 1];
        for &(u, v) in &seen {
            out_mask[u] |= bit(v);
            in_mask[v] |= bit(u);
        }
        Ok(Digraph {
            n,
            edges: seen.into_iter().collect(),
            out_mask,
            in_mask,
        })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.out_mask[u] & bit(v) != 0
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out_mask[v]
    }

    pub fn in_mask(&self, v: usize) -> u64 {
        self.in_mask[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) || self.has_edge(v, u)
    }

    pub fn underlying(&self) -> Graph {
        let adj = (0..=self.n)
            .map(|v| if v == 0 { 0 } else { self.out_mask[v] | self.in_mask[v] })
            .collect();
        Graph { n: self.n, adj }
    }

    /// True when no pair carries arcs in both directions.
    pub fn is_oriented(&self) -> bool {
        self.bidirected_pair().is_none()
    }

    pub fn bidirected_pair(&self) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| u < v && self.has_edge(v, u))
    }

    pub fn is_acyclic(&self) -> bool {
        topological_order(self.n, |v| self.out_mask[v]).is_some()
    }

    /// Same vertices, every arc reversed.
    pub fn reversed(&self) -> Digraph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (v, u)).collect();
        Digraph::from_edges(self.n, &edges).expect("reversal preserves validity")
    }

    pub fn to_json(&self) -> DigraphJson {
        DigraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Kahn's algorithm on successor masks; `None` if there is a directed cycle.
pub(crate) fn topological_order(n: usize, succ: impl Fn(usize) -> u64) -> Option<Vec<usize>> {
    let mut indeg = vec![0u32; n + 1];
    for v in 1..=n {
        let mut m = succ(v);
        while m != 0 {
            let w = m.trailing_zeros() as usize + 1;
            indeg[w] += 1;
            m &= m - 1;
        }
    }
    let mut ready: Vec<usize> = (1..=n).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        let mut m = succ(v);
        while m != 0 {
            let w = m.trailing_zeros() as usize + 1;
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
            m &= m - 1;
        }
    }
    (order.len() == n).then_some(order)
}

/// On-disk form: `{"n": 3, "edges": [[1, 2], [2, 3]]}` with 1-based vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<DigraphJson> for Digraph {
    type Error = Error;
    fn try_from(j: DigraphJson) -> Result<Self> {
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Digraph::from_edges(j.n, &edges)
    }
}

impl Serialize for Digraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Digraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = DigraphJson::deserialize(d)?;
        Digraph::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// A simple undirected graph on `1..=n`, stored as neighbor masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "at most {MAX_VERTICES} vertices are supported, got {n}"
            )));
        }
        let mut adj = vec![0u64; n + 1];
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::invalid(format!(
                    "edge {{{u}, {v}}} has a vertex outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop edge {{{u}, {u}}}")));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in (u + 1)..=self.n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// The digraph orienting every edge from the smaller label to the larger.
    pub fn natural_orientation(&self) -> Digraph {
        Digraph::from_edges(self.n, &self.edges()).expect("graph edges are valid arcs")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize + 1;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == all
    }
}
