use super::digraph::{bit, topological_order};
use super::{Digraph, Graph};
use crate::error::{Error, Result};

/// Orientation sweeps go through all `2^|E|` choices.
pub const MAX_ORIENTATION_EDGES: usize = 24;

/// One acyclic orientation of an undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationRecord {
    pub base: Graph,
    /// One arc per base edge, in the base graph's edge order.
    pub arcs: Vec<(usize, usize)>,
    /// Vertices with no outgoing arc, ascending.
    pub sinks: Vec<usize>,
    /// Number of reference arcs whose direction this orientation shares.
    pub asc: usize,
}

impl OrientationRecord {
    pub fn sink_count(&self) -> usize {
        self.sinks.len()
    }

    fn successor_masks(&self) -> Vec<u64> {
        let mut succ = vec![0u64; self.base.n() + 1];
        for &(u, v) in &self.arcs {
            succ[u] |= bit(v);
        }
        succ
    }

    pub fn is_acyclic(&self) -> bool {
        let succ = self.successor_masks();
        topological_order(self.base.n(), |v| succ[v]).is_some()
    }

    pub fn recompute_sinks(&self) -> Vec<usize> {
        let succ = self.successor_masks();
        (1..=self.base.n()).filter(|&v| succ[v] == 0).collect()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }
}

/// Every acyclic orientation of `g`, with sinks and ascents measured against
/// `reference`, whose underlying graph must be `g`.
///
/// Records come out in the order of the orientation bitmask: bit `i` set
/// means edge `i = (u, v)`, `u < v`, is oriented `v → u`.
pub fn acyclic_orientations(g: &Graph, reference: &Digraph) -> Result<Vec<OrientationRecord>> {
    if reference.underlying() != *g {
        return Err(Error::invalid(
            "reference digraph does not have the given graph as its underlying graph",
        ));
    }
    let edges = g.edges();
    if edges.len() > MAX_ORIENTATION_EDGES {
        return Err(Error::invalid(format!(
            "{} edges exceed the orientation sweep limit of {MAX_ORIENTATION_EDGES}",
            edges.len()
        )));
    }
    let n = g.n();
    let mut out = Vec::new();
    let mut succ = vec![0u64; n + 1];
    for mask in 0u64..(1u64 << edges.len()) {
        succ.iter_mut().for_each(|m| *m = 0);
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        for &(u, v) in &arcs {
            succ[u] |= bit(v);
        }
        if topological_order(n, |v| succ[v]).is_none() {
            continue;
        }
        let sinks = (1..=n).filter(|&v| succ[v] == 0).collect();
        let asc = reference
            .edges()
            .iter()
            .filter(|&&(u, v)| succ[u] & bit(v) != 0)
            .count();
        out.push(OrientationRecord {
            base: g.clone(),
            arcs,
            sinks,
            asc,
        });
    }
    Ok(out)
}
