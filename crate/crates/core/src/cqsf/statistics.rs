use crate::combinatorics::{Digraph, Graph, Permutation};
use crate::error::{Error, Result};

/// Number of arcs `(i, j)` with `j` placed before `i` in `σ`.
pub fn inv_digraph(d: &Digraph, sigma: &Permutation) -> Result<usize> {
    if sigma.n() != d.n() {
        return Err(Error::invalid(format!(
            "permutation of size {} for a digraph on {} vertices",
            sigma.n(),
            d.n()
        )));
    }
    Ok(d.edges()
        .iter()
        .filter(|&&(i, j)| sigma.position(j) < sigma.position(i))
        .count())
}

/// Graph ranks and `G`-descents of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GDescentData {
    pub sigma: Permutation,
    /// `ranks[v]` for each vertex `v`; index 0 is unused.
    pub ranks: Vec<usize>,
    /// Positions `i ∈ [n-1]` with a `G`-descent between `σ_i` and `σ_{i+1}`.
    pub descents: Vec<usize>,
}

impl GDescentData {
    /// Vertices of the given rank, ascending.
    pub fn rank_class(&self, rank: usize) -> Vec<usize> {
        (1..self.ranks.len()).filter(|&v| self.ranks[v] == rank).collect()
    }
}

/// Ranks along the word: `rank(σ_j) = 1 + max{rank(σ_i) : i < j, σ_i ~ σ_j}`.
pub(crate) fn word_ranks(adj: impl Fn(usize) -> u64, word: &[usize], ranks: &mut [usize]) {
    for j in 0..word.len() {
        let nbrs = adj(word[j]);
        let mut r = 0;
        for i in 0..j {
            if nbrs >> (word[i] - 1) & 1 == 1 && ranks[i] > r {
                r = ranks[i];
            }
        }
        ranks[j] = r + 1;
    }
}

/// Bit `i - 1` set when there is a `G`-descent at position `i`.
pub(crate) fn descent_mask(word: &[usize], ranks: &[usize]) -> u64 {
    let mut mask = 0u64;
    for i in 0..word.len().saturating_sub(1) {
        if ranks[i] > ranks[i + 1] || (ranks[i] == ranks[i + 1] && word[i] > word[i + 1]) {
            mask |= 1 << i;
        }
    }
    mask
}

pub fn g_descent_set(g: &Graph, sigma: &Permutation) -> Result<GDescentData> {
    if sigma.n() != g.n() {
        return Err(Error::invalid(format!(
            "permutation of size {} for a graph on {} vertices",
            sigma.n(),
            g.n()
        )));
    }
    let word = sigma.word();
    let mut by_position = vec![0; word.len()];
    word_ranks(|v| g.neighbors(v), word, &mut by_position);
    let mask = descent_mask(word, &by_position);
    let mut ranks = vec![0; word.len() + 1];
    for (i, &v) in word.iter().enumerate() {
        ranks[v] = by_position[i];
    }
    Ok(GDescentData {
        sigma: sigma.clone(),
        ranks,
        descents: (1..word.len()).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
    })
}
