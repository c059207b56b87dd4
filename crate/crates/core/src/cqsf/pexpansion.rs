use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::statistics::{descent_mask, g_descent_set, inv_digraph, word_ranks};
use super::sweep::{add_counts, bump, par_sweep, word_inversions};
use super::{chromatic_qsym_direct, check_budget};
use crate::combinatorics::{
    eulerian_polynomial, partitions, z_lambda, Digraph, Graph, Partition, Permutation, Permutations,
};
use crate::error::{Error, Result};
use crate::qsym::{Basis, SymT};
use crate::tpoly::{t_bracket, Rational, TPoly};

/// Contiguous blocks of sizes `λ_1, λ_2, ...` as `(start, end)` positions,
/// 0-based and half open.
fn blocks(lambda: &Partition) -> Vec<(usize, usize)> {
    let mut start = 0;
    lambda
        .parts()
        .iter()
        .map(|&p| {
            let b = (start, start + p);
            start += p;
            b
        })
        .collect()
}

/// Descent positions strictly inside a block, as a mask in the same layout
/// as `descent_mask`. Block boundaries are exempt.
fn interior_mask(blocks: &[(usize, usize)]) -> u64 {
    let mut mask = 0;
    for &(s, e) in blocks {
        // descent at 1-based position i sits between 0-based i-1 and i
        for i in (s + 1)..e {
            mask |= 1 << (i - 1);
        }
    }
    mask
}

/// `last_adjacent[j]`: the latest earlier position holding a neighbor of
/// `word[j]`, if any.
fn last_adjacent(g: &Graph, word: &[usize], out: &mut [Option<usize>]) {
    for j in 0..word.len() {
        let nbrs = g.neighbors(word[j]);
        out[j] = (0..j).rev().find(|&i| nbrs >> (word[i] - 1) & 1 == 1);
    }
}

fn member(blocks: &[(usize, usize)], interior: u64, des: u64, last_adj: &[Option<usize>]) -> bool {
    des & interior == 0
        && blocks
            .iter()
            .all(|&(s, e)| ((s + 1)..e).all(|j| last_adj[j].is_some_and(|i| i >= s)))
}

/// Whether `σ ∈ N_{G,λ}`: in each block every non-initial letter has a
/// `G`-neighbor earlier in the block, and no `G`-descent falls strictly
/// inside a block.
pub fn in_n_g_lambda(g: &Graph, sigma: &Permutation, lambda: &Partition) -> Result<bool> {
    if lambda.weight() != g.n() {
        return Err(Error::invalid(format!(
            "partition {lambda} does not have weight {}",
            g.n()
        )));
    }
    let data = g_descent_set(g, sigma)?;
    let des = data.descents.iter().fold(0u64, |m, &i| m | 1 << (i - 1));
    let bl = blocks(lambda);
    let mut last_adj = vec![None; g.n()];
    last_adjacent(g, sigma.word(), &mut last_adj);
    Ok(member(&bl, interior_mask(&bl), des, &last_adj))
}

/// The members of `N_{G,λ}` in lexicographic order, each with its
/// inversion count against `d`.
pub fn n_g_lambda(g: &Graph, d: &Digraph, lambda: &Partition) -> Result<Vec<(Permutation, usize)>> {
    if d.underlying() != *g {
        return Err(Error::invalid("digraph does not have the given underlying graph"));
    }
    let mut out = Vec::new();
    for sigma in Permutations::new(g.n()) {
        if in_n_g_lambda(g, &sigma, lambda)? {
            let inv = inv_digraph(d, &sigma)?;
            out.push((sigma, inv));
        }
    }
    Ok(out)
}

/// `Σ_{σ ∈ N_{G,λ}} t^{inv(σ)}` for every `λ ⊢ n` in one pass over `S_n`.
pub fn n_lambda_polynomials(d: &Digraph, budget: usize) -> Result<BTreeMap<Partition, TPoly>> {
    let n = d.n();
    check_budget(n, budget)?;
    let g = d.underlying();
    // (λ, block ranges, mask of positions strictly inside a block)
    type Shape = (Partition, Vec<(usize, usize)>, u64);
    let shapes: Vec<Shape> = partitions(n)
        .into_iter()
        .map(|l| {
            let b = blocks(&l);
            let m = interior_mask(&b);
            (l, b, m)
        })
        .collect();
    let counts = par_sweep(
        n,
        || vec![Vec::<u64>::new(); shapes.len()],
        |acc, word| {
            let mut ranks = [0usize; 64];
            let mut last_adj = [None; 64];
            word_ranks(|v| g.neighbors(v), word, &mut ranks[..word.len()]);
            let des = descent_mask(word, &ranks[..word.len()]);
            last_adjacent(&g, word, &mut last_adj[..word.len()]);
            let mut inv = None;
            for (slot, (_, bl, interior)) in acc.iter_mut().zip(&shapes) {
                if member(bl, *interior, des, &last_adj[..word.len()]) {
                    let inv = *inv.get_or_insert_with(|| word_inversions(|v| d.out_mask(v), word));
                    bump(slot, inv);
                }
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(&b) {
                add_counts(x, y);
            }
            a
        },
    );
    Ok(shapes
        .into_iter()
        .zip(counts)
        .map(|((l, _, _), c)| (l, TPoly::from_counts(&c)))
        .collect())
}

/// `ωX` in the power sum basis: the coefficient of `p_λ` is
/// `z_λ^{-1} Σ_{σ ∈ N_{G,λ}} t^{inv(σ)}`.
///
/// Only valid when `X` is symmetric, which is checked first with the
/// coloring oracle.
pub fn p_expansion_via_n(d: &Digraph, budget: usize) -> Result<SymT> {
    let x = chromatic_qsym_direct(d, budget)?;
    if let Some((left, right)) = x.symmetry_witness()? {
        return Err(Error::NotSymmetric { left, right });
    }
    let mut out = SymT::zero(d.n(), Basis::PowerSum)?;
    for (lambda, poly) in n_lambda_polynomials(d, budget)? {
        let z = Rational::from_integer(z_lambda(&lambda));
        let c = poly.scale(&(Rational::from_integer(BigInt::from(1)) / z));
        out.add_term(lambda, &c)?;
    }
    Ok(out)
}

/// Closed form of `Σ_{σ ∈ N_{C_n,λ}} t^{inv(σ)}` for the directed cycle:
/// `n t [n-1]_t` when `λ = (n)`, otherwise `n t A_{k-1}(t) Π [λ_i]_t`.
pub fn cycle_p_coefficient(n: usize, lambda: &Partition) -> Result<TPoly> {
    if n < 2 {
        return Err(Error::invalid("the directed cycle needs n >= 2"));
    }
    if lambda.weight() != n {
        return Err(Error::invalid(format!("partition {lambda} does not have weight {n}")));
    }
    let nt = TPoly::monomial(Rational::from_integer(BigInt::from(n)), 1);
    let k = lambda.len();
    if k == 1 {
        return Ok(&nt * &t_bracket(n - 1));
    }
    Ok(lambda
        .parts()
        .iter()
        .fold(&nt * &eulerian_polynomial(k - 1), |acc, &p| &acc * &t_bracket(p)))
}
