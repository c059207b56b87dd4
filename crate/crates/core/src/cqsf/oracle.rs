use std::collections::HashMap;

use crate::combinatorics::{Composition, Digraph};
use crate::error::{Error, Result};
use crate::qsym::{Basis, QSymT};
use crate::tpoly::TPoly;

use super::check_budget;

/// A proper coloring `κ: V → [l]` using color `i` exactly `content[i-1]`
/// times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringClass {
    pub content: Composition,
    /// `assignment[v - 1]` is the color of vertex `v`.
    pub assignment: Vec<usize>,
    /// Arcs `(u, v)` with `κ(u) < κ(v)`.
    pub asc: usize,
}

/// Brute force over all `l^n` maps to `[l]`; only for small inputs.
pub fn colorings_with_content(d: &Digraph, content: &Composition) -> Result<Vec<ColoringClass>> {
    let n = d.n();
    if content.weight() != n {
        return Err(Error::invalid(format!(
            "content {content} does not have weight {n}"
        )));
    }
    let l = content.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(ColoringClass { content: content.clone(), assignment: vec![], asc: 0 });
        return Ok(out);
    }
    let mut kappa = vec![1usize; n];
    loop {
        let mut used = vec![0usize; l + 1];
        kappa.iter().for_each(|&c| used[c] += 1);
        let matches_content = used[1..] == *content.parts();
        let proper = d.edges().iter().all(|&(u, v)| kappa[u - 1] != kappa[v - 1]);
        if matches_content && proper {
            let asc = d.edges().iter().filter(|&&(u, v)| kappa[u - 1] < kappa[v - 1]).count();
            out.push(ColoringClass { content: content.clone(), assignment: kappa.clone(), asc });
        }
        // odometer step
        let mut i = 0;
        while i < n && kappa[i] == l {
            kappa[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        kappa[i] += 1;
    }
    Ok(out)
}

/// `X(x, t)` in the `M` basis: the coefficient of `M_α` is `Σ t^{asc(κ)}`
/// over proper colorings with content `α`.
///
/// Colorings are built one color class at a time over vertex subsets: the
/// lowest color takes an independent set `B` of the remaining vertices `R`,
/// and every arc from `B` into `R ∖ B` is an ascent.
pub fn chromatic_qsym_direct(d: &Digraph, budget: usize) -> Result<QSymT> {
    let n = d.n();
    check_budget(n, budget)?;
    let size = 1usize << n;
    let mut independent = vec![true; size];
    for set in 1..size {
        let low = set.trailing_zeros() as usize;
        let rest = set & (set - 1);
        let nbrs = (d.out_mask(low + 1) | d.in_mask(low + 1)) as usize;
        independent[set] = independent[rest] && nbrs & rest == 0;
    }

    // dp[R]: content (as parts) -> counts by number of ascents
    let mut dp: Vec<HashMap<Vec<u8>, Vec<u64>>> = Vec::with_capacity(size);
    dp.push(HashMap::from([(Vec::new(), vec![1u64])]));
    for set in 1..size {
        let mut acc: HashMap<Vec<u8>, Vec<u64>> = HashMap::new();
        let mut block = set;
        while block != 0 {
            if independent[block] {
                let rest = set & !block;
                let mut ascents = 0usize;
                let mut b = block;
                while b != 0 {
                    let v = b.trailing_zeros() as usize + 1;
                    ascents += (d.out_mask(v) as usize & rest).count_ones() as usize;
                    b &= b - 1;
                }
                let first = block.count_ones() as u8;
                for (content, counts) in &dp[rest] {
                    let mut key = Vec::with_capacity(content.len() + 1);
                    key.push(first);
                    key.extend_from_slice(content);
                    let slot = acc.entry(key).or_default();
                    if slot.len() < counts.len() + ascents {
                        slot.resize(counts.len() + ascents, 0);
                    }
                    for (k, &c) in counts.iter().enumerate() {
                        slot[k + ascents] += c;
                    }
                }
            }
            block = (block - 1) & set;
        }
        dp.push(acc);
    }

    let mut out = QSymT::zero(n, Basis::QuasiMonomial)?;
    if n == 0 {
        return Ok(out);
    }
    for (content, counts) in &dp[size - 1] {
        let key = content.iter().map(|&p| p as usize).collect();
        out.add_term(key, &TPoly::from_counts(counts))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions;

    const B: usize = super::super::DEFAULT_FACTORIAL_BUDGET;

    fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
        Digraph::from_edges(n, e).unwrap()
    }

    #[test]
    fn single_edge() {
        let x = chromatic_qsym_direct(&dg(2, &[(1, 2)]), B).unwrap();
        assert_eq!(x.to_string(), "(1+t)·M[1 1]");
    }

    #[test]
    fn single_vertex() {
        let x = chromatic_qsym_direct(&dg(1, &[]), B).unwrap();
        assert_eq!(x.to_string(), "M[1]");
    }

    #[test]
    fn directed_triangle() {
        let x = chromatic_qsym_direct(&dg(3, &[(1, 2), (2, 3), (3, 1)]), B).unwrap();
        assert_eq!(x.to_string(), "(3t+3t²)·M[1 1 1]");
    }

    #[test]
    fn bidirected_pair() {
        let x = chromatic_qsym_direct(&dg(2, &[(1, 2), (2, 1)]), B).unwrap();
        assert_eq!(x.to_string(), "2t·M[1 1]");
    }

    #[test]
    fn edgeless_counts_set_compositions() {
        // coefficient of M_α is the multinomial n!/Π α_i!
        let x = chromatic_qsym_direct(&dg(3, &[]), B).unwrap();
        assert_eq!(x.coeff(&[3]), TPoly::one());
        assert_eq!(x.coeff(&[1, 2]), TPoly::from_ints([3]));
        assert_eq!(x.coeff(&[1, 1, 1]), TPoly::from_ints([6]));
    }

    #[test]
    fn empty_graph_on_zero_vertices() {
        assert!(chromatic_qsym_direct(&dg(0, &[]), B).unwrap().is_empty());
    }

    #[test]
    fn dp_matches_brute_force_colorings() {
        let d = dg(4, &[(1, 2), (3, 2), (3, 4), (4, 1), (1, 3)]);
        let x = chromatic_qsym_direct(&d, B).unwrap();
        for alpha in compositions(4) {
            let mut counts = vec![0u64; 6];
            for k in colorings_with_content(&d, &alpha).unwrap() {
                counts[k.asc] += 1;
            }
            assert_eq!(x.coeff(alpha.parts()), TPoly::from_counts(&counts), "{alpha}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(chromatic_qsym_direct(&dg(5, &[]), 4), Err(Error::Budget { n: 5, budget: 4 })));
    }
}
