use std::collections::HashMap;

use super::statistics::{descent_mask, word_ranks};
use super::sweep::{add_counts, bump, par_sweep, word_inversions};
use super::check_budget;
use crate::combinatorics::Digraph;
use crate::error::Result;
use crate::qsym::{f_to_m, omega_f, reverse_f, Basis, QSymT};
use crate::tpoly::TPoly;

/// `ωX = Σ_{σ ∈ S_n} F_{n, DES_G(σ)} t^{inv(σ)}`, where `G` is the
/// underlying graph of `d`.
pub fn chromatic_qsym_via_f(d: &Digraph, budget: usize) -> Result<QSymT> {
    let n = d.n();
    check_budget(n, budget)?;
    let g = d.underlying();
    let sums = par_sweep(
        n,
        HashMap::<u64, Vec<u64>>::new,
        |acc, word| {
            let mut ranks = [0usize; 64];
            word_ranks(|v| g.neighbors(v), word, &mut ranks[..word.len()]);
            let des = descent_mask(word, &ranks[..word.len()]);
            let inv = word_inversions(|v| d.out_mask(v), word);
            bump(acc.entry(des).or_default(), inv);
        },
        |mut a, b| {
            for (k, v) in b {
                add_counts(a.entry(k).or_default(), &v);
            }
            a
        },
    );
    let mut out = QSymT::zero(n, Basis::Fundamental)?;
    if n == 0 {
        return Ok(out);
    }
    for (mask, counts) in sums {
        let set = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        out.add_term(set, &TPoly::from_counts(&counts))?;
    }
    Ok(out)
}

/// `X` in the `M` basis, recovered from [`chromatic_qsym_via_f`] and the
/// `F → M` expansion.
///
/// On quasisymmetric functions the involution has to both complement and
/// reverse descent sets (`F_α ↦ F_{α^t}`); complementing alone gives the
/// reversal of `X`, which differs from `X` when `X` is not symmetric.
pub fn chromatic_qsym_via_f_m(d: &Digraph, budget: usize) -> Result<QSymT> {
    f_to_m(&reverse_f(&omega_f(&chromatic_qsym_via_f(d, budget)?)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqsf::DEFAULT_FACTORIAL_BUDGET as B;
    use crate::error::Error;

    #[test]
    fn single_edge() {
        let d = Digraph::from_edges(2, &[(1, 2)]).unwrap();
        assert_eq!(chromatic_qsym_via_f(&d, B).unwrap().to_string(), "(1+t)·F[]");
        assert_eq!(chromatic_qsym_via_f_m(&d, B).unwrap().to_string(), "(1+t)·M[1 1]");
    }

    #[test]
    fn single_vertex() {
        let d = Digraph::from_edges(1, &[]).unwrap();
        assert_eq!(chromatic_qsym_via_f(&d, B).unwrap().to_string(), "F[]");
    }

    #[test]
    fn directed_triangle() {
        let d = Digraph::from_edges(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(chromatic_qsym_via_f_m(&d, B).unwrap().to_string(), "(3t+3t²)·M[1 1 1]");
    }

    #[test]
    fn budget() {
        let d = Digraph::from_edges(4, &[]).unwrap();
        assert!(matches!(chromatic_qsym_via_f(&d, 3), Err(Error::Budget { .. })));
    }
}
