use rayon::prelude::*;

use crate::combinatorics::next_permutation;

/// Folds `visit` over every permutation of `1..=n`, split across workers by
/// first letter. Each worker starts from `init()` and partial results are
/// merged in first-letter order, so the outcome does not depend on the
/// worker count as long as `merge` is commutative.
pub(crate) fn par_sweep<A, I, V, M>(n: usize, init: I, visit: V, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &[usize]) + Sync,
    M: Fn(A, A) -> A,
{
    if n == 0 {
        let mut acc = init();
        visit(&mut acc, &[]);
        return acc;
    }
    let parts: Vec<A> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut word: Vec<usize> = std::iter::once(first)
                .chain((1..=n).filter(|&v| v != first))
                .collect();
            loop {
                visit(&mut acc, &word);
                if !next_permutation(&mut word[1..]) {
                    break;
                }
            }
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).expect("n >= 1 gives at least one part")
}

/// Number of arcs `(i, j)` of the digraph whose head `j` precedes the tail
/// `i` in `word`.
pub(crate) fn word_inversions(out_mask: impl Fn(usize) -> u64, word: &[usize]) -> usize {
    let mut placed = 0u64;
    let mut inv = 0;
    for &v in word {
        inv += (out_mask(v) & placed).count_ones() as usize;
        placed |= 1 << (v - 1);
    }
    inv
}

pub(crate) fn bump(counts: &mut Vec<u64>, degree: usize) {
    if counts.len() <= degree {
        counts.resize(degree + 1, 0);
    }
    counts[degree] += 1;
}

pub(crate) fn add_counts(into: &mut Vec<u64>, from: &[u64]) {
    if into.len() < from.len() {
        into.resize(from.len(), 0);
    }
    for (a, b) in into.iter_mut().zip(from) {
        *a += b;
    }
}
