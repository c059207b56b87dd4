//! Oracles that share no code with the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Chromatic polynomial coefficients (ascending powers of `k`) of a simple
/// graph by deletion and contraction.
pub fn chromatic_polynomial(n: usize, edges: &[(usize, usize)]) -> Vec<i64> {
    let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let vertices: BTreeSet<usize> = (1..=n).collect();
    dc(&vertices, &set)
}

fn dc(vertices: &BTreeSet<usize>, edges: &BTreeSet<(usize, usize)>) -> Vec<i64> {
    let Some(&(u, v)) = edges.iter().next() else {
        let mut p = vec![0; vertices.len() + 1];
        p[vertices.len()] = 1;
        return p;
    };
    let mut deleted = edges.clone();
    deleted.remove(&(u, v));

    // Merge v into u, dropping loops and parallel copies.
    let contracted: BTreeSet<(usize, usize)> = deleted
        .iter()
        .map(|&(a, b)| {
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            (a.min(b), a.max(b))
        })
        .filter(|(a, b)| a != b)
        .collect();
    let mut fewer = vertices.clone();
    fewer.remove(&v);

    let mut p = dc(vertices, &deleted);
    for (i, c) in dc(&fewer, &contracted).into_iter().enumerate() {
        p[i] -= c;
    }
    p
}

pub fn eval(p: &[i64], k: i64) -> i64 {
    p.iter().rev().fold(0, |acc, c| acc * k + c)
}

/// All digraphs on `n` vertices: each pair absent, one way, the other way
/// or both.
pub fn all_digraphs(n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| ((u + 1)..=n).map(move |v| (u, v))).collect();
    (0..4usize.pow(pairs.len() as u32))
        .map(|mut code| {
            let mut edges = Vec::new();
            for &(u, v) in &pairs {
                match code % 4 {
                    1 => edges.push((u, v)),
                    2 => edges.push((v, u)),
                    3 => edges.extend([(u, v), (v, u)]),
                    _ => {}
                }
                code /= 4;
            }
            (n, edges)
        })
        .collect()
}
